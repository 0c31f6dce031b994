#pragma once

#include <algorithm>
#include <cmath>
#include <span>

namespace labyrinth::numeric {

/// Worker threads for internal parallel loops: LABYRINTH_THREADS when set to a
/// positive integer, else the machine's hardware concurrency (at least 1).
int worker_count();

struct GaussRule {
  std::span<const double> nodes;    // on [-1, 1]
  std::span<const double> weights;
};

/// Gauss-Legendre rule with 3, 5 or 7 points. Throws DomainError otherwise.
GaussRule gauss_legendre(int points);

/// Composite Gauss-Legendre integral of f over [a, b] with equal panels.
/// Never samples the interval endpoints.
template <class F>
double integrate(F&& f, double a, double b, int panels, const GaussRule& rule) {
  if (a == b) return 0.0;
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double panel_sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      panel_sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    }
    total += half * panel_sum;
  }
  return total;
}

/// Integral over a single interval with one application of the rule.
template <class F>
double integrate_once(F&& f, double a, double b, const GaussRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return half * sum;
}

struct Minimum {
  double x;
  double value;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
/// Stops once the bracket is narrower than tol. Equal values resolve toward
/// the smaller abscissa so results are reproducible.
template <class F>
Minimum golden_section(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  if (hi - lo <= tol) {
    const double x = 0.5 * (lo + hi);
    return {x, f(x)};
  }
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  // Endpoints of the original bracket are candidates too: the search never
  // evaluates them, and a monotone f has its minimum there.
  Minimum best = fc <= fd ? Minimum{c, fc} : Minimum{d, fd};
  for (double edge : {lo, hi}) {
    if (std::abs(edge - best.x) <= 2.0 * tol) {
      const double fe = f(edge);
      if (fe < best.value) best = {edge, fe};
    }
  }
  return best;
}

/// Kahan-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double y = v - carry_;
    const double t = total_ + y;
    carry_ = (t - total_) - y;
    total_ = t;
  }
  double value() const { return total_; }

 private:
  double total_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace labyrinth::numeric
