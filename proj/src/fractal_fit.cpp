#include "labyrinth/fractal_fit.hpp"

#include <cmath>
#include <sstream>

#include "labyrinth/numeric.hpp"

namespace labyrinth::fractal_fit {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kLnSqrt2 = 0.34657359027997264;

void check_abscissa(const InclineSetup& setup, double x_p) {
  if (!(x_p >= -setup.incline_height && x_p <= 0.0)) {
    std::ostringstream msg;
    msg << "x_p=" << x_p << " outside [-H, 0] with H=" << setup.incline_height;
    throw DomainError(msg.str());
  }
}

// Energy route without argument checks. Uses r^2 - (R+H)^2 = 2(x+H)(x-R) so the
// bracket keeps full relative precision next to the start point.
double energy_sq(const InclineSetup& s, double dim, double x) {
  const double rh = s.globe_radius + s.incline_height;
  const double rel = 2.0 * (x + s.incline_height) * (x - s.globe_radius) / (rh * rh);
  const double log_ratio = 0.5 * std::log1p(rel);
  const double k = dim - 1.0;
  return 2.0 * s.coulomb_coeff / k * std::pow(rh, -k) * std::expm1(-k * log_ratio);
}

// Straight-line specialisation of path_integrand: slope 1, y = H + x.
struct StraightIntegrand {
  double log_k;
  double half_dim;
  double power;  // 1 / (1 + eps)
  double h;
  double r;

  StraightIntegrand(const InclineSetup& s, const LawParams& p)
      : log_k(std::log(s.coulomb_coeff)),
        half_dim(0.5 * p.dim),
        power(1.0 / (1.0 + p.eps)),
        h(s.incline_height),
        r(s.globe_radius) {}

  double operator()(double x) const {
    const double dx = h + x;
    const double dy = r - x;
    const double log_force = log_k - half_dim * std::log(dx * dx + dy * dy) - kLnSqrt2;
    return std::exp(power * log_force) * kSqrt2;
  }
};

}  // namespace

void InclineSetup::validate() const {
  if (!(coulomb_coeff > 0.0)) throw DomainError("coulomb_coeff must be > 0");
  if (!(globe_radius > 0.0)) throw DomainError("globe_radius must be > 0");
  if (!(incline_height > 0.0)) throw DomainError("incline_height must be > 0");
}

InclineSetup InclineSetup::example1() { return {3.99e14, 6.37e6, 6.37e5}; }

void LawParams::validate() const {
  if (!(dim > 1.0)) throw DomainError("dim must be > 1 (potential diverges at dim = 1)");
  if (!(1.0 + eps > 0.0)) throw DomainError("1 + eps must be > 0");
}

void QuadratureConfig::validate() const {
  if (panels < 1) throw DomainError("quadrature panels must be >= 1");
  if (points_per_panel != 3 && points_per_panel != 5 && points_per_panel != 7) {
    throw DomainError("points_per_panel must be 3, 5 or 7");
  }
  if (!(refinement_tolerance > 0.0)) throw DomainError("refinement_tolerance must be > 0");
}

void SearchConfig::validate() const {
  if (!(dim_lo <= dim_hi) || !(eps_lo <= eps_hi)) throw DomainError("empty search bounds");
  if (!(dim_lo > 1.0) || !(1.0 + eps_lo > 0.0)) {
    throw DomainError("search bounds leave the valid parameter region");
  }
  if (!(minimizer_tolerance > 0.0)) throw DomainError("minimizer_tolerance must be > 0");
  if (!(stop_threshold > 0.0)) throw DomainError("stop_threshold must be > 0");
  if (max_sweeps < 1) throw DomainError("max_sweeps must be >= 1");
  quad.validate();
}

InclinePath InclinePath::straight(const InclineSetup& setup) {
  const double h = setup.incline_height;
  return {[h](double x) { return h + x; }, [](double) { return 1.0; }};
}

double velocity_sq_energy(const InclineSetup& setup, double dim, double x_p) {
  setup.validate();
  if (!(dim > 1.0)) throw DomainError("dim must be > 1");
  check_abscissa(setup, x_p);
  return energy_sq(setup, dim, x_p);
}

double path_integrand(const InclineSetup& setup, const LawParams& params, double x, double y,
                      double slope) {
  const double dx = setup.incline_height + x;
  const double dy = setup.globe_radius + setup.incline_height - y;
  const double stretch = std::sqrt(1.0 + slope * slope);
  const double force =
      setup.coulomb_coeff * slope / (std::pow(dx * dx + dy * dy, 0.5 * params.dim) * stretch);
  if (force < 0.0) {
    std::ostringstream msg;
    msg << "tangential force is negative at x=" << x
        << "; fractional power of a negative value is undefined";
    throw DomainError(msg.str());
  }
  return std::pow(force, 1.0 / (1.0 + params.eps)) * stretch;
}

double velocity_sq_law_along(const InclineSetup& setup, const InclinePath& path,
                             const LawParams& params, double x_p,
                             const QuadratureConfig& quad) {
  setup.validate();
  params.validate();
  quad.validate();
  check_abscissa(setup, x_p);

  const auto rule = numeric::gauss_legendre(quad.points_per_panel);
  auto f = [&](double x) { return path_integrand(setup, params, x, path.height(x), path.slope(x)); };
  const double coarse = numeric::integrate(f, -setup.incline_height, x_p, quad.panels, rule);
  const double fine = numeric::integrate(f, -setup.incline_height, x_p, 2 * quad.panels, rule);
  if (!std::isfinite(fine) ||
      std::abs(fine - coarse) > quad.refinement_tolerance * std::abs(fine)) {
    std::ostringstream msg;
    msg << "velocity quadrature did not converge: " << coarse << " vs " << fine;
    throw NumericalError(msg.str());
  }
  return 2.0 * fine;
}

double velocity_sq_law(const InclineSetup& setup, const LawParams& params, double x_p,
                       const QuadratureConfig& quad) {
  return velocity_sq_law_along(setup, InclinePath::straight(setup), params, x_p, quad);
}

double functional_pi(const InclineSetup& setup, const LawParams& params,
                     const QuadratureConfig& quad) {
  setup.validate();
  params.validate();
  quad.validate();

  const auto rule = numeric::gauss_legendre(quad.points_per_panel);
  const StraightIntegrand accel(setup, params);
  const double h = setup.incline_height;
  const double width = h / quad.panels;
  const double half = 0.5 * width;

  // The squared speed at each outer node is the running panel sum plus a
  // sub-panel integral from the panel's left edge to the node.
  double cumulative = 0.0;
  numeric::CompensatedSum pi;
  for (int p = 0; p < quad.panels; ++p) {
    const double left = -h + p * width;
    const double mid = left + half;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double x = mid + half * rule.nodes[k];
      const double law = 2.0 * (cumulative + numeric::integrate_once(accel, left, x, rule));
      const double energy = energy_sq(setup, params.dim, x);
      const double mismatch = law / energy - 1.0;
      pi.add(half * rule.weights[k] * mismatch * mismatch);
    }
    cumulative += numeric::integrate_once(accel, left, left + width, rule);
  }
  if (!std::isfinite(pi.value())) {
    throw NumericalError("velocity integration produced a non-finite value");
  }
  return pi.value();
}

double functional_pi_with(const InclineSetup& setup, double dim,
                          const std::function<double(double)>& law_velocity_sq,
                          const QuadratureConfig& quad) {
  setup.validate();
  LawParams{dim, 0.0}.validate();
  quad.validate();
  const auto rule = numeric::gauss_legendre(quad.points_per_panel);
  auto integrand = [&](double x) {
    const double mismatch = law_velocity_sq(x) / energy_sq(setup, dim, x) - 1.0;
    return mismatch * mismatch;
  };
  const double value =
      numeric::integrate(integrand, -setup.incline_height, 0.0, quad.panels, rule);
  if (!std::isfinite(value)) throw NumericalError("functional evaluated to a non-finite value");
  return value;
}

FitResult optimize_alternating(const InclineSetup& setup, const LawParams& init,
                               const SearchConfig& search) {
  setup.validate();
  init.validate();
  search.validate();
  if (init.dim < search.dim_lo || init.dim > search.dim_hi || init.eps < search.eps_lo ||
      init.eps > search.eps_hi) {
    throw DomainError("initial parameters lie outside the search bounds");
  }

  LawParams current = init;
  double current_pi = functional_pi(setup, current, search.quad);

  FitResult result{};
  result.trace.push_back({"initial", current.dim, current.eps, current_pi});

  auto finish = [&]() {
    result.dim = current.dim;
    result.eps = current.eps;
    result.pi_value = current_pi;
    result.vB2_energy = energy_sq(setup, current.dim, 0.0);
    result.vB2_law = velocity_sq_law(setup, current, 0.0, search.quad);
    return result;
  };

  // One stage: minimise over a single coordinate, accept only a strict
  // decrease. Returns true when the relative gain drops below the threshold.
  auto stage = [&](bool over_eps, int sweep) {
    const auto fixed = current;
    numeric::Minimum best;
    if (over_eps) {
      best = numeric::golden_section(
          [&](double e) { return functional_pi(setup, {fixed.dim, e}, search.quad); },
          search.eps_lo, search.eps_hi, search.minimizer_tolerance);
    } else {
      best = numeric::golden_section(
          [&](double d) { return functional_pi(setup, {d, fixed.eps}, search.quad); },
          search.dim_lo, search.dim_hi, search.minimizer_tolerance);
    }
    double gain = 0.0;
    if (best.value < current_pi) {
      gain = (current_pi - best.value) / current_pi;
      (over_eps ? current.eps : current.dim) = best.x;
      current_pi = best.value;
      result.trace.push_back({"sweep " + std::to_string(sweep) + (over_eps ? ": eps" : ": dim"),
                              current.dim, current.eps, current_pi});
    }
    return gain < search.stop_threshold;
  };

  for (int sweep = 1; sweep <= search.max_sweeps; ++sweep) {
    result.sweeps = sweep;
    if (stage(true, sweep)) return finish();
    if (stage(false, sweep)) return finish();
  }

  std::ostringstream msg;
  msg << "alternating search did not meet the stop threshold " << search.stop_threshold
      << " within " << search.max_sweeps << " sweeps (last Pi=" << current_pi
      << ", dim=" << current.dim << ", eps=" << current.eps << ")";
  throw FitConvergenceError(msg.str(), finish());
}

}  // namespace labyrinth::fractal_fit
