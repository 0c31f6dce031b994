#include "labyrinth/bell_info.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "labyrinth/errors.hpp"

namespace labyrinth::bell_info {
namespace {

constexpr double kSumTol = 1e-12;

double query(const CorrelationFn& c, double theta) {
  const double v = c(theta);
  if (!(v >= -1.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << "correlation C(" << theta << ") = " << v << " lies outside [-1, 1]";
    throw RangeError(msg.str());
  }
  return v;
}

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void require_temperature(double t) {
  if (!(t >= 0.0)) throw DomainError("temperature must be >= 0");
}

}  // namespace

BellValue bell_lhs(const CorrelationFn& c, double phi, double delta) {
  const double lhs =
      std::abs(query(c, phi) - query(c, delta)) - query(c, delta - phi);
  return {lhs, lhs <= 1.0};
}

BellValue modified_bell_lhs(const CorrelationFn& c, double phi, double delta, double c_union,
                            double c_intersect) {
  for (double v : {c_union, c_intersect}) {
    if (!(v >= -1.0 && v <= 1.0)) throw RangeError("union/intersection terms must lie in [-1, 1]");
  }
  const double lhs = bell_lhs(c, phi, delta).lhs + c_union + c_intersect;
  return {lhs, lhs <= 1.0};
}

MassCheck validate_masses(const MassAssignment& m, Theory theory) {
  std::vector<std::pair<const char*, double>> active{{"m(A)", m.m_a}, {"m(B)", m.m_b},
                                                     {"m(AuB)", m.m_union}};
  if (theory == Theory::dempster_shafer && m.m_intersect != 0.0) {
    return {false, "m(AnB) must be 0 in Dempster-Shafer theory"};
  }
  if (theory != Theory::dempster_shafer) active.emplace_back("m(AnB)", m.m_intersect);
  if (theory == Theory::uft) {
    if (!m.negations) return {false, "unified theory needs the four negation masses"};
    const char* names[] = {"m(~A)", "m(~B)", "m(~(AuB))", "m(~(AnB))"};
    for (int i = 0; i < 4; ++i) active.emplace_back(names[i], (*m.negations)[i]);
  } else if (m.negations) {
    return {false, "negation masses only apply to the unified theory"};
  }
  double sum = 0.0;
  for (const auto& [name, v] : active) {
    if (!(v >= 0.0 && v <= 1.0)) return {false, std::string(name) + " must lie in [0, 1]"};
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "masses sum to " << sum << ", not 1";
    return {false, msg.str()};
  }
  return {true, ""};
}

double entropy(const std::vector<double>& p) {
  if (p.empty()) throw DomainError("distribution is empty");
  double sum = 0.0, h = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw DomainError("probabilities must be >= 0");
    sum += v;
    h += plogp(v);
  }
  if (std::abs(sum - 1.0) > kSumTol) throw DomainError("probabilities must sum to 1");
  return h;
}

InformationSummary mutual_information(const JointGrid& joint) {
  if (joint.empty() || joint.front().empty()) throw DomainError("joint grid is empty");
  const std::size_t cols = joint.front().size();
  std::vector<double> px(joint.size(), 0.0), py(cols, 0.0), flat;
  for (std::size_t i = 0; i < joint.size(); ++i) {
    if (joint[i].size() != cols) throw DomainError("joint grid rows differ in length");
    for (std::size_t j = 0; j < cols; ++j) {
      px[i] += joint[i][j];
      py[j] += joint[i][j];
      flat.push_back(joint[i][j]);
    }
  }
  InformationSummary s{};
  s.h_xy = entropy(flat);
  s.h_x = entropy(px);
  s.h_y = entropy(py);
  s.mutual = std::max(0.0, s.h_x + s.h_y - s.h_xy);
  s.h_x_given_y = s.h_xy - s.h_y;
  return s;
}

QubitDensity::QubitDensity(double p00, double p11, std::complex<double> off)
    : p00_(p00), p11_(p11), off_(off) {}

QubitDensity::QubitDensity(std::complex<double> r00, std::complex<double> r01,
                           std::complex<double> r10, std::complex<double> r11)
    : p00_(r00.real()), p11_(r11.real()), off_(r01) {
  constexpr double tol = 1e-12;
  if (std::abs(r00.imag()) > tol || std::abs(r11.imag()) > tol ||
      std::abs(r01 - std::conj(r10)) > tol) {
    throw DomainError("density matrix must be Hermitian");
  }
  if (std::abs(p00_ + p11_ - 1.0) > tol) throw DomainError("density matrix must have unit trace");
  if (eigenvalues()[0] < -tol) throw DomainError("density matrix must be positive semidefinite");
}

QubitDensity QubitDensity::pure(std::complex<double> alpha, std::complex<double> beta) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (!(norm > 0.0)) throw DomainError("state vector must be nonzero");
  alpha /= std::sqrt(norm);
  beta /= std::sqrt(norm);
  return QubitDensity(std::norm(alpha), std::norm(beta), alpha * std::conj(beta));
}

std::array<double, 2> QubitDensity::eigenvalues() const {
  const double mean = 0.5 * (p00_ + p11_);
  const double radius = std::hypot(0.5 * (p00_ - p11_), std::abs(off_));
  return {mean - radius, mean + radius};
}

QubitDensity mix(const std::vector<std::pair<double, QubitDensity>>& ensemble) {
  if (ensemble.empty()) throw DomainError("ensemble is empty");
  double sum = 0.0, p00 = 0.0, p11 = 0.0;
  std::complex<double> off{};
  for (const auto& [w, rho] : ensemble) {
    if (!(w >= 0.0)) throw DomainError("ensemble weights must be >= 0");
    sum += w;
    p00 += w * rho.p00_;
    p11 += w * rho.p11_;
    off += w * rho.off_;
  }
  if (std::abs(sum - 1.0) > kSumTol) throw DomainError("ensemble weights must sum to 1");
  return QubitDensity(p00, p11, off);
}

double von_neumann_entropy(const QubitDensity& rho) {
  const auto ev = rho.eigenvalues();
  return plogp(std::max(0.0, ev[0])) + plogp(std::min(1.0, ev[1]));
}

double holevo_quantity(const std::vector<std::pair<double, QubitDensity>>& ensemble) {
  const double mixed = von_neumann_entropy(mix(ensemble));
  double average = 0.0;
  for (const auto& [w, rho] : ensemble) average += w * von_neumann_entropy(rho);
  return std::clamp(mixed - average, 0.0, mixed);
}

BellValue entropic_uncertainty_check(const EntropicTerms& t) {
  for (double v : {t.h_sigma_z, t.h_sigma_x, t.h_cond_z, t.h_cond_x, t.h_union, t.h_intersect}) {
    if (!(v >= 0.0)) throw DomainError("entropy terms must be >= 0");
  }
  const double lhs =
      t.h_sigma_z + t.h_sigma_x - (t.h_cond_z + t.h_cond_x) + t.h_union + t.h_intersect;
  return {lhs, lhs <= 1.0};
}

double landauer_energy(double temperature, double boltzmann) {
  require_temperature(temperature);
  return boltzmann * temperature * std::numbers::ln2;
}

double critical_temperature_ratio() { return std::numbers::ln2 / std::log(std::numbers::e); }

double planck_estimate(double omega, double temperature, double boltzmann) {
  if (!(omega > 0.0)) throw DomainError("omega must be > 0");
  require_temperature(temperature);
  return 2.0 / omega * boltzmann * temperature * std::numbers::ln2;
}

double temperature_for_planck(double omega, double hbar, double boltzmann) {
  if (!(omega > 0.0)) throw DomainError("omega must be > 0");
  if (!(boltzmann > 0.0)) throw DomainError("boltzmann must be > 0");
  return hbar * omega / (2.0 * boltzmann * std::numbers::ln2);
}

LhvEstimate simulate_lhv(double phi, double delta, std::int64_t samples, std::uint64_t seed) {
  if (samples < 2) throw DomainError("need at least 2 samples");
  std::mt19937_64 rng(seed);
  auto outcome = [](double theta, double u, double s) { return std::cos(theta - u) >= s ? 1 : -1; };

  // B = -A at the same setting, so C(a, b) = -<A(a) A(b)>.
  std::int64_t sum_phi = 0, sum_delta = 0, sum_diff = 0;
  std::vector<std::array<std::int8_t, 3>> products;
  products.reserve(static_cast<std::size_t>(samples));
  for (std::int64_t i = 0; i < samples; ++i) {
    const double u = 2.0 * std::numbers::pi * uniform01(rng);
    const double s = uniform01(rng) - 0.5;
    const int a0 = outcome(0.0, u, s), ap = outcome(phi, u, s), ad = outcome(delta, u, s);
    const std::array<std::int8_t, 3> row{static_cast<std::int8_t>(-a0 * ap),
                                         static_cast<std::int8_t>(-a0 * ad),
                                         static_cast<std::int8_t>(-ap * ad)};
    sum_phi += row[0];
    sum_delta += row[1];
    sum_diff += row[2];
    products.push_back(row);
  }
  const double n = static_cast<double>(samples);
  LhvEstimate e{};
  e.samples = samples;
  e.c_phi = sum_phi / n;
  e.c_delta = sum_delta / n;
  e.c_diff = sum_diff / n;
  e.lhs = std::abs(e.c_phi - e.c_delta) - e.c_diff;

  // Per-sample linearisation of lhs for its standard error.
  const double sign = e.c_phi >= e.c_delta ? 1.0 : -1.0;
  double var = 0.0;
  for (const auto& row : products) {
    const double v = sign * (row[0] - row[1]) - row[2];
    var += (v - e.lhs) * (v - e.lhs);
  }
  var /= (n - 1.0);
  e.sigma = std::sqrt(var / n);
  return e;
}

}  // namespace labyrinth::bell_info
