#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace labyrinth::bell_info {

/// Correlation of spin outcomes as a function of the analyser angle (radians).
using CorrelationFn = std::function<double(double)>;

struct BellValue {
  double lhs;
  bool satisfied;  // lhs <= 1
};

/// |C(phi) - C(delta)| - C(delta - phi). Throws RangeError when C leaves [-1, 1].
BellValue bell_lhs(const CorrelationFn& c, double phi, double delta);

/// bell_lhs plus the union and intersection correlation terms.
BellValue modified_bell_lhs(const CorrelationFn& c, double phi, double delta, double c_union,
                            double c_intersect);

enum class Theory { dempster_shafer, dsmt, uft };

struct MassAssignment {
  double m_a = 0.0;
  double m_b = 0.0;
  double m_union = 0.0;
  double m_intersect = 0.0;
  // m(~A), m(~B), m(~(A u B)), m(~(A n B)); only the unified theory uses them.
  std::optional<std::array<double, 4>> negations;
};

struct MassCheck {
  bool valid;
  std::string diagnostic;  // empty when valid
};

MassCheck validate_masses(const MassAssignment& m, Theory theory);

/// Shannon entropy in bits, 0 log 0 = 0. Throws DomainError unless p is a
/// distribution (entries >= 0, sum 1 within 1e-12).
double entropy(const std::vector<double>& p);

using JointGrid = std::vector<std::vector<double>>;

struct InformationSummary {
  double h_x;
  double h_y;
  double h_xy;
  double mutual;         // H(X) + H(Y) - H(X,Y)
  double h_x_given_y;    // H(X,Y) - H(Y)
};

InformationSummary mutual_information(const JointGrid& joint);

/// 2x2 Hermitian, unit trace, positive semidefinite (eigenvalues >= -1e-12).
class QubitDensity {
 public:
  QubitDensity(std::complex<double> r00, std::complex<double> r01, std::complex<double> r10,
               std::complex<double> r11);

  static QubitDensity pure(std::complex<double> alpha, std::complex<double> beta);

  std::array<double, 2> eigenvalues() const;
  double p00() const { return p00_; }
  double p11() const { return p11_; }
  std::complex<double> off_diagonal() const { return off_; }

  friend QubitDensity mix(const std::vector<std::pair<double, QubitDensity>>& ensemble);

 private:
  QubitDensity(double p00, double p11, std::complex<double> off);

  double p00_, p11_;
  std::complex<double> off_;  // rho_01
};

/// sum p_i rho_i; the weights must form a distribution.
QubitDensity mix(const std::vector<std::pair<double, QubitDensity>>& ensemble);

/// -Tr rho log2 rho.
double von_neumann_entropy(const QubitDensity& rho);

/// S(sum p_i rho_i) - sum p_i S(rho_i), in bits.
double holevo_quantity(const std::vector<std::pair<double, QubitDensity>>& ensemble);

struct EntropicTerms {
  double h_sigma_z, h_sigma_x, h_cond_z, h_cond_x, h_union, h_intersect;
};

/// H(sz) + H(sx) - [H(sz|XY) + H(sx|XY)] + H(sz u sx) + H(sz n sx) <= 1, as
/// arithmetic on the supplied terms.
BellValue entropic_uncertainty_check(const EntropicTerms& terms);

/// k T ln 2.
double landauer_energy(double temperature, double boltzmann);

/// T_c / T = ln 2.
double critical_temperature_ratio();

/// (2 / omega) k T ln 2.
double planck_estimate(double omega, double temperature, double boltzmann);

/// Temperature at which planck_estimate returns hbar.
double temperature_for_planck(double omega, double hbar, double boltzmann);

struct LhvEstimate {
  double c_phi;
  double c_delta;
  double c_diff;  // C(delta - phi)
  double lhs;
  double sigma;   // standard error of lhs
  std::int64_t samples;
  bool within(double k_sigma) const { return lhs <= 1.0 + k_sigma * sigma; }
};

/// Local hidden variables: lambda = (u, s), u uniform angle, s uniform in
/// [-1/2, 1/2]; A(theta) = sign(cos(theta - u) - s), B = -A. Correlations are
/// estimated from the same samples at analyser pairs (0, phi), (0, delta),
/// (phi, delta).
LhvEstimate simulate_lhv(double phi, double delta, std::int64_t samples, std::uint64_t seed);

}  // namespace labyrinth::bell_info
