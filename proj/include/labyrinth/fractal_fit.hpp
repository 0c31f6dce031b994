#pragma once

#include <functional>
#include <string>
#include <vector>

#include "labyrinth/errors.hpp"

// Charged ball rolling down an incline in the field of a charged globe.
//
// Two velocity laws are compared along the path:
//   * energy conservation with the fractal Coulomb potential
//     V = -K / ((D-1) r^(D-1)), and
//   * direct integration of the improved Newton law F = m a^(1+eps) with the
//     fractal Coulomb force K / r^D projected onto the path tangent.
// The functional Pi integrates the squared relative mismatch of the two
// squared velocities over the path; the fit searches (D, eps) minimising it.
//
// Coordinates: the globe centre sits at distance R + H below the start point
// A = (-H, 0). The straight incline is y = H + x for x in [-H, 0] and ends at
// B = (0, H). All lengths are in metres.
namespace labyrinth::fractal_fit {

struct InclineSetup {
  double coulomb_coeff;   // K = k q1 q2 / m, m^3/s^2
  double globe_radius;    // R, m
  double incline_height;  // H, m

  void validate() const;

  /// Globe of Earth's radius, H = R/10, K = 3.99e14 m^3/s^2.
  static InclineSetup example1();
};

struct LawParams {
  double dim = 2.0;  // Coulomb exponent D
  double eps = 0.0;  // Newton exponent increment

  void validate() const;
};

struct QuadratureConfig {
  int panels = 2048;
  int points_per_panel = 5;
  double refinement_tolerance = 1e-9;  // relative

  void validate() const;
};

struct SearchConfig {
  double dim_lo = 1.9;
  double dim_hi = 2.1;
  double eps_lo = -0.05;
  double eps_hi = 0.05;
  double minimizer_tolerance = 1e-6;  // absolute, in parameter units
  double stop_threshold = 1e-4;       // relative Pi improvement between stages
  int max_sweeps = 10;
  QuadratureConfig quad{};

  void validate() const;
};

struct FitStage {
  std::string label;
  double dim;
  double eps;
  double pi_value;
};

struct FitResult {
  double dim;
  double eps;
  double pi_value;    // m
  double vB2_energy;  // m^2/s^2 at B
  double vB2_law;     // m^2/s^2 at B
  std::vector<FitStage> trace;
  int sweeps = 0;
};

/// Raised when the sweep cap is reached; `partial()` holds the best state seen.
class FitConvergenceError : public ConvergenceError {
 public:
  FitConvergenceError(const std::string& what, FitResult partial)
      : ConvergenceError(what), partial_(std::move(partial)) {}
  const FitResult& partial() const noexcept { return partial_; }

 private:
  FitResult partial_;
};

/// A general rolling curve y(x) on [-H, 0] with its slope y'(x).
struct InclinePath {
  std::function<double(double)> height;
  std::function<double(double)> slope;

  static InclinePath straight(const InclineSetup& setup);
};

/// Squared speed at x_p from energy conservation under the fractal potential.
double velocity_sq_energy(const InclineSetup& setup, double dim, double x_p);

/// Squared speed at x_p from integrating the improved force and Newton laws
/// along the straight incline. Refines once (doubling panels) and throws
/// NumericalError when the two estimates differ by more than the tolerance.
double velocity_sq_law(const InclineSetup& setup, const LawParams& params, double x_p,
                       const QuadratureConfig& quad = {});

/// Same as velocity_sq_law for an arbitrary path. Throws DomainError where the
/// tangential force turns negative (a fractional power of it is undefined).
double velocity_sq_law_along(const InclineSetup& setup, const InclinePath& path,
                             const LawParams& params, double x_p,
                             const QuadratureConfig& quad = {});

/// Integrand of the path integral for v^2/2 at abscissa x:
/// (K y' / (r^D sqrt(1+y'^2)))^(1/(1+eps)) * sqrt(1+y'^2).
double path_integrand(const InclineSetup& setup, const LawParams& params, double x,
                      double y, double slope);

/// Pi = integral over [-H, 0] of (v^2/v'^2 - 1)^2 dx, in metres.
double functional_pi(const InclineSetup& setup, const LawParams& params,
                     const QuadratureConfig& quad = {});

/// Pi with a caller-supplied squared-speed law in place of the force law.
/// Used to check the functional against known mismatch profiles.
double functional_pi_with(const InclineSetup& setup, double dim,
                          const std::function<double(double)>& law_velocity_sq,
                          const QuadratureConfig& quad = {});

/// Alternating one-dimensional minimisation of Pi: eps with D fixed, then D
/// with eps fixed, repeated until a stage improves Pi by less than
/// stop_threshold (relative). Throws FitConvergenceError after max_sweeps.
FitResult optimize_alternating(const InclineSetup& setup, const LawParams& init,
                               const SearchConfig& search = {});

}  // namespace labyrinth::fractal_fit
