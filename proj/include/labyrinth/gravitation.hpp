#pragma once

#include <utility>

namespace labyrinth::gravitation {

struct TwoBodyConfig {
  double g0;            // m^3 kg^-1 s^-2
  double central_mass;  // kg
  double light_speed;   // m/s

  void validate() const;
  static TwoBodyConfig sun();
};

enum class ConicKind { ellipse, hyperbola, parabola };

struct ConicParams {
  ConicKind kind;
  double semimajor = 0.0;                      // m, ellipse / hyperbola
  double eccentricity = 0.0;
  std::pair<double, double> parabola_point{};  // (x, y) in m, parabola

  void validate() const;
};

struct PioneerParams {
  double alpha;   // dimensionless
  double lambda;  // m
};

/// Half normal chord p of the orbit: a(1-e^2), a(e^2-1) or y^2/(2x).
double half_normal_chord(const ConicParams& conic);

/// Improved two-body force -G0 M m / r^2 - 3 G0^2 M^2 m p / (c^2 r^4), in newtons
/// (negative is attractive).
double improved_gravity_force(const TwoBodyConfig& config, double small_mass, double p, double r);

/// Effective coefficient G0 (1 + 3 G0 M p / (c^2 r^2)) that makes the improved
/// force look inverse-square.
double effective_g(const TwoBodyConfig& config, double p, double r);

/// G/G0 = r^(2 - dim) for a constant-dimension fractal force law. r is taken
/// numerically in metres, so the ratio depends on the unit of length.
double g_ratio_constant_dimension(double r, double dim);

/// G/G0 = r^(delta_slope * x) for the variable-dimension law with
/// delta = delta_slope * x.
double g_ratio_variable_dimension(double r, double x, double delta_slope);

/// Extra scale-dependent gravitational coupling
/// dG(r) = G0 alpha [1 - exp(-r/lambda)(1 + r/lambda)].
double delta_g(const TwoBodyConfig& config, const PioneerParams& params, double r);

/// Anomalous acceleration -dG(r) M / r^2 (negative points at the centre).
double pioneer_acceleration(const TwoBodyConfig& config, const PioneerParams& params, double r);

/// alpha giving |a_p(r)| = magnitude for the given lambda (exact inversion).
double pioneer_alpha_for(const TwoBodyConfig& config, double lambda, double r, double magnitude);

struct GBounds {
  double lower;
  double upper;
};

/// Relative excess G/G0 - 1 at perihelion (upper) and aphelion (lower) of an
/// ellipse with the given elements.
GBounds orbit_g_excess(const TwoBodyConfig& config, double semimajor, double eccentricity);

}  // namespace labyrinth::gravitation
