#include "labyrinth/gravitation.hpp"

#include <cmath>
#include <string>

#include "labyrinth/constants.hpp"
#include "labyrinth/errors.hpp"

namespace labyrinth::gravitation {
namespace {

void require_positive_radius(double r) {
  if (!(r > 0.0)) throw DomainError("r must be > 0, got " + std::to_string(r));
}

// 1 - e^{-u}(1 + u), with a series for small u where the subtraction cancels.
double yukawa_bracket(double u) {
  if (u < 1e-3) {
    // u^2/2 - u^3/3 + u^4/8 - u^5/30
    return u * u * (0.5 - u * (1.0 / 3.0 - u * (0.125 - u / 30.0)));
  }
  return -std::expm1(-u) - u * std::exp(-u);
}

}  // namespace

void TwoBodyConfig::validate() const {
  if (!(g0 > 0.0) || !(central_mass > 0.0) || !(light_speed > 0.0)) {
    throw DomainError("g0, central_mass and light_speed must all be > 0");
  }
}

TwoBodyConfig TwoBodyConfig::sun() {
  return {constants::kG0, constants::kSunMass, constants::kLightSpeed};
}

void ConicParams::validate() const {
  switch (kind) {
    case ConicKind::ellipse:
      if (!(semimajor > 0.0)) throw DomainError("ellipse semimajor axis must be > 0");
      if (!(eccentricity >= 0.0 && eccentricity < 1.0)) {
        throw DomainError("ellipse eccentricity must be in [0, 1)");
      }
      break;
    case ConicKind::hyperbola:
      if (!(semimajor > 0.0)) throw DomainError("hyperbola semimajor axis must be > 0");
      if (!(eccentricity > 1.0)) throw DomainError("hyperbola eccentricity must be > 1");
      break;
    case ConicKind::parabola:
      if (!(parabola_point.first > 0.0)) throw DomainError("parabola point needs x > 0");
      break;
  }
}

double half_normal_chord(const ConicParams& conic) {
  conic.validate();
  const double e2 = conic.eccentricity * conic.eccentricity;
  switch (conic.kind) {
    case ConicKind::ellipse:
      return conic.semimajor * (1.0 - e2);
    case ConicKind::hyperbola:
      return conic.semimajor * (e2 - 1.0);
    case ConicKind::parabola: {
      const auto [x, y] = conic.parabola_point;
      return y * y / (2.0 * x);
    }
  }
  return 0.0;
}

double improved_gravity_force(const TwoBodyConfig& config, double small_mass, double p,
                              double r) {
  config.validate();
  require_positive_radius(r);
  const double gm = config.g0 * config.central_mass;
  const double newton = -gm * small_mass / (r * r);
  const double c2 = config.light_speed * config.light_speed;
  return newton - 3.0 * gm * gm * small_mass * p / (c2 * r * r * r * r);
}

double effective_g(const TwoBodyConfig& config, double p, double r) {
  config.validate();
  require_positive_radius(r);
  const double c2 = config.light_speed * config.light_speed;
  return config.g0 * (1.0 + 3.0 * config.g0 * config.central_mass * p / (c2 * r * r));
}

double g_ratio_constant_dimension(double r, double dim) {
  require_positive_radius(r);
  return std::pow(r, 2.0 - dim);
}

double g_ratio_variable_dimension(double r, double x, double delta_slope) {
  require_positive_radius(r);
  if (!(x >= 0.0)) throw DomainError("x must be >= 0");
  return std::pow(r, delta_slope * x);
}

double delta_g(const TwoBodyConfig& config, const PioneerParams& params, double r) {
  config.validate();
  require_positive_radius(r);
  if (!(params.lambda > 0.0)) throw DomainError("lambda must be > 0");
  return config.g0 * params.alpha * yukawa_bracket(r / params.lambda);
}

double pioneer_acceleration(const TwoBodyConfig& config, const PioneerParams& params,
                            double r) {
  return -delta_g(config, params, r) * config.central_mass / (r * r);
}

double pioneer_alpha_for(const TwoBodyConfig& config, double lambda, double r,
                         double magnitude) {
  config.validate();
  require_positive_radius(r);
  if (!(lambda > 0.0)) throw DomainError("lambda must be > 0");
  return magnitude * r * r / (config.g0 * config.central_mass * yukawa_bracket(r / lambda));
}

GBounds orbit_g_excess(const TwoBodyConfig& config, double semimajor, double eccentricity) {
  const double p = half_normal_chord({ConicKind::ellipse, semimajor, eccentricity, {}});
  const double perihelion = semimajor * (1.0 - eccentricity);
  const double aphelion = semimajor * (1.0 + eccentricity);
  return {effective_g(config, p, aphelion) / config.g0 - 1.0,
          effective_g(config, p, perihelion) / config.g0 - 1.0};
}

}  // namespace labyrinth::gravitation
