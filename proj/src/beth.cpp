#include "labyrinth/beth.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "labyrinth/errors.hpp"
#include "labyrinth/numeric.hpp"

namespace labyrinth::beth {
namespace {

constexpr double kPi = std::numbers::pi;

// Radial integral of g over [0, R0 + delta], core and skin as separate panels
// so the kinks of the profile never fall inside a panel.
template <class G>
double radial_integral(const BeamProfile& p, G&& g, int panels, const numeric::GaussRule& rule) {
  const double core = numeric::integrate(g, 0.0, p.core_radius, panels, rule);
  const double skin =
      numeric::integrate(g, p.core_radius, p.core_radius + p.skin, panels, rule);
  return core + skin;
}

template <class G>
double refined_radial_integral(const BeamProfile& p, G&& g, const RadialQuadrature& quad,
                               const char* what) {
  const auto rule = numeric::gauss_legendre(quad.points);
  const double coarse = radial_integral(p, g, quad.panels, rule);
  const double fine = radial_integral(p, g, 2 * quad.panels, rule);
  if (!std::isfinite(fine) || std::abs(fine - coarse) > quad.tolerance * std::abs(fine)) {
    std::ostringstream msg;
    msg << what << " quadrature did not converge: " << coarse << " vs " << fine;
    throw NumericalError(msg.str());
  }
  return fine;
}

// Vector potentials of the core fields. The upper side has the handedness
// reversed, i.e. the y components flip sign.
struct Potentials {
  double ax, ay, px, py;
};

Potentials core_potentials(double e0, PlateSide side, double z, double t) {
  const double s = side == PlateSide::below ? -1.0 : 1.0;
  const double cz = std::cos(z), sz = std::sin(z);
  return {-2.0 * cz * e0 * std::sin(t), -2.0 * s * sz * e0 * std::sin(t), 2.0 * cz * e0 * std::cos(t),
          2.0 * s * sz * e0 * std::cos(t)};
}

}  // namespace

void BeamProfile::validate() const {
  if (!(amplitude >= 0.0)) throw DomainError("amplitude must be >= 0");
  if (!(core_radius > 0.0)) throw DomainError("core_radius must be > 0");
  if (!(skin > 0.0)) throw DomainError("skin must be > 0");
}

void Frequency::validate() const {
  if (!(omega > 0.0)) throw DomainError("omega must be > 0");
}

void RadialQuadrature::validate() const {
  if (panels < 1) throw DomainError("panels must be >= 1");
  numeric::gauss_legendre(points);
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be > 0");
}

double profile_value(const BeamProfile& p, double r) {
  if (!(r >= 0.0)) throw DomainError("r must be >= 0");
  if (r <= p.core_radius) return p.amplitude;
  if (r >= p.core_radius + p.skin) return 0.0;
  return 0.5 * p.amplitude * (1.0 + std::cos(kPi * (r - p.core_radius) / p.skin));
}

double profile_slope(const BeamProfile& p, double r) {
  if (!(r >= 0.0)) throw DomainError("r must be >= 0");
  if (r <= p.core_radius || r >= p.core_radius + p.skin) return 0.0;
  return -0.5 * p.amplitude * kPi / p.skin * std::sin(kPi * (r - p.core_radius) / p.skin);
}

double beam_power(const BeamProfile& profile, const RadialQuadrature& quad) {
  profile.validate();
  quad.validate();
  if (profile.amplitude == 0.0) return 0.0;
  auto g = [&](double r) {
    const double e = profile_value(profile, r);
    return 2.0 * kPi * e * e * r;
  };
  return refined_radial_integral(profile, g, quad, "beam power");
}

AngularMomentumRoutes angular_momentum_routes(const BeamProfile& profile, const Frequency& freq,
                                              double slice_length,
                                              const RadialQuadrature& quad) {
  profile.validate();
  freq.validate();
  quad.validate();
  if (!(slice_length > 0.0)) throw DomainError("slice_length must be > 0");

  // Route (a): the transverse integrand -(x dx + y dy) E0^2 / 2 over the disc,
  // in polar coordinates with an angular Gauss rule as well.
  const auto angular = numeric::gauss_legendre(quad.points);
  auto ring = [&](double r) {
    if (r == 0.0) return 0.0;
    const double e = profile_value(profile, r);
    const double de = profile_slope(profile, r);
    auto at_angle = [&](double theta) {
      const double x = r * std::cos(theta), y = r * std::sin(theta);
      const double dx = 2.0 * e * de * x / r;
      const double dy = 2.0 * e * de * y / r;
      return -(x * dx + y * dy) / 2.0;
    };
    return numeric::integrate(at_angle, 0.0, 2.0 * kPi, 4, angular) * r;
  };
  AngularMomentumRoutes out{};
  out.jz_integrand =
      profile.amplitude == 0.0 ? 0.0 : refined_radial_integral(profile, ring, quad, "J_z integrand");
  out.jz_integrand *= slice_length / freq.omega;

  const double area = beam_power(profile, quad);
  out.energy = area * slice_length;
  out.jz_direct = out.energy / freq.omega;
  return out;
}

double angular_momentum_per_energy(const BeamProfile& profile, const Frequency& freq,
                                   double slice_length, const RadialQuadrature& quad) {
  const auto routes = angular_momentum_routes(profile, freq, slice_length, quad);
  if (routes.energy == 0.0) throw DomainError("beam carries no energy (amplitude 0)");
  if (std::abs(routes.jz_integrand - routes.jz_direct) >
      10.0 * quad.tolerance * std::abs(routes.jz_direct)) {
    std::ostringstream msg;
    msg << "J_z routes disagree: " << routes.jz_integrand << " vs " << routes.jz_direct;
    throw NumericalError(msg.str());
  }
  return routes.jz_integrand / routes.energy;
}

FieldSample standing_fields(const BeamProfile& profile, double x, double y, double z, double t) {
  profile.validate();
  const double r = std::hypot(x, y);
  const double e0 = profile_value(profile, r);
  const double slope = profile_slope(profile, r);
  const double dx = r > 0.0 ? slope * x / r : 0.0;
  const double dy = r > 0.0 ? slope * y / r : 0.0;
  const double cz = std::cos(z), sz = std::sin(z);
  const double ct = std::cos(t), st = std::sin(t);
  const double wall = sz * dx + cz * dy;
  FieldSample s;
  s.e_field = {2.0 * e0 * cz * ct, -2.0 * e0 * sz * ct, -2.0 * wall * ct};
  s.h_field = {-2.0 * e0 * cz * st, 2.0 * e0 * sz * st, 2.0 * wall * st};
  return s;
}

SpinFluxSample spin_flux_density_at(const BeamProfile& profile, double r, PlateSide side,
                                    double z, double t) {
  profile.validate();
  const double e0 = profile_value(profile, r);
  const double sign = side == PlateSide::below ? 1.0 : -1.0;
  SpinFluxSample out{};
  out.closed_form = sign * 2.0 * e0 * e0 * (std::sin(t) * std::sin(t) + std::cos(t) * std::cos(t));

  // Central difference in z; the raised index flips the sign of d/dz.
  constexpr double h = 2.0 * kPi * 1e-6;
  const auto mid = core_potentials(e0, side, z, t);
  const auto up = core_potentials(e0, side, z + h, t);
  const auto down = core_potentials(e0, side, z - h, t);
  const double dax = -(up.ax - down.ax) / (2.0 * h);
  const double day = -(up.ay - down.ay) / (2.0 * h);
  const double dpx = -(up.px - down.px) / (2.0 * h);
  const double dpy = -(up.py - down.py) / (2.0 * h);
  out.potential = 0.5 * (mid.ax * day - mid.ay * dax) + 0.5 * (mid.px * dpy - mid.py * dpx);
  return out;
}

double spin_flux_density(const BeamProfile& profile, double r, PlateSide side) {
  // Sample a generic (z, t) so neither potential pair vanishes.
  const auto s = spin_flux_density_at(profile, r, side, 0.3, 0.7);
  const double scale = std::max(1.0, std::abs(s.closed_form));
  if (std::abs(s.potential - s.closed_form) > 1e-8 * scale) {
    std::ostringstream msg;
    msg << "spin flux routes disagree: " << s.potential << " vs " << s.closed_form;
    throw NumericalError(msg.str());
  }
  return s.closed_form;
}

double plate_torque(const BeamProfile& profile, const Frequency& freq, const RadialQuadrature& quad) {
  freq.validate();
  return 4.0 * beam_power(profile, quad) / freq.omega;
}

double plate_torque(double power, const Frequency& freq) {
  return 2.0 * single_pass_torque(power, freq);
}

double single_pass_torque(double power, const Frequency& freq) {
  freq.validate();
  if (!(power >= 0.0)) throw DomainError("power must be >= 0");
  return 2.0 * power / freq.omega;
}

}  // namespace labyrinth::beth
