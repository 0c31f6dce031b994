#pragma once

#include <array>

// Circularly polarised cylindrical beam and the reflected double beam of the
// torsion-plate experiment. Gaussian-style units with c = 1. Field formulas use
// the omega = 1 normalisation; Frequency only rescales the torque and J/W.
namespace labyrinth::beth {

/// E0(r): flat plateau on [0, R0], raised-cosine fall to zero over the skin
/// [R0, R0 + delta], zero beyond. C1 everywhere.
struct BeamProfile {
  double amplitude = 1.0;
  double core_radius = 1.0;
  double skin = 0.1;

  void validate() const;
};

struct Frequency {
  double omega = 1.0;  // rad/s

  void validate() const;
};

struct FieldSample {
  std::array<double, 3> e_field;
  std::array<double, 3> h_field;
};

struct RadialQuadrature {
  int panels = 16;  // per region: core and skin are integrated separately
  int points = 7;
  double tolerance = 1e-11;  // relative, between n and 2n panels

  void validate() const;
};

double profile_value(const BeamProfile& profile, double r);

/// dE0/dr.
double profile_slope(const BeamProfile& profile, double r);

/// P = 2 pi int E0^2 r dr.
double beam_power(const BeamProfile& profile, const RadialQuadrature& quad = {});

struct AngularMomentumRoutes {
  double jz_integrand;  // slice integral of -(x d/dx + y d/dy) E0^2 / (2 omega)
  double jz_direct;     // int E0^2 dV / omega
  double energy;        // W = int E0^2 dV
};

AngularMomentumRoutes angular_momentum_routes(const BeamProfile& profile, const Frequency& freq,
                                              double slice_length,
                                              const RadialQuadrature& quad = {});

/// J_z / W. Throws NumericalError when the two routes disagree by more than ten
/// times the quadrature tolerance.
double angular_momentum_per_energy(const BeamProfile& profile, const Frequency& freq,
                                   double slice_length, const RadialQuadrature& quad = {});

/// Real fields of the incident plus reflected beam at (x, y, z, t).
FieldSample standing_fields(const BeamProfile& profile, double x, double y, double z, double t);

enum class PlateSide { below, above };

struct SpinFluxSample {
  double closed_form;  // +-2 E0^2 (sin^2 t + cos^2 t)
  double potential;    // from the vector potentials with a central difference in z
};

/// Y^{xyz} at radius r (core fields, wall terms dropped), both routes.
SpinFluxSample spin_flux_density_at(const BeamProfile& profile, double r, PlateSide side,
                                    double z, double t);

/// Closed-form spin flux density; throws NumericalError if the potential route
/// disagrees at the sampled (z, t).
double spin_flux_density(const BeamProfile& profile, double r, PlateSide side);

/// 4 P / omega: both sides of the plate receive spin flux.
double plate_torque(const BeamProfile& profile, const Frequency& freq,
                    const RadialQuadrature& quad = {});

/// 4 P / omega for a known beam power.
double plate_torque(double power, const Frequency& freq);

/// 2 P / omega.
double single_pass_torque(double power, const Frequency& freq);

}  // namespace labyrinth::beth
