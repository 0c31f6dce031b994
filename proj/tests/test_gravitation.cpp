#include <gtest/gtest.h>

#include <cmath>

#include "labyrinth/constants.hpp"
#include "labyrinth/errors.hpp"
#include "labyrinth/gravitation.hpp"

using namespace labyrinth;
using namespace labyrinth::gravitation;

TEST(HalfNormalChord, ThreeConicKinds) {
  EXPECT_DOUBLE_EQ(half_normal_chord({ConicKind::ellipse, 2.0, 0.5, {}}), 1.5);
  EXPECT_DOUBLE_EQ(half_normal_chord({ConicKind::hyperbola, 2.0, 2.0, {}}), 6.0);
  EXPECT_DOUBLE_EQ(half_normal_chord({ConicKind::parabola, 0.0, 1.0, {2.0, 4.0}}), 4.0);
  EXPECT_THROW(half_normal_chord({ConicKind::ellipse, 2.0, 1.5, {}}), DomainError);
  EXPECT_THROW(half_normal_chord({ConicKind::hyperbola, 2.0, 0.5, {}}), DomainError);
}

TEST(ImprovedForce, ReducesToNewtonForVanishingChord) {
  const auto sun = TwoBodyConfig::sun();
  const double r = 1e11;
  EXPECT_DOUBLE_EQ(improved_gravity_force(sun, 1.0, 0.0, r), -sun.g0 * sun.central_mass / (r * r));
  EXPECT_DOUBLE_EQ(effective_g(sun, 0.0, r), sun.g0);
}

TEST(ImprovedForce, EffectiveGReproducesForce) {
  const auto sun = TwoBodyConfig::sun();
  const double p = 5e10, r = 6e10, m = 3.3e23;
  const double f = improved_gravity_force(sun, m, p, r);
  EXPECT_NEAR(f / (-effective_g(sun, p, r) * sun.central_mass * m / (r * r)), 1.0, 1e-14);
}

TEST(OrbitExcess, MercuryBounds) {
  const auto b = orbit_g_excess(TwoBodyConfig::sun(), constants::kMercurySemimajor,
                                constants::kMercuryEccentricity);
  EXPECT_NEAR(b.lower / 5.038109e-8, 1.0, 0.02);
  EXPECT_NEAR(b.upper / 1.162308e-7, 1.0, 0.02);
  EXPECT_LT(b.lower, b.upper);
}

TEST(Ratios, ConstantDimension) {
  const double r = constants::kEarthRadius, h = constants::kInclineHeight;
  const double lo = g_ratio_constant_dimension(r, constants::kFittedCoulombDim);
  const double hi = g_ratio_constant_dimension(r + h, constants::kFittedCoulombDim);
  for (double v : {lo, hi}) {
    EXPECT_GE(v, 1.001725 - 1e-6);
    EXPECT_LE(v, 1.001735 + 1e-6);
  }
  EXPECT_DOUBLE_EQ(g_ratio_constant_dimension(r, 2.0), 1.0);
  EXPECT_THROW(g_ratio_constant_dimension(0.0, 2.0), DomainError);
}

TEST(Ratios, VariableDimension) {
  const double top = constants::kEarthRadius + constants::kInclineHeight;
  EXPECT_NEAR(g_ratio_variable_dimension(top, constants::kInclineHeight, constants::kDeltaSlope), 1.000012,
              2e-6);
  EXPECT_DOUBLE_EQ(g_ratio_variable_dimension(top, 0.0, constants::kDeltaSlope), 1.0);
  EXPECT_THROW(g_ratio_variable_dimension(top, -1.0, constants::kDeltaSlope), DomainError);
}

TEST(Pioneer, SmallArgumentSeriesIsContinuous) {
  const auto sun = TwoBodyConfig::sun();
  const PioneerParams p{1.0, 1.0};
  // 1 - e^-u (1 + u) ~ u^2/2 - u^3/3 + u^4/8 for small u.
  const double u = 1e-5;
  EXPECT_NEAR(delta_g(sun, p, u) / sun.g0, u * u / 2 - u * u * u / 3 + u * u * u * u / 8, 1e-24);
  EXPECT_NEAR(delta_g(sun, p, 1e-2) / sun.g0, 1.0 - std::exp(-1e-2) * (1.0 + 1e-2), 1e-15);
}

TEST(Pioneer, AlphaInversionRoundTrips) {
  const auto sun = TwoBodyConfig::sun();
  const double lambda = 4e14, r = 3e12, target = 8.74e-10;
  const double alpha = pioneer_alpha_for(sun, lambda, r, target);
  EXPECT_NEAR(std::abs(pioneer_acceleration(sun, {alpha, lambda}, r)) / target, 1.0, 1e-12);
}

TEST(Pioneer, AttractiveForPositiveAlpha) {
  EXPECT_LT(pioneer_acceleration(TwoBodyConfig::sun(), {1e-3, 1e12}, 1e12), 0.0);
}
