#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <chrono>
#include <cmath>

#include "labyrinth/fractal_fit.hpp"

using namespace labyrinth;
using namespace labyrinth::fractal_fit;

namespace {

const InclineSetup kEx = InclineSetup::example1();

// 50-digit evaluation of 2K/(D-1) (r^-(D-1) - (R+H)^-(D-1)).
double energy_oracle(double dim, double x) {
  using F = boost::multiprecision::cpp_dec_float_50;
  const F k = kEx.coulomb_coeff, r = kEx.globe_radius, h = kEx.incline_height, xx = x, d = dim;
  const F dist = sqrt((h + xx) * (h + xx) + (r - xx) * (r - xx));
  const F e = d - 1;
  return static_cast<double>(2 * k / e * (pow(dist, -e) - pow(r + h, -e)));
}

// For D = 2, eps = 0 the force integral along y = H + x is an arctangent.
double law_oracle_d2(double x) {
  const double h = kEx.incline_height, r = kEx.globe_radius;
  const double a = 2.0, b = 2.0 * (h - r), c = h * h + r * r;
  const double s = std::sqrt(4.0 * a * c - b * b);
  auto prim = [&](double t) { return 2.0 / s * std::atan((2.0 * a * t + b) / s); };
  return 2.0 * kEx.coulomb_coeff * (prim(x) - prim(-h));
}

}  // namespace

TEST(VelocityEnergy, MatchesHighPrecisionOracle) {
  for (double dim : {1.5, 1.99989, 2.0, 2.3}) {
    for (double x : {-6.37e5, -6.0e5, -3.1e5, -1.0, 0.0}) {
      const double oracle = energy_oracle(dim, x);
      const double got = velocity_sq_energy(kEx, dim, x);
      if (oracle == 0.0) {
        EXPECT_EQ(got, 0.0);
      } else {
        EXPECT_NEAR(got / oracle, 1.0, 1e-13) << dim << " " << x;
      }
    }
  }
}

TEST(VelocityEnergy, StableNextToTheStart) {
  const double x = -kEx.incline_height + 1e-3;
  EXPECT_NEAR(velocity_sq_energy(kEx, 2.0, x) / energy_oracle(2.0, x), 1.0, 1e-10);
}

TEST(VelocityEnergy, RejectsBadArguments) {
  EXPECT_THROW(velocity_sq_energy(kEx, 1.0, 0.0), DomainError);
  EXPECT_THROW(velocity_sq_energy(kEx, 2.0, 1.0), DomainError);
  EXPECT_THROW(velocity_sq_energy(kEx, 2.0, -7e5), DomainError);
  EXPECT_THROW(velocity_sq_energy({-1.0, 1.0, 1.0}, 2.0, 0.0), DomainError);
}

TEST(VelocityLaw, ArctanClosedFormAtDimTwo) {
  for (double x : {-5e5, -2e5, 0.0}) {
    EXPECT_NEAR(velocity_sq_law(kEx, {2.0, 0.0}, x) / law_oracle_d2(x), 1.0, 1e-11);
  }
}

TEST(VelocityLaw, Baseline) {
  const double e = velocity_sq_energy(kEx, 2.0, 0.0);
  const double l = velocity_sq_law(kEx, {2.0, 0.0}, 0.0);
  EXPECT_NEAR(e / 1.0767e7, 1.0, 1e-3);
  EXPECT_NEAR(l / 1.1351e7, 1.0, 5e-3);
  EXPECT_NEAR(l / e - 1.0, 0.054, 0.003);
}

TEST(VelocityLaw, ThrowsWhenRefinementDisagrees) {
  QuadratureConfig q;
  q.panels = 1;
  q.points_per_panel = 3;
  q.refinement_tolerance = 1e-15;
  EXPECT_THROW(velocity_sq_law(kEx, {2.0, 0.01}, 0.0, q), NumericalError);
}

TEST(VelocityLaw, NegativeTangentialForceIsADomainError) {
  const InclinePath uphill{[](double x) { return -x; }, [](double) { return -1.0; }};
  EXPECT_THROW(velocity_sq_law_along(kEx, uphill, {2.0, 0.01}, 0.0), DomainError);
}

TEST(FunctionalPi, FrozenValues) {
  // Reference values from an independent nested adaptive quadrature.
  EXPECT_NEAR(functional_pi(kEx, {2.0, 0.0}), 571.4216636, 1e-4);
  EXPECT_NEAR(functional_pi(kEx, {2.0, 0.0146}), 140.654767114, 1e-5);
  EXPECT_NEAR(functional_pi(kEx, {1.99989, 0.01458}), 140.659736611, 1e-5);
}

TEST(FunctionalPi, WithinThreePercentOfPublishedValues) {
  EXPECT_NEAR(functional_pi(kEx, {2.0, 0.0}) / 571.4215, 1.0, 0.03);
  EXPECT_NEAR(functional_pi(kEx, {2.0, 0.0146}) / 139.3429, 1.0, 0.03);
  EXPECT_NEAR(functional_pi(kEx, {1.99989, 0.01458}) / 137.3231, 1.0, 0.03);
}

TEST(FunctionalPi, ConstantMismatchGivesLengthTimesSquare) {
  const double c = 0.1;
  const double pi = functional_pi_with(
      kEx, 2.0, [&](double x) { return (1.0 + c) * velocity_sq_energy(kEx, 2.0, x); });
  EXPECT_NEAR(pi, kEx.incline_height * c * c, 1e-6 * kEx.incline_height * c * c);
}

TEST(FunctionalPi, ExactLawGivesZero) {
  EXPECT_NEAR(functional_pi_with(kEx, 2.0, [](double x) { return velocity_sq_energy(kEx, 2.0, x); }), 0.0, 1e-20);
}

TEST(FunctionalPi, PanelRefinementIsStable) {
  QuadratureConfig fine;
  fine.panels = 4096;
  EXPECT_NEAR(functional_pi(kEx, {2.0, 0.0146}) / functional_pi(kEx, {2.0, 0.0146}, fine), 1.0, 1e-9);
}

TEST(FunctionalPi, FastAtDefaultQuadrature) {
  const auto t0 = std::chrono::steady_clock::now();
  functional_pi(kEx, {2.0, 0.0146});
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 10.0);
}

TEST(Optimizer, ReducesPiBelowAQuarterAndReportsTrace) {
  const double pi0 = functional_pi(kEx, {2.0, 0.0});
  FitResult r;
  try {
    r = optimize_alternating(kEx, {2.0, 0.0});
  } catch (const FitConvergenceError& e) {
    r = e.partial();
  }
  EXPECT_LE(r.pi_value, 0.25 * pi0);
  ASSERT_GE(r.trace.size(), 2u);
  EXPECT_EQ(r.trace.front().label, "initial");
  for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_LT(r.trace[i].pi_value, r.trace[i - 1].pi_value);
}

TEST(Optimizer, FirstEpsStageLandsNearPublishedEps) {
  SearchConfig one;
  one.max_sweeps = 1;
  one.stop_threshold = 1e-12;
  try {
    optimize_alternating(kEx, {2.0, 0.0}, one);
    FAIL() << "expected the sweep cap to be hit";
  } catch (const FitConvergenceError& e) {
    ASSERT_GE(e.partial().trace.size(), 2u);
    EXPECT_NEAR(e.partial().trace[1].eps, 0.0146, 2e-4);
  }
}

TEST(Optimizer, StopsWhenGainIsBelowThreshold) {
  SearchConfig loose;
  loose.stop_threshold = 0.5;
  const auto r = optimize_alternating(kEx, {2.0, 0.0}, loose);
  EXPECT_EQ(r.sweeps, 1);
}

TEST(Optimizer, RejectsStartOutsideBounds) {
  EXPECT_THROW(optimize_alternating(kEx, {2.5, 0.0}), DomainError);
}
