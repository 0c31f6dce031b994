#pragma once

// Reference constants shipped with the toolkit. Values are standard
// astronomical / CODATA figures, not fitted quantities.
namespace labyrinth::constants {

inline constexpr double kLightSpeed = 2.99792458e8;     // m/s
inline constexpr double kG0 = 6.6743e-11;               // m^3 kg^-1 s^-2
inline constexpr double kGmSun = 1.32712e20;            // m^3/s^2
inline constexpr double kSunMass = kGmSun / kG0;        // kg, consistent with kGmSun
inline constexpr double kAstronomicalUnit = 1.495978707e11;  // m
inline constexpr double kBoltzmann = 1.380649e-23;      // J/K
inline constexpr double kHbar = 1.054571817e-34;        // J s

// Mercury orbital elements.
inline constexpr double kMercurySemimajor = 5.7909e10;  // m
inline constexpr double kMercuryEccentricity = 0.2056;

// Earth-surface incline example used for the fractal G ratios.
inline constexpr double kEarthRadius = 6.37e6;          // m
inline constexpr double kInclineHeight = 6.37e5;        // m, R/10
inline constexpr double kFittedCoulombDim = 1.99989;
inline constexpr double kDeltaSlope = 1.206e-12;        // 1/m, delta = slope * x

// Quantized redshift velocities (km/s) and the quasar redshift constant.
inline constexpr double kTifftVelocity1 = 36.6e3;       // m/s
inline constexpr double kTifftVelocity2 = 72.2e3;       // m/s
inline constexpr double kQuasarRedshift = 0.62;

// Solar-system specific velocity for orbit quantization.
inline constexpr double kSolarV0 = 1.44e5;              // m/s

// Reported photon-deflection bound G <= 2.5 G0; not derivable from the
// improved-gravitation formula without an unspecified photon-orbit chord.
inline constexpr double kPhotonDeflectionGBound = 2.5;

// Beth experiment beam: 80 mW at 1.6e15 rad/s.
inline constexpr double kBethPower = 0.08;
inline constexpr double kBethOmega = 1.6e15;

}  // namespace labyrinth::constants
