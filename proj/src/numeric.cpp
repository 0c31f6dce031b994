#include "labyrinth/numeric.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <thread>

#include "labyrinth/errors.hpp"

namespace labyrinth::numeric {
namespace {

constexpr std::array<double, 3> kNodes3{-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr std::array<double, 3> kWeights3{0.5555555555555556, 0.8888888888888888,
                                          0.5555555555555556};

constexpr std::array<double, 5> kNodes5{-0.9061798459386640, -0.5384693101056831, 0.0,
                                        0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kWeights5{0.2369268850561891, 0.4786286704993665,
                                          0.5688888888888889, 0.4786286704993665,
                                          0.2369268850561891};

constexpr std::array<double, 7> kNodes7{-0.9491079123427585, -0.7415311855993945,
                                        -0.4058451513773972, 0.0,
                                        0.4058451513773972,  0.7415311855993945,
                                        0.9491079123427585};
constexpr std::array<double, 7> kWeights7{0.1294849661688697, 0.2797053914892766,
                                          0.3818300505051189, 0.4179591836734694,
                                          0.3818300505051189, 0.2797053914892766,
                                          0.1294849661688697};

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("LABYRINTH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

GaussRule gauss_legendre(int points) {
  switch (points) {
    case 3:
      return {kNodes3, kWeights3};
    case 5:
      return {kNodes5, kWeights5};
    case 7:
      return {kNodes7, kWeights7};
    default:
      throw DomainError("Gauss-Legendre rule supports 3, 5 or 7 points, got " +
                        std::to_string(points));
  }
}

}  // namespace labyrinth::numeric
