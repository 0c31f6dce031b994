#include "labyrinth/celestial.hpp"

#include <cmath>

#include "labyrinth/constants.hpp"
#include "labyrinth/errors.hpp"

namespace labyrinth::celestial {

void GravitySystem::validate() const {
  if (!(gm > 0.0)) throw DomainError("gm must be > 0");
  if (!(v0 > 0.0)) throw DomainError("v0 must be > 0");
}

GravitySystem GravitySystem::solar() { return {constants::kGmSun, constants::kSolarV0}; }

OrbitTable::OrbitTable(std::vector<OrbitEntry> entries) {
  for (auto& e : entries) add(std::move(e));
}

void OrbitTable::add(OrbitEntry entry) {
  if (!(entry.semimajor_axis > 0.0)) {
    throw ValidationError("semimajor_axis_m", "must be > 0 for " + entry.name);
  }
  for (const auto& e : entries_) {
    if (e.name == entry.name) throw ValidationError("name", "duplicate body '" + entry.name + "'");
  }
  entries_.push_back(std::move(entry));
}

OrbitTable OrbitTable::solar_planets() {
  return OrbitTable({{"Mercury", 5.7909e10},
                     {"Venus", 1.08209e11},
                     {"Earth", 1.49598e11},
                     {"Mars", 2.27939e11},
                     {"Jupiter", 7.78479e11},
                     {"Saturn", 1.432041e12},
                     {"Uranus", 2.867043e12},
                     {"Neptune", 4.514953e12}});
}

double orbit_radius(const GravitySystem& system, std::int64_t n) {
  system.validate();
  if (n < 1) throw DomainError("quantum number must be >= 1");
  const double nn = static_cast<double>(n);
  return nn * nn * system.gm / (system.v0 * system.v0);
}

std::vector<Assignment> assign_quantum_numbers(const GravitySystem& system,
                                               const OrbitTable& table) {
  system.validate();
  if (table.empty()) throw DomainError("orbit table is empty");
  const double base = system.gm / (system.v0 * system.v0);
  std::vector<Assignment> out;
  out.reserve(table.size());
  for (const auto& body : table.entries()) {
    const double root = std::sqrt(body.semimajor_axis / base);
    const auto lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(root)));
    Assignment best{body.name, lo, INFINITY};
    for (std::int64_t n : {lo, lo + 1}) {
      const double residual =
          std::abs(body.semimajor_axis - orbit_radius(system, n)) / body.semimajor_axis;
      if (residual < best.residual) best = {body.name, n, residual};
    }
    out.push_back(best);
  }
  return out;
}

double delta_z_from_velocity(double dv, double c) {
  if (!(c > 0.0)) throw DomainError("c must be > 0");
  return dv / c;
}

double quantized_distance(double h0, double dz, double c) {
  if (!(h0 > 0.0)) throw DomainError("h0 must be > 0");
  if (!(c > 0.0)) throw DomainError("c must be > 0");
  const double c_km_s = c / 1000.0;
  return c_km_s * dz / h0;
}

double redshift_ladder_rung(const RedshiftLadder& ladder, std::int64_t n) {
  if (!(ladder.dz > 0.0)) throw DomainError("dz must be > 0");
  if (n < 0) throw DomainError("rung index must be >= 0");
  return ladder.z0 + static_cast<double>(n) * ladder.dz;
}

double redshift_ladder_rung_multiplicative(const RedshiftLadder& ladder, std::int64_t n) {
  if (!(ladder.dz > 0.0)) throw DomainError("dz must be > 0");
  if (n < 0) throw DomainError("rung index must be >= 0");
  if (ladder.z0 == 0.0) throw DomainError("multiplicative ladder form needs z0 != 0");
  return ladder.z0 * (1.0 + static_cast<double>(n) * ladder.dz / ladder.z0);
}

double bell_quasar_redshift(const QuasarParams& params) {
  if (!(params.zf > 0.0)) throw DomainError("zf must be > 0");
  if (params.capital_n < 1) throw DomainError("N must be >= 1");
  return params.zf * (static_cast<double>(params.capital_n) - 0.1 * params.m_of_n);
}

}  // namespace labyrinth::celestial
