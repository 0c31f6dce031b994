#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace labyrinth::celestial {

struct GravitySystem {
  double gm;  // m^3/s^2
  double v0;  // m/s, specific velocity of the system

  void validate() const;
  static GravitySystem solar();
};

struct OrbitEntry {
  std::string name;
  double semimajor_axis;  // m
};

/// Ordered list of named orbits; names unique, axes positive.
class OrbitTable {
 public:
  OrbitTable() = default;
  explicit OrbitTable(std::vector<OrbitEntry> entries);

  void add(OrbitEntry entry);
  const std::vector<OrbitEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// The eight planets, IAU mean semimajor axes.
  static OrbitTable solar_planets();

 private:
  std::vector<OrbitEntry> entries_;
};

struct RedshiftLadder {
  double z0;
  double dz;
};

struct QuasarParams {
  double zf = 0.62;
  std::int64_t capital_n = 1;
  double m_of_n = 0.0;
};

struct Assignment {
  std::string name;
  std::int64_t n;
  double residual;  // |r_obs - r_n| / r_obs
};

/// r_n = n^2 GM / v0^2. Quantum numbers start at 1.
double orbit_radius(const GravitySystem& system, std::int64_t n);

/// Best quantum number for each orbit in the table.
std::vector<Assignment> assign_quantum_numbers(const GravitySystem& system,
                                               const OrbitTable& table);

double delta_z_from_velocity(double dv, double c);

/// Distance step (c dz) / H0 in Mpc, with H0 in (km/s)/Mpc and c in m/s.
double quantized_distance(double h0, double dz, double c);

double redshift_ladder_rung(const RedshiftLadder& ladder, std::int64_t n);

/// z0 (1 + n dz / z0); equal to the additive rung when z0 != 0.
double redshift_ladder_rung_multiplicative(const RedshiftLadder& ladder, std::int64_t n);

/// zf (N - 0.1 M).
double bell_quasar_redshift(const QuasarParams& params);

}  // namespace labyrinth::celestial
