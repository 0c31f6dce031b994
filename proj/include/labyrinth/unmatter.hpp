#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "labyrinth/bigint.hpp"

namespace labyrinth::unmatter {

enum class Flavor { up, down, strange, charm, bottom, top };

struct Quark {
  Flavor flavor;
  bool anti = false;

  friend bool operator==(const Quark&, const Quark&) = default;
};

/// Multiset of quarks and antiquarks; at least one constituent.
class ParticleCombo {
 public:
  explicit ParticleCombo(std::vector<Quark> constituents);

  /// Parses a comma-separated list such as "u,u,d,d,~s" ("~" marks an antiquark;
  /// full flavor names are accepted too).
  static ParticleCombo parse(std::string_view text);

  const std::vector<Quark>& constituents() const { return constituents_; }
  std::int64_t quark_count() const;
  std::int64_t antiquark_count() const;

  /// Every quark swapped with its antiquark.
  ParticleCombo mirror() const;

  std::string to_string() const;

 private:
  std::vector<Quark> constituents_;
};

enum class Classification { matter, antimatter, unmatter, forbidden };

std::string_view to_string(Classification c);
std::string_view to_string(Flavor f);

/// Charge in units of e: +2/3 for up-type, -1/3 for down-type, negated for anti.
Rational flavor_charge(const Quark& q);

/// Colorless iff Q - A is a multiple of 3.
bool is_colorless(std::int64_t q_count, std::int64_t a_count);

/// Colorless with at least one quark and one antiquark.
bool is_unmatter(std::int64_t q_count, std::int64_t a_count);

/// Number of (q, a) splits of n that pass the predicate, times 6^n flavor choices.
BigInt count_unmatter_combinations(std::int64_t n);
BigInt count_colorless_combinations(std::int64_t n);

Rational charge(const ParticleCombo& combo);
Classification classify(const ParticleCombo& combo);

/// Number of non-empty subsets of a set of axioms: 2^axioms - 1.
BigInt axiom_denial_count(std::int64_t axioms);

}  // namespace labyrinth::unmatter
