#include "labyrinth/unmatter.hpp"

#include <sstream>

#include "labyrinth/errors.hpp"

namespace labyrinth::unmatter {
namespace {

bool congruent_mod3(std::int64_t a, std::int64_t b) { return (a - b) % 3 == 0; }

template <class Pred>
BigInt count_splits(std::int64_t n, std::int64_t min_each, Pred pred) {
  std::int64_t splits = 0;
  for (std::int64_t q = min_each; q <= n - min_each; ++q) {
    if (pred(q, n - q)) ++splits;
  }
  return BigInt(splits) * boost::multiprecision::pow(BigInt(6), static_cast<unsigned>(n));
}

Flavor parse_flavor(std::string_view token) {
  static constexpr std::pair<std::string_view, Flavor> kNames[] = {
      {"u", Flavor::up},      {"up", Flavor::up},           {"d", Flavor::down},
      {"down", Flavor::down}, {"s", Flavor::strange},       {"strange", Flavor::strange},
      {"c", Flavor::charm},   {"charm", Flavor::charm},     {"b", Flavor::bottom},
      {"bottom", Flavor::bottom}, {"t", Flavor::top},       {"top", Flavor::top}};
  for (const auto& [name, flavor] : kNames) {
    if (token == name) return flavor;
  }
  throw DomainError("unknown quark flavor '" + std::string(token) + "'");
}

}  // namespace

ParticleCombo::ParticleCombo(std::vector<Quark> constituents)
    : constituents_(std::move(constituents)) {
  if (constituents_.empty()) throw DomainError("a combination needs at least one constituent");
}

ParticleCombo ParticleCombo::parse(std::string_view text) {
  std::vector<Quark> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw DomainError("empty constituent in '" + std::string(text) + "'");
    bool anti = false;
    if (token.front() == '~') {
      anti = true;
      token.remove_prefix(1);
    } else if (token.starts_with("anti-")) {
      anti = true;
      token.remove_prefix(5);
    }
    out.push_back({parse_flavor(token), anti});
    start = end + 1;
  }
  return ParticleCombo(std::move(out));
}

std::int64_t ParticleCombo::quark_count() const {
  std::int64_t n = 0;
  for (const auto& q : constituents_) n += q.anti ? 0 : 1;
  return n;
}

std::int64_t ParticleCombo::antiquark_count() const {
  return static_cast<std::int64_t>(constituents_.size()) - quark_count();
}

ParticleCombo ParticleCombo::mirror() const {
  auto flipped = constituents_;
  for (auto& q : flipped) q.anti = !q.anti;
  return ParticleCombo(std::move(flipped));
}

std::string ParticleCombo::to_string() const {
  std::string out;
  for (const auto& q : constituents_) {
    if (!out.empty()) out += ',';
    if (q.anti) out += '~';
    out += unmatter::to_string(q.flavor).substr(0, 1);
  }
  return out;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::matter:
      return "matter";
    case Classification::antimatter:
      return "antimatter";
    case Classification::unmatter:
      return "unmatter";
    case Classification::forbidden:
      return "forbidden";
  }
  return "?";
}

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::up:
      return "up";
    case Flavor::down:
      return "down";
    case Flavor::strange:
      return "strange";
    case Flavor::charm:
      return "charm";
    case Flavor::bottom:
      return "bottom";
    case Flavor::top:
      return "top";
  }
  return "?";
}

Rational flavor_charge(const Quark& q) {
  const bool up_type = q.flavor == Flavor::up || q.flavor == Flavor::charm || q.flavor == Flavor::top;
  Rational c = up_type ? Rational(2, 3) : Rational(-1, 3);
  return q.anti ? Rational(-c) : c;
}

bool is_colorless(std::int64_t q_count, std::int64_t a_count) {
  return congruent_mod3(q_count, a_count);
}

bool is_unmatter(std::int64_t q_count, std::int64_t a_count) {
  return is_colorless(q_count, a_count) && q_count >= 1 && a_count >= 1;
}

BigInt count_unmatter_combinations(std::int64_t n) {
  if (n < 2) throw DomainError("unmatter needs n >= 2 constituents");
  return count_splits(n, 1, is_unmatter);
}

BigInt count_colorless_combinations(std::int64_t n) {
  if (n < 1) throw DomainError("n must be >= 1");
  return count_splits(n, 0, is_colorless);
}

Rational charge(const ParticleCombo& combo) {
  Rational total = 0;
  for (const auto& q : combo.constituents()) total += flavor_charge(q);
  return total;
}

Classification classify(const ParticleCombo& combo) {
  const auto q = combo.quark_count();
  const auto a = combo.antiquark_count();
  if (!is_colorless(q, a)) return Classification::forbidden;
  if (q > 0 && a > 0) return Classification::unmatter;
  return a == 0 ? Classification::matter : Classification::antimatter;
}

BigInt axiom_denial_count(std::int64_t axioms) {
  if (axioms < 1) throw DomainError("axiom count must be >= 1");
  return (BigInt(1) << static_cast<unsigned>(axioms)) - 1;
}

}  // namespace labyrinth::unmatter
