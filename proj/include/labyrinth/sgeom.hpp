#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "labyrinth/bigint.hpp"

// A plane model with three non-collinear anchors A, B, C. An s-line is a
// Euclidean line through exactly one anchor. Everything is exact.
namespace labyrinth::sgeom {

struct RPoint {
  Rational x, y;

  friend bool operator==(const RPoint&, const RPoint&) = default;
};

/// a x + b y + c = 0 with the first nonzero of (a, b) scaled to 1.
class RLine {
 public:
  RLine(Rational a, Rational b, Rational c);

  static RLine through(const RPoint& p, const RPoint& q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool contains(const RPoint& p) const;
  bool parallel_to(const RLine& other) const;
  std::string to_string() const;

  friend bool operator==(const RLine&, const RLine&) = default;

 private:
  Rational a_, b_, c_;
};

class Anchors {
 public:
  Anchors(RPoint a, RPoint b, RPoint c);

  const RPoint& a() const { return a_; }
  const RPoint& b() const { return b_; }
  const RPoint& c() const { return c_; }

  /// Anchor name ('A', 'B', 'C') at p, or nullopt.
  std::optional<char> anchor_at(const RPoint& p) const;

 private:
  RPoint a_, b_, c_;
};

/// p sits on an anchor, so every line through it missing the other two
/// anchors is an s-line.
struct InfinitePencil {
  char anchor;
};

using SLinesResult = std::variant<std::vector<RLine>, InfinitePencil>;

int incidence_count(const RLine& line, const Anchors& anchors);
bool is_s_line(const RLine& line, const Anchors& anchors);

/// The s-lines among pA, pB, pC (deduplicated).
SLinesResult s_lines_through(const RPoint& p, const Anchors& anchors);

/// Number of s-lines through p that share no point with l. Requires l to be
/// an s-line, p off l and p not an anchor.
int count_s_parallels(const RPoint& p, const RLine& l, const Anchors& anchors);

std::optional<RLine> s_line_through_pair(const RPoint& p, const RPoint& q,
                                         const Anchors& anchors);

}  // namespace labyrinth::sgeom
