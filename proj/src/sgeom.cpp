#include "labyrinth/sgeom.hpp"

#include <sstream>

#include "labyrinth/errors.hpp"

namespace labyrinth::sgeom {

RLine::RLine(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ == 0 && b_ == 0) throw DomainError("line needs (a, b) != (0, 0)");
  const Rational lead = a_ != 0 ? a_ : b_;
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

RLine RLine::through(const RPoint& p, const RPoint& q) {
  if (p == q) throw DomainError("a line needs two distinct points");
  const Rational a = q.y - p.y;
  const Rational b = p.x - q.x;
  return RLine(a, b, -(a * p.x + b * p.y));
}

bool RLine::contains(const RPoint& p) const { return a_ * p.x + b_ * p.y + c_ == 0; }

bool RLine::parallel_to(const RLine& other) const { return a_ == other.a_ && b_ == other.b_; }

std::string RLine::to_string() const {
  std::ostringstream out;
  out << a_ << "*x + " << b_ << "*y + " << c_ << " = 0";
  return out.str();
}

Anchors::Anchors(RPoint a, RPoint b, RPoint c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const Rational det = (b_.x - a_.x) * (c_.y - a_.y) - (b_.y - a_.y) * (c_.x - a_.x);
  if (det == 0) throw DomainError("anchors must be non-collinear");
}

std::optional<char> Anchors::anchor_at(const RPoint& p) const {
  if (p == a_) return 'A';
  if (p == b_) return 'B';
  if (p == c_) return 'C';
  return std::nullopt;
}

int incidence_count(const RLine& line, const Anchors& anchors) {
  return static_cast<int>(line.contains(anchors.a())) + static_cast<int>(line.contains(anchors.b())) +
         static_cast<int>(line.contains(anchors.c()));
}

bool is_s_line(const RLine& line, const Anchors& anchors) { return incidence_count(line, anchors) == 1; }

SLinesResult s_lines_through(const RPoint& p, const Anchors& anchors) {
  if (auto name = anchors.anchor_at(p)) return InfinitePencil{*name};
  std::vector<RLine> out;
  for (const RPoint* anchor : {&anchors.a(), &anchors.b(), &anchors.c()}) {
    RLine line = RLine::through(p, *anchor);
    if (!is_s_line(line, anchors)) continue;
    bool seen = false;
    for (const auto& l : out) seen = seen || l == line;
    if (!seen) out.push_back(std::move(line));
  }
  return out;
}

int count_s_parallels(const RPoint& p, const RLine& l, const Anchors& anchors) {
  if (!is_s_line(l, anchors)) throw DomainError("reference line is not an s-line");
  if (l.contains(p)) throw DomainError("point lies on the reference line");
  const auto through = s_lines_through(p, anchors);
  if (std::holds_alternative<InfinitePencil>(through)) throw DomainError("point is an anchor");
  int count = 0;
  // p is off l, so a parallel line through p never coincides with l.
  for (const auto& line : std::get<std::vector<RLine>>(through)) count += line.parallel_to(l);
  return count;
}

std::optional<RLine> s_line_through_pair(const RPoint& p, const RPoint& q, const Anchors& anchors) {
  if (p == q) throw DomainError("points must be distinct");
  if (anchors.anchor_at(p) || anchors.anchor_at(q)) {
    throw DomainError("pairwise lines through an anchor are excluded");
  }
  RLine line = RLine::through(p, q);
  if (is_s_line(line, anchors)) return line;
  return std::nullopt;
}

}  // namespace labyrinth::sgeom
