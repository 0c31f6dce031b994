#include <gtest/gtest.h>

#include <random>

#include "labyrinth/errors.hpp"
#include "labyrinth/sgeom.hpp"

using namespace labyrinth;
using namespace labyrinth::sgeom;

namespace {

const Anchors kUnit({0, 0}, {1, 0}, {0, 1});
const RLine kLineC(0, 1, -1);  // y = 1, through C parallel to AB

Rational random_rational(std::mt19937_64& rng, int span = 50) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 17);
  return Rational(num(rng), den(rng));
}

// p on segment AB strictly between the endpoints.
RPoint interior_of_ab(const Anchors& an, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 96);
  const Rational t(num(rng), 97);
  return {an.a().x + t * (an.b().x - an.a().x), an.a().y + t * (an.b().y - an.a().y)};
}

}  // namespace

TEST(RLine, NormalisesLeadingCoefficient) {
  const RLine l(2, 4, 6);
  EXPECT_EQ(l.a(), Rational(1));
  EXPECT_EQ(l.b(), Rational(2));
  EXPECT_EQ(l.c(), Rational(3));
  EXPECT_EQ(RLine(0, -3, 3), kLineC);
  EXPECT_THROW(RLine(0, 0, 1), DomainError);
  EXPECT_THROW(RLine::through({1, 1}, {1, 1}), DomainError);
}

TEST(Anchors, RejectsCollinear) {
  EXPECT_THROW(Anchors({0, 0}, {1, 1}, {2, 2}), DomainError);
}

TEST(Incidence, Examples) {
  EXPECT_EQ(incidence_count(RLine::through({0, 0}, {1, 0}), kUnit), 2);
  EXPECT_EQ(incidence_count(RLine(1, 0, -5), kUnit), 0);
  EXPECT_EQ(incidence_count(kLineC, kUnit), 1);
  EXPECT_TRUE(is_s_line(kLineC, kUnit));
  EXPECT_FALSE(is_s_line(RLine::through({0, 0}, {1, 0}), kUnit));
  EXPECT_FALSE(is_s_line(RLine(1, 0, -5), kUnit));
}

TEST(SLinesThrough, GenericPointGetsThree) {
  const auto res = s_lines_through({2, 3}, kUnit);
  ASSERT_TRUE(std::holds_alternative<std::vector<RLine>>(res));
  EXPECT_EQ(std::get<std::vector<RLine>>(res).size(), 3u);
}

TEST(SLinesThrough, PointOnAbGetsOnlyPc) {
  const auto res = s_lines_through({Rational(1, 3), 0}, kUnit);
  const auto& lines = std::get<std::vector<RLine>>(res);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_TRUE(lines[0].contains(kUnit.c()));
}

TEST(SLinesThrough, AnchorGivesInfinitePencil) {
  const auto res = s_lines_through({0, 0}, kUnit);
  ASSERT_TRUE(std::holds_alternative<InfinitePencil>(res));
  EXPECT_EQ(std::get<InfinitePencil>(res).anchor, 'A');
}

TEST(Parallels, Examples) {
  EXPECT_EQ(count_s_parallels({Rational(1, 2), 0}, kLineC, kUnit), 0);
  EXPECT_EQ(count_s_parallels({2, 3}, kLineC, kUnit), 0);
  // y = 0 is AB itself for the unit anchors; lift B so it passes through A only.
  const Anchors tilted({0, 0}, {1, 2}, {0, 1});
  const RLine c_line(0, 1, -1);
  ASSERT_TRUE(is_s_line(c_line, tilted));
  EXPECT_EQ(count_s_parallels({5, 0}, c_line, tilted), 1);
}

TEST(Parallels, Preconditions) {
  EXPECT_THROW(count_s_parallels({2, 3}, RLine(1, 0, -5), kUnit), DomainError);
  EXPECT_THROW(count_s_parallels({3, 1}, kLineC, kUnit), DomainError);
  EXPECT_THROW(count_s_parallels({1, 0}, kLineC, kUnit), DomainError);
}

TEST(Pair, Examples) {
  EXPECT_FALSE(s_line_through_pair({Rational(1, 4), 0}, {Rational(3, 4), 0}, kUnit));
  // Line through C and (2, 1/2) has slope -1/4; pick q on it.
  const RPoint p{2, Rational(1, 2)};
  const RPoint q{4, 0};
  const auto l = s_line_through_pair(p, q, kUnit);
  ASSERT_TRUE(l.has_value());
  EXPECT_TRUE(l->contains(kUnit.c()));
  EXPECT_FALSE(s_line_through_pair({2, 3}, {5, 7}, kUnit));
  EXPECT_THROW(s_line_through_pair({2, 3}, {2, 3}, kUnit), DomainError);
  EXPECT_THROW(s_line_through_pair({0, 0}, {2, 3}, kUnit), DomainError);
}

TEST(Property, NoParallelToCThroughInteriorOfAb) {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 200) {
    const RPoint a{random_rational(rng), random_rational(rng)};
    const RPoint b{random_rational(rng), random_rational(rng)};
    const RPoint c{random_rational(rng), random_rational(rng)};
    const Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (det == 0) continue;
    const Anchors an(a, b, c);
    const RPoint d{c.x + (b.x - a.x), c.y + (b.y - a.y)};
    const RLine through_c = RLine::through(c, d);  // (c): through C parallel to AB
    const RPoint p = interior_of_ab(an, rng);
    EXPECT_EQ(count_s_parallels(p, through_c, an), 0);
    const RPoint q = interior_of_ab(an, rng);
    if (!(p == q)) EXPECT_FALSE(s_line_through_pair(p, q, an).has_value());
    ++checked;
  }
}

TEST(Property, AffineInvariance) {
  std::mt19937_64 rng(11);
  // (x, y) -> (2x + y + 3, x - y + 1/2), determinant -3.
  auto map = [](const RPoint& p) { return RPoint{2 * p.x + p.y + 3, p.x - p.y + Rational(1, 2)}; };
  for (int i = 0; i < 200; ++i) {
    const RPoint p{random_rational(rng, 3), random_rational(rng, 3)};
    const RPoint q{random_rational(rng, 3), random_rational(rng, 3)};
    if (p == q) continue;
    const Anchors an({0, 0}, {1, 0}, {0, 1});
    const Anchors mapped(map(an.a()), map(an.b()), map(an.c()));
    EXPECT_EQ(is_s_line(RLine::through(p, q), an), is_s_line(RLine::through(map(p), map(q)), mapped));
  }
}
