#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "labyrinth/errors.hpp"
#include "labyrinth/numtheory.hpp"

using namespace labyrinth;
using namespace labyrinth::numtheory;

namespace {

std::int64_t linear_scan_z(std::int64_t n) {
  for (std::int64_t m = 1;; ++m) {
    if ((m * (m + 1) / 2) % n == 0) return m;
  }
}

std::vector<CubicSolution> brute_cubic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                       std::int64_t bound) {
  std::vector<CubicSolution> out;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      for (std::int64_t z = -bound; z <= bound; ++z)
        if (a * x * x * x + b * y * y * y + c * z * z * z == d) out.push_back({x, y, z});
  return out;
}

bool contains_permutation(const std::vector<CubicSolution>& sols, std::array<std::int64_t, 3> v) {
  std::sort(v.begin(), v.end());
  do {
    if (std::find(sols.begin(), sols.end(), CubicSolution{v[0], v[1], v[2]}) != sols.end()) return true;
  } while (std::next_permutation(v.begin(), v.end()));
  return false;
}

}  // namespace

TEST(Primality, SmallAndKnownValues) {
  EXPECT_TRUE(probable_prime(2));
  EXPECT_FALSE(probable_prime(1));
  EXPECT_FALSE(probable_prime(0));
  EXPECT_TRUE(probable_prime(571));
  EXPECT_TRUE(probable_prime(647));
  EXPECT_FALSE(probable_prime(561));                                   // Carmichael
  EXPECT_FALSE(probable_prime(BigInt("3825123056546413051")));         // strong pseudoprime to bases 2..23
  EXPECT_TRUE(probable_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
  EXPECT_FALSE(probable_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST(Primality, MatchesSieveBelowTenThousand) {
  std::vector<bool> composite(10001, false);
  for (int i = 2; i <= 10000; ++i) {
    if (!composite[i])
      for (int j = 2 * i; j <= 10000; j += i) composite[j] = true;
    EXPECT_EQ(probable_prime(i), !composite[i]) << i;
  }
}

TEST(Factorize, ReconstructsInput) {
  for (const char* s : {"1", "2", "360", "1000000007", "600851475143", "18446744073709551617",
                        "1000000000027999999999571"}) {
    const BigInt n(s);
    BigInt back = 1;
    for (const auto& [p, e] : factorize(n)) {
      EXPECT_TRUE(probable_prime(p)) << p;
      back *= boost::multiprecision::pow(p, e);
    }
    EXPECT_EQ(back, n) << s;
  }
  EXPECT_THROW(factorize(0), DomainError);
}

TEST(PseudoSmarandache, PublishedValues) {
  EXPECT_EQ(pseudo_smarandache(909), BigInt(404));
  EXPECT_EQ(pseudo_smarandache(2222), BigInt(1111));
  EXPECT_EQ(pseudo_smarandache(1), BigInt(1));
  EXPECT_THROW(pseudo_smarandache(0), DomainError);
}

TEST(PseudoSmarandache, LinearScanOracleUpToTenThousand) {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    ASSERT_EQ(pseudo_smarandache(n), BigInt(linear_scan_z(n))) << n;
  }
}

TEST(PseudoSmarandache, DividesTriangularNumberForLargeN) {
  const BigInt n("123456789012345678901");
  const BigInt z = pseudo_smarandache(n);
  EXPECT_EQ((z * (z + 1) / 2) % n, 0);
  EXPECT_LE(z, 2 * n - 1);
}

TEST(Palindromes, ChainLengths) {
  EXPECT_EQ(palindromic_chain_length(909), 3);
  EXPECT_EQ(palindromic_chain_length(10), -1);
  EXPECT_EQ(palindromic_chain_length(1, 10, 64), 64);
  EXPECT_TRUE(is_palindrome(5, 2));   // 101
  EXPECT_FALSE(is_palindrome(6, 2));  // 110
  EXPECT_THROW(is_palindrome(5, 1), DomainError);
}

TEST(Consecutive, Terms) {
  EXPECT_EQ(consecutive_term(4), BigInt(1234));
  EXPECT_EQ(consecutive_term(1, 7), BigInt(1));
  EXPECT_EQ(consecutive_term(12), BigInt("123456789101112"));
  EXPECT_EQ(consecutive_term(3, 2), BigInt(0b11011));
  EXPECT_THROW(consecutive_term(0), DomainError);
}

TEST(PrimeProductPlusOne, PublishedIdentities) {
  const auto r571 = prime_product_plus_one_representations(571, 8);
  ASSERT_EQ(r571.size(), 1u);
  EXPECT_EQ(r571[0], (std::vector<BigInt>{3, 5, 19}));
  const auto r647 = prime_product_plus_one_representations(647, 8);
  ASSERT_EQ(r647.size(), 1u);
  EXPECT_EQ(r647[0], (std::vector<BigInt>{17, 19}));
  EXPECT_TRUE(prime_product_plus_one_representations(3, 4).empty());
  EXPECT_TRUE(prime_product_plus_one_representations(571, 2).empty());
  EXPECT_THROW(prime_product_plus_one_representations(10, 4), DomainError);
}

TEST(PrimeProductPlusOne, RepresentationsReconstruct) {
  for (int y = 5; y < 2000; y += 2) {
    for (const auto& rep : prime_product_plus_one_representations(y, 20)) {
      BigInt prod = 2;
      for (const auto& p : rep) prod *= p;
      EXPECT_EQ(prod + 1, BigInt(y));
    }
  }
}

TEST(SumDifference, Examples) {
  const auto nine = prime_sum_difference_representations(9, 3, 1, 20);
  EXPECT_NE(std::find(nine.begin(), nine.end(), SumDifference{{5, 7}, {3}}), nine.end());
  const auto three = prime_sum_difference_representations(3, 3, 1, 20);
  EXPECT_NE(std::find(three.begin(), three.end(), SumDifference{{5, 5}, {7}}), three.end());
  for (const auto& r : three) {
    std::int64_t total = 0;
    for (auto p : r.plus) total += p;
    for (auto p : r.minus) total -= p;
    EXPECT_EQ(total, 3);
    for (auto p : r.minus) EXPECT_EQ(std::count(r.plus.begin(), r.plus.end(), p), 0);
  }
}

TEST(SumDifference, DistinctFlagDropsRepeats) {
  const auto three = prime_sum_difference_representations(3, 3, 1, 20, true);
  EXPECT_EQ(std::find(three.begin(), three.end(), SumDifference{{5, 5}, {7}}), three.end());
  for (const auto& r : three) EXPECT_EQ(std::set<std::int64_t>(r.plus.begin(), r.plus.end()).size(), r.plus.size());
}

TEST(SumDifference, Preconditions) {
  EXPECT_THROW(prime_sum_difference_representations(9, 3, 0, 20), DomainError);
  EXPECT_THROW(prime_sum_difference_representations(9, 3, 3, 20), DomainError);
  EXPECT_THROW(prime_sum_difference_representations(8, 3, 1, 20), DomainError);  // parity
  EXPECT_THROW(prime_sum_difference_representations(9, 2, 1, 20), DomainError);
}

TEST(Fractional, UnitRootAndDirectValue) {
  EXPECT_NEAR(fractional_residual(Rational(2), 1.0), 0.0, 1e-15);
  EXPECT_NEAR(fractional_residual(Rational(3), 2.0), 2.0 * std::sqrt(3.0) + 4.5 - 6.0, 1e-13);
  EXPECT_NEAR(fractional_residual(Rational(3), 2.0), 1.9641016151377544, 1e-13);
  const auto roots = fractional_equation_roots(Rational(2), 0.1, 10.0, 1e-3);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0], 1.0, 1e-12);
}

TEST(Fractional, NegativeBaseNeedsOddIntegers) {
  EXPECT_NEAR(fractional_residual(Rational(-2), 1.0), 0.0, 1e-15);
  EXPECT_THROW(fractional_residual(Rational(-2), 2.0), DomainError);
  EXPECT_THROW(fractional_residual(Rational(1), 2.0), DomainError);
  EXPECT_THROW(fractional_equation_roots(Rational(-2), 1.2, 1.8, 0.1), DomainError);
  const auto roots = fractional_equation_roots(Rational(-2), 0.5, 5.0, 0.1);
  ASSERT_FALSE(roots.empty());
  EXPECT_EQ(roots[0], 1.0);
}

TEST(Magic, SiameseSquares) {
  EXPECT_EQ(construct_odd_magic(1).at(0, 0), Rational(1));
  for (int n : {3, 5, 7, 9}) {
    const auto check = verify_magic(construct_odd_magic(n), MagicMode::additive);
    EXPECT_TRUE(check.holds) << n;
    EXPECT_EQ(check.value, Rational(n * (n * n + 1) / 2));
  }
  EXPECT_THROW(construct_odd_magic(4), DomainError);
}

TEST(Magic, LoShuAndMultiplicative) {
  const MagicSquare lo_shu(3, {4, 9, 2, 3, 5, 7, 8, 1, 6});
  EXPECT_TRUE(verify_magic(lo_shu, MagicMode::additive).holds);
  EXPECT_EQ(verify_magic(lo_shu, MagicMode::additive).value, Rational(15));
  EXPECT_FALSE(verify_magic(lo_shu, MagicMode::multiplicative).holds);
  const MagicSquare mul(3, {2, 9, 12, 36, 6, 1, 3, 4, 18});
  const auto check = verify_magic(mul, MagicMode::multiplicative);
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.value, Rational(216));
  EXPECT_THROW(MagicSquare(2, {1, 2, 3}), DomainError);
}

TEST(Cubic, PublishedSolutions) {
  const auto sols = cubic_search(1, 1, 1, 1, 12);
  EXPECT_TRUE(contains_permutation(sols, {9, 10, -12}));
  EXPECT_TRUE(contains_permutation(sols, {-6, -8, 9}));
  EXPECT_TRUE(contains_permutation(cubic_search(1, 1, 1, 1, 1), {1, 0, 0}));
  EXPECT_TRUE(contains_permutation(cubic_search(1, 1, 1, 29, 3), {3, 1, 1}));
}

TEST(Cubic, BruteForceAgreement) {
  const std::int64_t cases[][4] = {{1, 1, 1, 1}, {1, 1, 1, 29}, {2, -3, 1, 5}, {1, 2, 3, 0}, {0, 1, 1, 2}};
  for (const auto& c : cases) {
    auto expected = brute_cubic(c[0], c[1], c[2], c[3], 12);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(cubic_search(c[0], c[1], c[2], c[3], 12), expected);
  }
}

TEST(Cubic, SymmetricWhenCoefficientsAgree) {
  const auto sols = cubic_search(1, 1, 1, 1, 12);
  for (const auto& s : sols) {
    EXPECT_TRUE(std::binary_search(sols.begin(), sols.end(), CubicSolution{s.y, s.x, s.z}));
    EXPECT_TRUE(std::binary_search(sols.begin(), sols.end(), CubicSolution{s.z, s.y, s.x}));
  }
}

TEST(Cubic, Preconditions) {
  EXPECT_THROW(cubic_search(0, 0, 0, 1, 3), DomainError);
  EXPECT_THROW(cubic_search(1, 1, 1, 1, 0), DomainError);
}
