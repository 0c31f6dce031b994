#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "labyrinth/bigint.hpp"

namespace labyrinth::numtheory {

/// Miller-Rabin. Deterministic below 3.3e24 (first 13 prime bases); above
/// that 64 extra pseudo-random bases seeded from n, error below 4^-64.
bool probable_prime(const BigInt& n);

/// Prime factorisation (trial division, then Pollard-Brent rho).
std::map<BigInt, unsigned> factorize(const BigInt& n);

/// Z(n): least m >= 1 with n | m(m+1)/2.
BigInt pseudo_smarandache(const BigInt& n);

bool is_palindrome(const BigInt& n, int base = 10);

/// Largest k <= cap with Z^i(n) palindromic for i = 0..k, or -1 when n is not.
std::int64_t palindromic_chain_length(const BigInt& n, int base = 10, std::int64_t cap = 64);

/// i-th term of 1, 12, 123, ...: the numbers 1..i written consecutively in base.
BigInt consecutive_term(std::int64_t i, int base = 10);

/// Multisets {p1..pj}, 1 <= j <= max_factors, of primes with y = 2 p1...pj + 1.
/// By unique factorisation there is at most one.
std::vector<std::vector<BigInt>> prime_product_plus_one_representations(const BigInt& y,
                                                                        int max_factors);

struct SumDifference {
  std::vector<std::int64_t> plus;   // k - s primes, non-decreasing
  std::vector<std::int64_t> minus;  // s primes, non-decreasing

  friend bool operator==(const SumDifference&, const SumDifference&) = default;
  friend auto operator<=>(const SumDifference&, const SumDifference&) = default;
};

/// All ways to write target = sum(plus) - sum(minus) with primes <= limit and no
/// prime shared between the two sets. With all_distinct, no prime repeats at all.
std::vector<SumDifference> prime_sum_difference_representations(const BigInt& target, int k,
                                                                int s, const BigInt& limit,
                                                                bool all_distinct = false);

/// f(x) = x a^(1/x) + a^x / x - 2a. For a < 0 only odd integer x is admissible.
double fractional_residual(const Rational& a, double x);

/// Roots of f on [lo, hi]: sign changes of f and tangential zeros (sign changes
/// of f' where f vanishes), refined by bisection to 1e-12.
std::vector<double> fractional_equation_roots(const Rational& a, double lo, double hi,
                                              double step);

class MagicSquare {
 public:
  MagicSquare(int rank, std::vector<Rational> cells);

  int rank() const { return rank_; }
  const Rational& at(int row, int col) const { return cells_[row * rank_ + col]; }
  const std::vector<Rational>& cells() const { return cells_; }

 private:
  int rank_;
  std::vector<Rational> cells_;
};

enum class MagicMode { additive, multiplicative };

struct MagicCheck {
  bool holds;
  Rational value;  // the common line value when holds; first row's value otherwise
};

/// Siamese construction of an odd-rank square filled with 1..n^2.
MagicSquare construct_odd_magic(int n);

/// Checks that all rows, columns and both main diagonals give the same sum
/// (or product).
MagicCheck verify_magic(const MagicSquare& square, MagicMode mode);

struct CubicSolution {
  std::int64_t x, y, z;

  friend bool operator==(const CubicSolution&, const CubicSolution&) = default;
  friend auto operator<=>(const CubicSolution&, const CubicSolution&) = default;
};

/// All |x|,|y|,|z| <= bound with A x^3 + B y^3 + C z^3 = D, lexicographically
/// sorted. Tabulates A x^3 + B y^3 and probes D - C z^3; the z range is split
/// across worker threads.
std::vector<CubicSolution> cubic_search(const BigInt& a, const BigInt& b, const BigInt& c,
                                        const BigInt& d, std::int64_t bound);

}  // namespace labyrinth::numtheory
