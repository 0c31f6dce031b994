#include "labyrinth/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "labyrinth/errors.hpp"
#include "labyrinth/numeric.hpp"

namespace labyrinth::numtheory {
namespace mp = boost::multiprecision;

namespace {

constexpr std::array<unsigned, 13> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// 3,317,044,064,679,887,385,961,981: below this the 13 witnesses are exact.
const BigInt& deterministic_limit() {
  static const BigInt limit("3317044064679887385961981");
  return limit;
}

std::uint64_t low_word(const BigInt& n) {
  return static_cast<std::uint64_t>(n & BigInt(std::numeric_limits<std::uint64_t>::max()));
}

BigInt random_below(const BigInt& n, std::mt19937_64& rng) {
  BigInt r = 0;
  const unsigned words = static_cast<unsigned>(mp::msb(n) / 64 + 2);
  for (unsigned i = 0; i < words; ++i) r = (r << 64) | BigInt(rng());
  return r % n;
}

bool strong_probable_prime(const BigInt& n, const BigInt& d, unsigned r, const BigInt& a) {
  BigInt x = mp::powm(a, d, n);
  const BigInt n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n1) return true;
  }
  return false;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw DomainError("modular inverse does not exist");
  BigInt inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

BigInt pollard_brent(const BigInt& n, std::mt19937_64& rng) {
  if (mp::bit_test(n, 0) == false) return 2;
  for (;;) {
    BigInt y = random_below(n - 1, rng) + 1;
    const BigInt c = random_below(n - 1, rng) + 1;
    constexpr unsigned kBatch = 128;
    BigInt g = 1, q = 1, x, ys;
    unsigned r = 1;
    while (g == 1) {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (unsigned i = 0; i < std::min(kBatch, r - k); ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = mp::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = mp::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (probable_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_brent(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

std::vector<int> digits_in_base(BigInt n, int base) {
  std::vector<int> out;
  if (n == 0) out.push_back(0);
  while (n > 0) {
    out.push_back(static_cast<int>(n % base));
    n /= base;
  }
  return out;
}

void require_base(int base) {
  if (base < 2) throw DomainError("base must be >= 2");
}

std::int64_t to_i64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// Non-decreasing (or strictly increasing) index sequences of given size.
template <class Visit>
void for_each_multiset(const std::vector<std::int64_t>& primes, int size, bool strict,
                       Visit&& visit) {
  std::vector<std::int64_t> picked;
  picked.reserve(size);
  auto rec = [&](auto&& self, std::size_t from, std::int64_t sum) -> void {
    if (static_cast<int>(picked.size()) == size) {
      visit(picked, sum);
      return;
    }
    for (std::size_t i = from; i < primes.size(); ++i) {
      picked.push_back(primes[i]);
      self(self, strict ? i + 1 : i, sum + primes[i]);
      picked.pop_back();
    }
  };
  rec(rec, 0, 0);
}

bool disjoint(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (auto p : a) {
    if (std::binary_search(b.begin(), b.end(), p)) return false;
  }
  return true;
}

}  // namespace

bool probable_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned r = 0;
  while (!mp::bit_test(d, 0)) {
    d >>= 1;
    ++r;
  }
  for (unsigned a : kWitnesses) {
    if (!strong_probable_prime(n, d, r, BigInt(a))) return false;
  }
  if (n < deterministic_limit()) return true;
  std::mt19937_64 rng(low_word(n) ^ 0x9e3779b97f4a7c15ULL);
  for (int round = 0; round < 64; ++round) {
    const BigInt a = random_below(n - 3, rng) + 2;
    if (!strong_probable_prime(n, d, r, a)) return false;
  }
  return true;
}

std::map<BigInt, unsigned> factorize(const BigInt& n) {
  if (n < 1) throw DomainError("can only factor positive integers");
  std::map<BigInt, unsigned> out;
  BigInt rest = n;
  for (unsigned p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    while (rest % p == 0) {
      ++out[BigInt(p)];
      rest /= p;
    }
  }
  std::mt19937_64 rng(low_word(n) + 17);
  factor_into(rest, out, rng);
  return out;
}

BigInt pseudo_smarandache(const BigInt& n) {
  if (n < 1) throw DomainError("Z(n) is defined for n >= 1");
  // n | m(m+1)/2  <=>  2n | m(m+1). As gcd(m, m+1) = 1, every solution splits
  // 2n = d e with gcd(d, e) = 1, d | m and e | m+1; CRT gives the least m.
  const BigInt twice = 2 * n;
  std::vector<BigInt> prime_powers;
  for (const auto& [p, k] : factorize(twice)) prime_powers.push_back(mp::pow(p, k));

  BigInt best = twice;  // d = 2n, e = 1
  const std::size_t subsets = std::size_t{1} << prime_powers.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    BigInt d = 1;
    for (std::size_t i = 0; i < prime_powers.size(); ++i) {
      if (mask & (std::size_t{1} << i)) d *= prime_powers[i];
    }
    const BigInt e = twice / d;
    if (e == 1) continue;
    const BigInt t = (e - mod_inverse(d, e)) % e;
    const BigInt m = d * t;
    if (m >= 1 && m < best) best = m;
  }
  return best;
}

bool is_palindrome(const BigInt& n, int base) {
  require_base(base);
  if (n < 0) return false;
  const auto digits = digits_in_base(n, base);
  return std::equal(digits.begin(), digits.begin() + digits.size() / 2, digits.rbegin());
}

std::int64_t palindromic_chain_length(const BigInt& n, int base, std::int64_t cap) {
  require_base(base);
  if (n < 1) throw DomainError("n must be >= 1");
  if (cap < 0) throw DomainError("cap must be >= 0");
  if (!is_palindrome(n, base)) return -1;
  BigInt current = n;
  std::int64_t k = 0;
  while (k < cap) {
    BigInt next = pseudo_smarandache(current);
    if (!is_palindrome(next, base)) break;
    ++k;
    current = std::move(next);
  }
  return k;
}

BigInt consecutive_term(std::int64_t i, int base) {
  require_base(base);
  if (i < 1) throw DomainError("term index must be >= 1");
  BigInt term = 0;
  for (std::int64_t j = 1; j <= i; ++j) {
    BigInt shift = 1;
    for (std::int64_t v = j; v > 0; v /= base) shift *= base;
    term = term * shift + j;
  }
  return term;
}

std::vector<std::vector<BigInt>> prime_product_plus_one_representations(const BigInt& y,
                                                                        int max_factors) {
  if (y < 3) throw DomainError("y must be >= 3");
  if (!mp::bit_test(y, 0)) throw DomainError("y must be odd");
  if (max_factors < 1) throw DomainError("max_factors must be >= 1");
  const BigInt half = (y - 1) / 2;
  if (half == 1) return {};
  std::vector<BigInt> primes;
  for (const auto& [p, k] : factorize(half)) primes.insert(primes.end(), k, p);
  if (static_cast<int>(primes.size()) > max_factors) return {};
  return {primes};
}

std::vector<SumDifference> prime_sum_difference_representations(const BigInt& target, int k,
                                                                int s, const BigInt& limit,
                                                                bool all_distinct) {
  if (k < 3) throw DomainError("k must be >= 3");
  if (s < 1 || s >= k) throw DomainError("s must satisfy 1 <= s < k");
  const std::int64_t t = to_i64(target, "target");
  const std::int64_t lim = to_i64(limit, "limit");
  if (lim > 10'000'000) throw DomainError("limit above 1e7 is not supported");
  const bool odd_target = (t % 2) != 0;
  if (odd_target != (k % 2 != 0)) {
    throw DomainError("parity mismatch: odd targets need odd k and even targets even k");
  }

  const auto primes = primes_up_to(lim);
  std::map<std::int64_t, std::vector<std::vector<std::int64_t>>> minus_by_sum;
  for_each_multiset(primes, s, all_distinct, [&](const auto& set, std::int64_t sum) {
    minus_by_sum[sum].push_back(set);
  });

  std::vector<SumDifference> out;
  for_each_multiset(primes, k - s, all_distinct, [&](const auto& plus, std::int64_t sum) {
    const auto it = minus_by_sum.find(sum - t);
    if (it == minus_by_sum.end()) return;
    for (const auto& minus : it->second) {
      if (disjoint(plus, minus)) out.push_back({plus, minus});
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

double fractional_residual(const Rational& a, double x) {
  if (a == 0 || a == 1 || a == -1) throw DomainError("a must not be -1, 0 or 1");
  if (!(x > 0.0)) throw DomainError("x must be > 0");
  const double av = a.convert_to<double>();
  if (av > 0.0) {
    const double la = std::log(av);
    return x * std::exp(la / x) + std::exp(la * x) / x - 2.0 * av;
  }
  // Negative base: both a^(1/x) and a^x are real only for odd integer x.
  const double xi = std::round(x);
  if (xi != x || std::fmod(xi, 2.0) == 0.0) {
    throw DomainError("negative a needs odd integer x for real powers");
  }
  const double mag = -av;
  const double root = -std::pow(mag, 1.0 / x);
  const double power = -std::pow(mag, x);
  return x * root + power / x - 2.0 * av;
}

std::vector<double> fractional_equation_roots(const Rational& a, double lo, double hi,
                                              double step) {
  if (a == 0 || a == 1 || a == -1) throw DomainError("a must not be -1, 0 or 1");
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("scan interval must lie in (0, inf)");
  if (!(step > 0.0)) throw DomainError("step must be > 0");
  constexpr double kTol = 1e-12;
  const double av = a.convert_to<double>();
  std::vector<double> roots;

  auto push_root = [&](double x) {
    for (double r : roots) {
      if (std::abs(r - x) < 1e-9) return;
    }
    roots.push_back(x);
  };

  if (av < 0.0) {
    const double first = std::ceil(lo);
    bool any = false;
    for (double x = first; x <= hi; x += 1.0) {
      if (std::fmod(x, 2.0) == 0.0) continue;
      any = true;
      const double f = fractional_residual(a, x);
      if (std::abs(f) <= kTol * std::max(1.0, 2.0 * std::abs(av))) push_root(x);
    }
    if (!any) throw DomainError("no odd integer x in the scan interval for negative a");
    return roots;
  }

  const double la = std::log(av);
  auto f = [&](double x) { return fractional_residual(a, x); };
  auto df = [&](double x) {
    return std::exp(la / x) * (1.0 - la / x) + std::exp(la * x) * (la / x - 1.0 / (x * x));
  };
  auto bisect = [&](auto&& g, double l, double r) {
    double gl = g(l);
    while (r - l > kTol) {
      const double m = 0.5 * (l + r);
      const double gm = g(m);
      if (gm == 0.0) return m;
      if ((gm < 0.0) == (gl < 0.0)) {
        l = m;
        gl = gm;
      } else {
        r = m;
      }
    }
    return 0.5 * (l + r);
  };
  const double touch_tol = 1e-9 * std::max(1.0, 2.0 * av);

  const auto n = static_cast<std::int64_t>(std::floor((hi - lo) / step));
  double x0 = lo, f0 = f(lo), d0 = df(lo);
  if (f0 == 0.0) push_root(lo);
  for (std::int64_t i = 1; i <= n + 1; ++i) {
    const double x1 = std::min(hi, lo + static_cast<double>(i) * step);
    if (x1 <= x0) break;
    const double f1 = f(x1), d1 = df(x1);
    if (std::isfinite(f0) && std::isfinite(f1)) {
      if (f1 == 0.0) {
        push_root(x1);
      } else if ((f0 < 0.0) != (f1 < 0.0) && f0 != 0.0) {
        push_root(bisect(f, x0, x1));
      } else if (std::isfinite(d0) && std::isfinite(d1) && (d0 < 0.0) != (d1 < 0.0)) {
        const double xs = bisect(df, x0, x1);
        if (std::abs(f(xs)) <= touch_tol) push_root(xs);
      }
    }
    x0 = x1;
    f0 = f1;
    d0 = d1;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

MagicSquare::MagicSquare(int rank, std::vector<Rational> cells)
    : rank_(rank), cells_(std::move(cells)) {
  if (rank < 1) throw DomainError("rank must be >= 1");
  if (cells_.size() != static_cast<std::size_t>(rank) * rank) {
    throw DomainError("a rank-" + std::to_string(rank) + " square needs " +
                      std::to_string(rank * rank) + " cells");
  }
}

MagicSquare construct_odd_magic(int n) {
  if (n < 1 || n % 2 == 0) throw DomainError("only odd ranks are supported");
  std::vector<Rational> cells(static_cast<std::size_t>(n) * n, 0);
  int row = 0, col = n / 2;
  for (int v = 1; v <= n * n; ++v) {
    cells[row * n + col] = v;
    const int up = (row - 1 + n) % n;
    const int right = (col + 1) % n;
    if (cells[up * n + right] == 0) {
      row = up;
      col = right;
    } else {
      row = (row + 1) % n;
    }
  }
  return MagicSquare(n, std::move(cells));
}

MagicCheck verify_magic(const MagicSquare& square, MagicMode mode) {
  const int n = square.rank();
  const bool mul = mode == MagicMode::multiplicative;
  if (mul) {
    for (const auto& c : square.cells()) {
      if (c == 0) throw DomainError("multiplicative check needs nonzero cells");
    }
  }
  auto fold = [&](auto cell_at) {
    Rational acc = mul ? 1 : 0;
    for (int i = 0; i < n; ++i) {
      if (mul) {
        acc *= cell_at(i);
      } else {
        acc += cell_at(i);
      }
    }
    return acc;
  };
  const Rational target = fold([&](int i) { return square.at(0, i); });
  bool holds = true;
  for (int r = 0; r < n && holds; ++r) holds = fold([&](int i) { return square.at(r, i); }) == target;
  for (int c = 0; c < n && holds; ++c) holds = fold([&](int i) { return square.at(i, c); }) == target;
  if (holds) holds = fold([&](int i) { return square.at(i, i); }) == target;
  if (holds) holds = fold([&](int i) { return square.at(i, n - 1 - i); }) == target;
  return {holds, target};
}

std::vector<CubicSolution> cubic_search(const BigInt& a, const BigInt& b, const BigInt& c,
                                        const BigInt& d, std::int64_t bound) {
  __extension__ using i128 = __int128;
  if (a == 0 && b == 0 && c == 0) throw DomainError("A, B and C must not all be zero");
  if (bound < 1) throw DomainError("bound must be >= 1");
  if (bound > 1000) throw DomainError("bound above 1000 is not supported (table size)");
  const BigInt coeff_limit = BigInt(1) << 60;
  for (const BigInt* v : {&a, &b, &c, &d}) {
    if (mp::abs(*v) >= coeff_limit) throw DomainError("coefficients must be below 2^60");
  }
  const auto narrow = [](const BigInt& v) { return static_cast<i128>(static_cast<std::int64_t>(v)); };
  const i128 ca = narrow(a), cb = narrow(b), cc = narrow(c), cd = narrow(d);

  struct Entry {
    i128 value;
    std::int32_t x, y;
  };
  std::vector<Entry> table;
  table.reserve(static_cast<std::size_t>((2 * bound + 1) * (2 * bound + 1)));
  for (std::int64_t x = -bound; x <= bound; ++x) {
    const i128 ax = ca * x * x * x;
    for (std::int64_t y = -bound; y <= bound; ++y) {
      table.push_back({ax + cb * y * y * y, static_cast<std::int32_t>(x),
                       static_cast<std::int32_t>(y)});
    }
  }
  std::sort(table.begin(), table.end(), [](const Entry& l, const Entry& r) {
    return l.value < r.value || (l.value == r.value && (l.x < r.x || (l.x == r.x && l.y < r.y)));
  });

  const std::int64_t span = 2 * bound + 1;
  const int workers = static_cast<int>(std::min<std::int64_t>(numeric::worker_count(), span));
  std::vector<std::vector<CubicSolution>> found(workers);
  auto probe = [&](int w) {
    const std::int64_t z_begin = -bound + span * w / workers;
    const std::int64_t z_end = -bound + span * (w + 1) / workers;
    for (std::int64_t z = z_begin; z < z_end; ++z) {
      const i128 need = cd - cc * z * z * z;
      auto it = std::lower_bound(table.begin(), table.end(), need,
                                 [](const Entry& e, i128 v) { return e.value < v; });
      for (; it != table.end() && it->value == need; ++it) found[w].push_back({it->x, it->y, z});
    }
  };
  if (workers == 1) {
    probe(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(probe, w);
    for (auto& t : pool) t.join();
  }
  std::vector<CubicSolution> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace labyrinth::numtheory
