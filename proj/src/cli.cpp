#include "labyrinth/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "labyrinth/bell_info.hpp"
#include "labyrinth/beth.hpp"
#include "labyrinth/constants.hpp"
#include "labyrinth/errors.hpp"
#include "labyrinth/fractal_fit.hpp"
#include "labyrinth/gravitation.hpp"
#include "labyrinth/numtheory.hpp"
#include "labyrinth/report.hpp"
#include "labyrinth/sgeom.hpp"
#include "labyrinth/unmatter.hpp"

namespace labyrinth::cli {
namespace {

using report::Json;

struct Outcome {
  Outcome(Json r = Json::object()) : result(std::move(r)) {}

  Json result;
  int code = kOk;
  std::string message;
};

using Action = std::function<Outcome()>;

struct Leaf {
  CLI::App* app;
  Action action;
};

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 42;
  bool timing = false;
};

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

std::string rational_text(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// Integers, p/q and plain decimals ("0.25", "-3.5") as exact rationals.
Rational parse_rational(const std::string& raw, const std::string& field) {
  std::string text = raw;
  text.erase(0, text.find_first_not_of(' '));
  text.erase(text.find_last_not_of(' ') + 1);
  auto digits_only = [](const std::string& s, bool allow_sign) {
    std::size_t i = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      const auto num = text.substr(0, slash), den = text.substr(slash + 1);
      if (digits_only(num, true) && digits_only(den, false)) {
        const BigInt d(den);
        if (d == 0) throw ValidationError(field, "zero denominator");
        return Rational(BigInt(num), d);
      }
    } else if (auto dot = text.find('.'); dot != std::string::npos) {
      const auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
      const bool sign_only = whole == "-" || whole == "+" || whole.empty();
      if ((sign_only || digits_only(whole, true)) && digits_only(frac, false)) {
        const bool negative = !whole.empty() && whole[0] == '-';
        const std::string mag = (sign_only ? std::string("0") : whole.substr(whole[0] == '-' || whole[0] == '+')) + frac;
        Rational r(BigInt(mag), boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size())));
        return negative ? Rational(-r) : r;
      }
    } else if (digits_only(text, true)) {
      return Rational(BigInt(text[0] == '+' ? text.substr(1) : text));
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
  }
  throw ValidationError(field, "not a rational number: '" + raw + "'");
}

BigInt parse_bigint(const std::string& text, const std::string& field) {
  const Rational r = parse_rational(text, field);
  if (denominator(r) != 1) throw ValidationError(field, "must be an integer");
  return numerator(r);
}

sgeom::RPoint parse_point(const std::string& text, const std::string& field) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ValidationError(field, "expected x,y");
  return {parse_rational(parts[0], field), parse_rational(parts[1], field)};
}

sgeom::RLine parse_line(const std::string& text, const std::string& field) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ValidationError(field, "expected a,b,c for a x + b y + c = 0");
  try {
    return sgeom::RLine(parse_rational(parts[0], field), parse_rational(parts[1], field),
                        parse_rational(parts[2], field));
  } catch (const DomainError& e) {
    throw ValidationError(field, e.what());
  }
}

Json point_json(const sgeom::RPoint& p) { return Json::array({rational_text(p.x), rational_text(p.y)}); }

Json line_json(const sgeom::RLine& l) {
  return {{"a", rational_text(l.a())}, {"b", rational_text(l.b())}, {"c", rational_text(l.c())},
          {"equation", l.to_string()}};
}

CLI::Option* real(CLI::App* app, const std::string& name, double& var, const std::string& desc) {
  return app->add_option(name, var, desc)->capture_default_str();
}

template <class T>
CLI::Option* opt(CLI::App* app, const std::string& name, T& var, const std::string& desc) {
  return app->add_option(name, var, desc)->capture_default_str();
}

// ---- fractal-fit -----------------------------------------------------------

void register_fractal(CLI::App& root, std::vector<Leaf>& leaves) {
  auto* cmd = root.add_subcommand(
      "fractal-fit",
      "Charged ball on an incline: energy vs force-law velocities and the (D, eps) fit of the "
      "mismatch functional");
  cmd->require_subcommand(1);

  struct State {
    fractal_fit::InclineSetup setup = fractal_fit::InclineSetup::example1();
    fractal_fit::SearchConfig search{};
    double dim = 2.0, eps = 0.0;
  };
  auto st = std::make_shared<State>();
  auto common = [st](CLI::App* app) {
    real(app, "--coulomb", st->setup.coulomb_coeff, "k q1 q2 / m in m^3/s^2");
    real(app, "--radius", st->setup.globe_radius, "globe radius R in m");
    real(app, "--height", st->setup.incline_height, "incline height H in m");
    opt(app, "--panels", st->search.quad.panels, "quadrature panels");
    opt(app, "--points", st->search.quad.points_per_panel, "Gauss points per panel (3, 5, 7)");
  };

  auto* fit = cmd->add_subcommand(
      "example1", "Alternating eps / D golden-section search from (D, eps) = (2, 0)");
  common(fit);
  real(fit, "--dim0", st->dim, "starting Coulomb exponent D");
  real(fit, "--eps0", st->eps, "starting Newton exponent increment eps");
  opt(fit, "--max-sweeps", st->search.max_sweeps, "sweep cap");
  real(fit, "--stop-threshold", st->search.stop_threshold, "relative stage gain that stops the search");
  real(fit, "--tolerance", st->search.minimizer_tolerance, "golden-section bracket width");
  leaves.push_back({fit, [st]() {
                      Outcome o;
                      const double pi0 =
                          fractal_fit::functional_pi(st->setup, {st->dim, st->eps}, st->search.quad);
                      fractal_fit::FitResult r;
                      try {
                        r = fractal_fit::optimize_alternating(st->setup, {st->dim, st->eps}, st->search);
                        o.result["status"] = "converged";
                      } catch (const fractal_fit::FitConvergenceError& e) {
                        r = e.partial();
                        o.result["status"] = "not_converged";
                        o.code = kNumerical;
                        o.message = e.what();
                      }
                      o.result["dim"] = r.dim;
                      o.result["eps"] = r.eps;
                      o.result["pi"] = r.pi_value;
                      o.result["pi0"] = pi0;
                      o.result["pi_ratio"] = r.pi_value / pi0;
                      o.result["vB2_energy"] = r.vB2_energy;
                      o.result["vB2_law"] = r.vB2_law;
                      o.result["sweeps"] = r.sweeps;
                      Json trace = Json::array();
                      for (const auto& s : r.trace) {
                        trace.push_back({{"stage", s.label}, {"dim", s.dim}, {"eps", s.eps}, {"pi", s.pi_value}});
                      }
                      o.result["trace"] = trace;
                      return o;
                    }});

  auto* base = cmd->add_subcommand("baseline", "Squared speeds at the foot of the incline, both routes");
  common(base);
  real(base, "--dim", st->dim, "Coulomb exponent D");
  real(base, "--eps", st->eps, "Newton exponent increment eps");
  leaves.push_back({base, [st]() {
                      Outcome o;
                      const double e = fractal_fit::velocity_sq_energy(st->setup, st->dim, 0.0);
                      const double l =
                          fractal_fit::velocity_sq_law(st->setup, {st->dim, st->eps}, 0.0, st->search.quad);
                      o.result = {{"vB2_energy", e}, {"vB2_law", l}, {"mismatch", l / e - 1.0}};
                      return o;
                    }});

  auto* pi = cmd->add_subcommand("pi", "Mismatch functional Pi(D, eps) in metres");
  common(pi);
  real(pi, "--dim", st->dim, "Coulomb exponent D");
  real(pi, "--eps", st->eps, "Newton exponent increment eps");
  leaves.push_back({pi, [st]() {
                      Outcome o;
                      o.result = {{"dim", st->dim}, {"eps", st->eps},
                                  {"pi", fractal_fit::functional_pi(st->setup, {st->dim, st->eps}, st->search.quad)}};
                      return o;
                    }});
}

// ---- gravity ---------------------------------------------------------------

void register_gravity(CLI::App& root, std::vector<Leaf>& leaves) {
  auto* cmd = root.add_subcommand(
      "gravity", "Improved two-body gravitation: effective G along an orbit, fractal G ratios, "
                 "Pioneer-type Yukawa correction");
  cmd->require_subcommand(1);
  struct State {
    double a = constants::kMercurySemimajor, e = constants::kMercuryEccentricity;
    double dim = constants::kFittedCoulombDim, radius = constants::kEarthRadius;
    double height = constants::kInclineHeight, slope = constants::kDeltaSlope;
    double alpha = -1e-3, lambda = 4e14, r = 3e12;
  };
  auto st = std::make_shared<State>();

  auto* bounds = cmd->add_subcommand("bounds", "Relative G excess at aphelion and perihelion");
  real(bounds, "--a", st->a, "semimajor axis in m");
  real(bounds, "--e", st->e, "eccentricity");
  leaves.push_back({bounds, [st]() {
                      const auto b = gravitation::orbit_g_excess(gravitation::TwoBodyConfig::sun(), st->a, st->e);
                      return Outcome{{{"lower", b.lower}, {"upper", b.upper}}};
                    }});

  auto* ratios = cmd->add_subcommand("ratios", "G(r)/G0 for constant and position-dependent dimension");
  real(ratios, "--dim", st->dim, "constant dimension D");
  real(ratios, "--radius", st->radius, "globe radius in m");
  real(ratios, "--height", st->height, "incline height in m");
  real(ratios, "--slope", st->slope, "dimension slope in 1/m");
  leaves.push_back({ratios, [st]() {
                      const double top = st->radius + st->height;
                      return Outcome{{{"constant_at_radius", gravitation::g_ratio_constant_dimension(st->radius, st->dim)},
                                      {"constant_at_top", gravitation::g_ratio_constant_dimension(top, st->dim)},
                                      {"variable_max", gravitation::g_ratio_variable_dimension(top, st->height, st->slope)}}};
                    }});

  auto* pioneer = cmd->add_subcommand("pioneer", "Yukawa-corrected G and the extra acceleration");
  real(pioneer, "--alpha", st->alpha, "Yukawa strength");
  real(pioneer, "--lambda", st->lambda, "Yukawa range in m");
  real(pioneer, "--r", st->r, "distance from the Sun in m");
  leaves.push_back({pioneer, [st]() {
                      const auto cfg = gravitation::TwoBodyConfig::sun();
                      const gravitation::PioneerParams p{st->alpha, st->lambda};
                      return Outcome{{{"delta_g", gravitation::delta_g(cfg, p, st->r)},
                                      {"acceleration", gravitation::pioneer_acceleration(cfg, p, st->r)}}};
                    }});
}

// ---- celestial -------------------------------------------------------------

void register_celestial(CLI::App& root, std::vector<Leaf>& leaves) {
  auto* cmd = root.add_subcommand(
      "celestial", "Orbit quantization r = n^2 GM / v0^2 and quantized redshift ladders");
  cmd->require_subcommand(1);
  struct State {
    std::string table;
    double v0 = constants::kSolarV0, gm = constants::kGmSun;
    double z0 = 0.0, dv = constants::kTifftVelocity1;
    int rungs = 5;
    celestial::QuasarParams quasar{};
  };
  auto st = std::make_shared<State>();

  auto* assign = cmd->add_subcommand("assign", "Nearest quantum number for each orbit");
  assign->add_option("--table", st->table, "orbit CSV (default: the eight planets)");
  real(assign, "--v0", st->v0, "specific velocity in m/s");
  real(assign, "--gm", st->gm, "GM of the central body in m^3/s^2");
  leaves.push_back({assign, [st]() {
                      const auto table = st->table.empty() ? celestial::OrbitTable::solar_planets()
                                                           : ingest_orbit_csv(st->table);
                      Json rows = Json::array();
                      for (const auto& a : celestial::assign_quantum_numbers({st->gm, st->v0}, table)) {
                        rows.push_back({{"name", a.name}, {"n", a.n}, {"residual", a.residual}});
                      }
                      return Outcome{{{"assignments", rows}}};
                    }});

  auto* ladder = cmd->add_subcommand("ladder", "Redshift ladder z_n = z0 + n dz with dz = dv / c");
  real(ladder, "--z0", st->z0, "base redshift");
  real(ladder, "--dv", st->dv, "velocity step in m/s");
  opt(ladder, "--rungs", st->rungs, "number of rungs");
  leaves.push_back({ladder, [st]() {
                      if (st->rungs < 1) throw ValidationError("rungs", "must be >= 1");
                      const double dz = celestial::delta_z_from_velocity(st->dv, constants::kLightSpeed);
                      Json rungs = Json::array();
                      for (int n = 0; n < st->rungs; ++n) {
                        Json row{{"n", n}, {"z", celestial::redshift_ladder_rung({st->z0, dz}, n)}};
                        if (st->z0 != 0.0) {
                          row["z_multiplicative"] = celestial::redshift_ladder_rung_multiplicative({st->z0, dz}, n);
                        }
                        rungs.push_back(row);
                      }
                      return Outcome{{{"dz", dz}, {"rungs", rungs}}};
                    }});

  auto* quasar = cmd->add_subcommand("quasar", "Quasar redshift zf (N - M(N)/10)");
  real(quasar, "--zf", st->quasar.zf, "fundamental redshift constant");
  opt(quasar, "--N", st->quasar.capital_n, "integer N");
  real(quasar, "--m", st->quasar.m_of_n, "M(N)");
  leaves.push_back({quasar, [st]() {
                      return Outcome{{{"z", celestial::bell_quasar_redshift(st->quasar)}}};
                    }});
}

// ---- unmatter --------------------------------------------------------------

void register_unmatter(CLI::App& root, std::vector<Leaf>& leaves) {
  auto* cmd = root.add_subcommand(
      "unmatter", "Colorless quark/antiquark combinations: counts, classification, charges");
  cmd->require_subcommand(1);
  struct State {
    std::int64_t n = 2;
    std::string combo = "u,~u";
    std::int64_t axioms = 21;
  };
  auto st = std::make_shared<State>();

  auto* count = cmd->add_subcommand("count", "Unmatter and colorless combination counts for n constituents");
  opt(count, "--n", st->n, "number of constituents");
  leaves.push_back({count, [st]() {
                      return Outcome{{{"n", st->n},
                                      {"unmatter", big(unmatter::count_unmatter_combinations(st->n))},
                                      {"colorless", big(unmatter::count_colorless_combinations(st->n))}}};
                    }});

  auto* table = cmd->add_subcommand("table", "Counts for n = 2..10");
  leaves.push_back({table, []() {
                      Json rows = Json::array();
                      for (std::int64_t n = 2; n <= 10; ++n) {
                        rows.push_back({{"n", n}, {"unmatter", big(unmatter::count_unmatter_combinations(n))}});
                      }
                      return Outcome{{{"table", rows}}};
                    }});

  auto* classify = cmd->add_subcommand("classify", "Classify a combination such as u,u,d,d,~s");
  opt(classify, "--combo", st->combo, "comma-separated constituents, ~ marks an antiquark");
  leaves.push_back({classify, [st]() {
                      const auto combo = unmatter::ParticleCombo::parse(st->combo);
                      return Outcome{{{"combo", combo.to_string()},
                                      {"quarks", combo.quark_count()},
                                      {"antiquarks", combo.antiquark_count()},
                                      {"class", std::string(unmatter::to_string(unmatter::classify(combo)))},
                                      {"charge", rational_text(unmatter::charge(combo))}}};
                    }});

  auto* denial = cmd->add_subcommand("denial", "Number of geometries denying at least one axiom: 2^n - 1");
  opt(denial, "--axioms", st->axioms, "number of axioms");
  leaves.push_back({denial, [st]() {
                      return Outcome{{{"axioms", st->axioms}, {"count", big(unmatter::axiom_denial_count(st->axioms))}}};
                    }});
}

// ---- numtheory -------------------------------------------------------------

void register_numtheory(CLI::App& root, std::vector<Leaf>& leaves) {
  auto* cmd = root.add_subcommand(
      "numtheory", "Pseudo-Smarandache function, prime representations, magic squares, cubic search");
  cmd->require_subcommand(1);
  struct State {
    std::string n = "909";
    int base = 10;
    std::int64_t cap = 64, i = 5;
    std::string y = "571";
    int max_factors = 8;
    std::string target = "3";
    int k = 3, s = 1;
    std::string limit = "30";
    bool distinct = false;
    std::string a = "2";
    double lo = 0.05, hi = 5.0, step = 1e-3;
    int order = 3;
    std::vector<std::string> coeffs{"1", "1", "1", "1"};
    std::int64_t bound = 12;
  };
  auto st = std::make_shared<State>();

  auto* z = cmd->add_subcommand("z", "Z(n): least m with n | m(m+1)/2");
  opt(z, "--n", st->n, "argument n >= 1");
  leaves.push_back({z, [st]() {
                      const BigInt n = parse_bigint(st->n, "n");
                      return Outcome{{{"n", big(n)}, {"z", big(numtheory::pseudo_smarandache(n))}}};
                    }});

  auto* chain = cmd->add_subcommand("chain", "Length k of the palindromic chain n, Z(n), Z(Z(n)), ...");
  opt(chain, "--n", st->n, "start n >= 1");
  opt(chain, "--base", st->base, "number base");
  opt(chain, "--cap", st->cap, "iteration cap");
  leaves.push_back({chain, [st]() {
                      const BigInt n = parse_bigint(st->n, "n");
                      Json seq = Json::array();
                      BigInt cur = n;
                      const auto k = numtheory::palindromic_chain_length(n, st->base, st->cap);
                      seq.push_back(big(cur));
                      for (std::int64_t j = 0; j < k; ++j) {
                        cur = numtheory::pseudo_smarandache(cur);
                        seq.push_back(big(cur));
                      }
                      return Outcome{{{"n", big(n)}, {"k", k}, {"chain", seq}}};
                    }});

  auto* factor = cmd->add_subcommand("factor", "Prime factorisation and primality");
  opt(factor, "--n", st->n, "integer >= 1");
  leaves.push_back({factor, [st]() {
                      const BigInt n = parse_bigint(st->n, "n");
                      Json fs = Json::array();
                      for (const auto& [p, e] : numtheory::factorize(n)) fs.push_back({{"p", big(p)}, {"e", e}});
                      return Outcome{{{"n", big(n)}, {"prime", numtheory::probable_prime(n)}, {"factors", fs}}};
                    }});

  auto* consecutive = cmd->add_subcommand("consecutive", "Consecutive-sequence term 123...i and its primality");
  opt(consecutive, "--i", st->i, "term index");
  opt(consecutive, "--base", st->base, "number base");
  leaves.push_back({consecutive, [st]() {
                      const BigInt t = numtheory::consecutive_term(st->i, st->base);
                      return Outcome{{{"i", st->i}, {"term", t.str()}, {"prime", numtheory::probable_prime(t)}}};
                    }});

  auto* product = cmd->add_subcommand("product", "Write y = 2 p1 ... pj + 1 with primes p");
  opt(product, "--y", st->y, "odd y >= 3");
  opt(product, "--max-factors", st->max_factors, "largest j");
  leaves.push_back({product, [st]() {
                      const BigInt y = parse_bigint(st->y, "y");
                      Json reps = Json::array();
                      for (const auto& rep : numtheory::prime_product_plus_one_representations(y, st->max_factors)) {
                        Json r = Json::array();
                        for (const auto& p : rep) r.push_back(big(p));
                        reps.push_back(r);
                      }
                      return Outcome{{{"y", big(y)}, {"representations", reps}}};
                    }});

  auto* sumdiff = cmd->add_subcommand("sumdiff", "target = (sum of k-s primes) - (sum of s primes)");
  opt(sumdiff, "--target", st->target, "target integer");
  opt(sumdiff, "--k", st->k, "total number of primes");
  opt(sumdiff, "--s", st->s, "primes in the subtracted set");
  opt(sumdiff, "--limit", st->limit, "largest prime considered");
  sumdiff->add_flag("--distinct", st->distinct, "no prime may repeat");
  leaves.push_back({sumdiff, [st]() {
                      const auto reps = numtheory::prime_sum_difference_representations(
                          parse_bigint(st->target, "target"), st->k, st->s, parse_bigint(st->limit, "limit"),
                          st->distinct);
                      Json rows = Json::array();
                      for (const auto& r : reps) rows.push_back({{"plus", r.plus}, {"minus", r.minus}});
                      return Outcome{{{"count", rows.size()}, {"representations", rows}}};
                    }});

  auto* fractional = cmd->add_subcommand("fractional", "Roots of x a^(1/x) + a^x / x = 2a on [lo, hi]");
  opt(fractional, "--a", st->a, "rational a, not -1, 0, 1");
  real(fractional, "--lo", st->lo, "scan start (> 0)");
  real(fractional, "--hi", st->hi, "scan end");
  real(fractional, "--step", st->step, "scan step");
  leaves.push_back({fractional, [st]() {
                      const Rational a = parse_rational(st->a, "a");
                      return Outcome{{{"a", rational_text(a)},
                                      {"roots", numtheory::fractional_equation_roots(a, st->lo, st->hi, st->step)}}};
                    }});

  auto* magic = cmd->add_subcommand("magic", "Siamese odd-order magic square and its line sums");
  opt(magic, "--order", st->order, "odd order n");
  leaves.push_back({magic, [st]() {
                      const auto sq = numtheory::construct_odd_magic(st->order);
                      Json rows = Json::array();
                      for (int r = 0; r < sq.rank(); ++r) {
                        Json row = Json::array();
                        for (int c = 0; c < sq.rank(); ++c) row.push_back(big(numerator(sq.at(r, c))));
                        rows.push_back(row);
                      }
                      const auto check = numtheory::verify_magic(sq, numtheory::MagicMode::additive);
                      return Outcome{{{"square", rows}, {"magic", check.holds}, {"line_sum", rational_text(check.value)}}};
                    }});

  auto* cubic = cmd->add_subcommand("cubic", "Integer solutions of A x^3 + B y^3 + C z^3 = D in a box");
  cubic->add_option("--coeffs", st->coeffs, "A B C D")->expected(4)->capture_default_str();
  opt(cubic, "--bound", st->bound, "box half-width");
  leaves.push_back({cubic, [st]() {
                      std::vector<BigInt> c;
                      for (const auto& s : st->coeffs) c.push_back(parse_bigint(s, "coeffs"));
                      Json rows = Json::array();
                      for (const auto& s : numtheory::cubic_search(c[0], c[1], c[2], c[3], st->bound)) {
                        rows.push_back(Json::array({s.x, s.y, s.z}));
                      }
                      return Outcome{{{"count", rows.size()}, {"solutions", rows}}};
                    }});
}

// ---- sgeom -----------------------------------------------------------------

void register_sgeom(CLI::App& root, std::vector<Leaf>& leaves) {
  auto* cmd = root.add_subcommand(
      "sgeom", "Exact s-line predicates for the three-anchor plane model");
  cmd->require_subcommand(1);
  struct State {
    std::string anchors = "0,0;1,0;0,1";
    std::string line = "0,1,-1";
    std::string p = "2,3";
    std::string q = "1/2,0";
  };
  auto st = std::make_shared<State>();
  auto anchors_of = [st]() {
    const auto parts = split(st->anchors, ';');
    if (parts.size() != 3) throw ValidationError("anchors", "expected x,y;x,y;x,y");
    try {
      return sgeom::Anchors(parse_point(parts[0], "anchors"), parse_point(parts[1], "anchors"),
                            parse_point(parts[2], "anchors"));
    } catch (const DomainError& e) {
      throw ValidationError("anchors", e.what());
    }
  };
  auto anchors_opt = [st](CLI::App* app) { opt(app, "--anchors", st->anchors, "A;B;C as x,y pairs"); };

  auto* inc = cmd->add_subcommand("incidence", "Anchors on a line and whether it is an s-line");
  anchors_opt(inc);
  opt(inc, "--line", st->line, "a,b,c of a x + b y + c = 0");
  leaves.push_back({inc, [st, anchors_of]() {
                      const auto anchors = anchors_of();
                      const auto line = parse_line(st->line, "line");
                      return Outcome{{{"line", line_json(line)},
                                      {"incidence", sgeom::incidence_count(line, anchors)},
                                      {"s_line", sgeom::is_s_line(line, anchors)}}};
                    }});

  auto* through = cmd->add_subcommand("through", "s-lines joining a point to the anchors");
  anchors_opt(through);
  opt(through, "--p", st->p, "point x,y");
  leaves.push_back({through, [st, anchors_of]() {
                      const auto anchors = anchors_of();
                      const auto p = parse_point(st->p, "p");
                      const auto res = sgeom::s_lines_through(p, anchors);
                      Outcome o;
                      o.result["point"] = point_json(p);
                      if (const auto* pencil = std::get_if<sgeom::InfinitePencil>(&res)) {
                        o.result["infinite_pencil"] = std::string(1, pencil->anchor);
                      } else {
                        Json lines = Json::array();
                        for (const auto& l : std::get<std::vector<sgeom::RLine>>(res)) lines.push_back(line_json(l));
                        o.result["lines"] = lines;
                      }
                      return o;
                    }});

  auto* par = cmd->add_subcommand("parallels", "Number of s-lines through p disjoint from an s-line");
  anchors_opt(par);
  opt(par, "--p", st->p, "point x,y");
  opt(par, "--line", st->line, "reference s-line a,b,c");
  leaves.push_back({par, [st, anchors_of]() {
                      const auto anchors = anchors_of();
                      return Outcome{{{"count", sgeom::count_s_parallels(parse_point(st->p, "p"),
                                                                         parse_line(st->line, "line"), anchors)}}};
                    }});

  auto* pair = cmd->add_subcommand("pair", "The line through p and q if it is an s-line");
  anchors_opt(pair);
  opt(pair, "--p", st->p, "point x,y");
  opt(pair, "--q", st->q, "point x,y");
  leaves.push_back({pair, [st, anchors_of]() {
                      const auto anchors = anchors_of();
                      const auto l = sgeom::s_line_through_pair(parse_point(st->p, "p"), parse_point(st->q, "q"), anchors);
                      return Outcome{{{"s_line", l ? line_json(*l) : Json(nullptr)}}};
                    }});
}

// ---- beth ------------------------------------------------------------------

void register_beth(CLI::App& root, std::vector<Leaf>& leaves, const Globals& globals) {
  auto* cmd = root.add_subcommand(
      "beth", "Circularly polarised beam: power, J_z/W, standing double beam, spin flux and plate torque");
  cmd->require_subcommand(1);
  struct State {
    beth::BeamProfile profile{};
    beth::Frequency freq{};
    double slice = 1.0;
    double power = constants::kBethPower;
    beth::Frequency torque_freq{constants::kBethOmega};
    int samples = 1000;
  };
  auto st = std::make_shared<State>();
  auto profile_opts = [st](CLI::App* app) {
    real(app, "--amplitude", st->profile.amplitude, "plateau field E0");
    real(app, "--core", st->profile.core_radius, "core radius R0");
    real(app, "--skin", st->profile.skin, "skin thickness delta");
  };

  auto* prof = cmd->add_subcommand("profile", "Quadratures and spin flux for a raised-cosine beam");
  profile_opts(prof);
  real(prof, "--omega", st->freq.omega, "angular frequency");
  real(prof, "--slice", st->slice, "slice length l");
  leaves.push_back({prof, [st]() {
                      const auto routes = beth::angular_momentum_routes(st->profile, st->freq, st->slice);
                      const double ratio = beth::angular_momentum_per_energy(st->profile, st->freq, st->slice);
                      return Outcome{{{"power", beth::beam_power(st->profile)},
                                      {"jz_integrand", routes.jz_integrand},
                                      {"jz_direct", routes.jz_direct},
                                      {"energy", routes.energy},
                                      {"jz_per_energy", ratio},
                                      {"spin_flux_below", beth::spin_flux_density(st->profile, 0.0, beth::PlateSide::below)},
                                      {"spin_flux_above", beth::spin_flux_density(st->profile, 0.0, beth::PlateSide::above)},
                                      {"plate_torque", beth::plate_torque(st->profile, st->freq)}}};
                    }});

  auto* torque = cmd->add_subcommand("torque", "Plate torque 4P/omega and single pass 2P/omega");
  real(torque, "--power", st->power, "beam power");
  real(torque, "--omega", st->torque_freq.omega, "angular frequency");
  leaves.push_back({torque, [st]() {
                      return Outcome{{{"plate_torque", beth::plate_torque(st->power, st->freq)},
                                      {"single_pass_torque", beth::single_pass_torque(st->power, st->freq)}}};
                    }});

  auto* poynting = cmd->add_subcommand("poynting", "Largest |E x H| / (|E||H|) of the double beam at random points");
  profile_opts(poynting);
  opt(poynting, "--samples", st->samples, "number of random points");
  leaves.push_back({poynting, [st, &globals]() {
                      if (st->samples < 1) throw ValidationError("samples", "must be >= 1");
                      std::mt19937_64 rng(globals.seed);
                      auto uni = [&rng](double lo, double hi) {
                        return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
                      };
                      const double reach = st->profile.core_radius + 1.5 * st->profile.skin;
                      double worst = 0.0;
                      for (int i = 0; i < st->samples; ++i) {
                        const auto f = beth::standing_fields(st->profile, uni(-reach, reach), uni(-reach, reach),
                                                             uni(0.0, 2.0 * std::numbers::pi), uni(0.0, 2.0 * std::numbers::pi));
                        const auto& e = f.e_field;
                        const auto& h = f.h_field;
                        const double cx = e[1] * h[2] - e[2] * h[1];
                        const double cy = e[2] * h[0] - e[0] * h[2];
                        const double cz = e[0] * h[1] - e[1] * h[0];
                        const double scale = std::max(1.0, std::hypot(e[0], e[1], e[2]) * std::hypot(h[0], h[1], h[2]));
                        worst = std::max(worst, std::hypot(cx, cy, cz) / scale);
                      }
                      return Outcome{{{"samples", st->samples}, {"max_relative_poynting", worst}}};
                    }});
}

// ---- bell ------------------------------------------------------------------

void register_bell(CLI::App& root, std::vector<Leaf>& leaves, const Globals& globals) {
  auto* cmd = root.add_subcommand(
      "bell", "Bell inequality and its evidence-theory variants, entropies, Holevo bound, Landauer relations");
  cmd->require_subcommand(1);
  struct State {
    double phi = std::numbers::pi / 3.0, delta = 2.0 * std::numbers::pi / 3.0;
    double c_union = 0.0, c_intersect = 0.0;
    std::int64_t samples = 100000;
    double p0 = 0.5;
    std::vector<double> p{0.25, 0.75};
    double temperature = 300.0, omega = constants::kBethOmega;
    std::string theory = "dsmt";
    std::vector<double> masses{0.3, 0.3, 0.3, 0.1};
  };
  auto st = std::make_shared<State>();

  auto* lhs = cmd->add_subcommand("lhs", "Bell left-hand side for the singlet correlation C = -cos");
  real(lhs, "--phi", st->phi, "angle phi in rad");
  real(lhs, "--delta", st->delta, "angle delta in rad");
  real(lhs, "--union", st->c_union, "C(delta u phi) term");
  real(lhs, "--intersect", st->c_intersect, "C(delta n phi) term");
  leaves.push_back({lhs, [st]() {
                      const bell_info::CorrelationFn c = [](double t) { return -std::cos(t); };
                      const auto plain = bell_info::bell_lhs(c, st->phi, st->delta);
                      const auto mod = bell_info::modified_bell_lhs(c, st->phi, st->delta, st->c_union, st->c_intersect);
                      return Outcome{{{"lhs", plain.lhs}, {"satisfied", plain.satisfied},
                                      {"modified_lhs", mod.lhs}, {"modified_satisfied", mod.satisfied}}};
                    }});

  auto* lhv = cmd->add_subcommand("lhv", "Monte-Carlo local hidden-variable model (uses --seed)");
  real(lhv, "--phi", st->phi, "angle phi in rad");
  real(lhv, "--delta", st->delta, "angle delta in rad");
  opt(lhv, "--samples", st->samples, "number of hidden-variable draws");
  leaves.push_back({lhv, [st, &globals]() {
                      const auto e = bell_info::simulate_lhv(st->phi, st->delta, st->samples, globals.seed);
                      return Outcome{{{"c_phi", e.c_phi}, {"c_delta", e.c_delta}, {"c_diff", e.c_diff},
                                      {"lhs", e.lhs}, {"sigma", e.sigma}, {"samples", e.samples},
                                      {"within_4_sigma", e.within(4.0)}}};
                    }});

  auto* holevo = cmd->add_subcommand("holevo", "Holevo quantity of the ensemble {|0>, |+>}");
  real(holevo, "--p0", st->p0, "weight of |0>");
  leaves.push_back({holevo, [st]() {
                      const double s = 1.0 / std::sqrt(2.0);
                      const std::vector<std::pair<double, bell_info::QubitDensity>> ens{
                          {st->p0, bell_info::QubitDensity::pure(1.0, 0.0)},
                          {1.0 - st->p0, bell_info::QubitDensity::pure(s, s)}};
                      const double mixed = bell_info::von_neumann_entropy(bell_info::mix(ens));
                      return Outcome{{{"holevo", bell_info::holevo_quantity(ens)}, {"mixture_entropy", mixed}}};
                    }});

  auto* ent = cmd->add_subcommand("entropy", "Shannon entropy in bits");
  ent->add_option("--p", st->p, "probabilities")->capture_default_str();
  leaves.push_back({ent, [st]() { return Outcome{{{"bits", bell_info::entropy(st->p)}}}; }});

  auto* thermal = cmd->add_subcommand("thermal", "Landauer energy, T_c/T and the temperature-dependent Planck estimate");
  real(thermal, "--temperature", st->temperature, "temperature in K");
  real(thermal, "--omega", st->omega, "angular frequency in rad/s");
  leaves.push_back({thermal, [st]() {
                      const double k = constants::kBoltzmann;
                      return Outcome{{{"landauer_energy", bell_info::landauer_energy(st->temperature, k)},
                                      {"critical_temperature_ratio", bell_info::critical_temperature_ratio()},
                                      {"planck_estimate", bell_info::planck_estimate(st->omega, st->temperature, k)},
                                      {"temperature_for_hbar", bell_info::temperature_for_planck(st->omega, constants::kHbar, k)}}};
                    }});

  auto* masses = cmd->add_subcommand("masses", "Normalisation check of belief masses");
  masses->add_option("--theory", st->theory, "dempster_shafer, dsmt or uft")
      ->check(CLI::IsMember({"dempster_shafer", "dsmt", "uft"}))
      ->capture_default_str();
  masses->add_option("--masses", st->masses,
                     "m(A) m(B) m(AuB) [m(AnB) [four negation masses]]")
      ->capture_default_str();
  leaves.push_back({masses, [st]() {
                      const auto& v = st->masses;
                      if (v.size() != 3 && v.size() != 4 && v.size() != 8) {
                        throw ValidationError("masses", "expected 3, 4 or 8 values");
                      }
                      bell_info::MassAssignment m{v[0], v[1], v[2], v.size() > 3 ? v[3] : 0.0, std::nullopt};
                      if (v.size() == 8) m.negations = std::array<double, 4>{v[4], v[5], v[6], v[7]};
                      const auto theory = st->theory == "dempster_shafer" ? bell_info::Theory::dempster_shafer
                                          : st->theory == "dsmt"          ? bell_info::Theory::dsmt
                                                                          : bell_info::Theory::uft;
                      const auto check = bell_info::validate_masses(m, theory);
                      return Outcome{{{"valid", check.valid}, {"diagnostic", check.diagnostic}}};
                    }});
  (void)globals;
}

// Echo of every option on the selected path (explicit value or default).
Json config_echo(const CLI::App* leaf, const Globals& g) {
  Json config = {{"format", g.format}, {"seed", g.seed}, {"timing", g.timing}};
  for (const CLI::App* app = leaf; app != nullptr && app->get_parent() != nullptr; app = app->get_parent()) {
    for (const CLI::Option* o : app->get_options()) {
      const std::string name = o->get_single_name();
      if (name.empty() || name == "help" || !o->nonpositional()) continue;
      std::vector<std::string> values = o->results();
      if (values.empty()) {
        if (o->get_type_size() == 0) {
          config[name] = false;
          continue;
        }
        values.push_back(o->get_default_str());
      }
      if (o->get_type_size() == 0) {
        config[name] = true;
      } else if (values.size() == 1 && o->get_expected_max() <= 1) {
        config[name] = values.front();
      } else {
        config[name] = values;
      }
    }
  }
  return config;
}

std::string leaf_path(const CLI::App* leaf) {
  std::string path;
  for (const CLI::App* app = leaf; app != nullptr && app->get_parent() != nullptr; app = app->get_parent()) {
    path = path.empty() ? app->get_name() : app->get_name() + " " + path;
  }
  return path;
}

}  // namespace

celestial::OrbitTable parse_orbit_csv(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  auto next = [&]() {
    if (!std::getline(in, line)) return false;
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next()) throw ParseError(1, "empty file, expected header 'name,semimajor_axis_m'");
  if (line != "name,semimajor_axis_m") {
    throw ParseError(1, "expected header 'name,semimajor_axis_m', got '" + line + "'");
  }
  celestial::OrbitTable table;
  std::vector<std::string> seen;
  while (next()) {
    if (line.empty()) {
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(number, "blank line");
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError(number, "expected exactly two fields");
    }
    const std::string name = line.substr(0, comma);
    const std::string value = line.substr(comma + 1);
    if (name.empty()) throw ParseError(number, "empty name");
    double axis = 0.0;
    std::size_t used = 0;
    try {
      axis = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (value.empty() || used != value.size()) throw ParseError(number, "not a number: '" + value + "'");
    if (!(axis > 0.0) || !std::isfinite(axis)) {
      throw ValidationError("semimajor_axis_m", "line " + std::to_string(number) + ": must be positive, got " + value);
    }
    for (const auto& s : seen) {
      if (s == name) throw ValidationError("name", "line " + std::to_string(number) + ": duplicate '" + name + "'");
    }
    seen.push_back(name);
    table.add({name, axis});
  }
  return table;
}

celestial::OrbitTable ingest_orbit_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("table", "cannot open '" + path + "'");
  return parse_orbit_csv(in);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"labyrinth: numerical companion toolkit for fractal force laws, quantized orbits, "
               "unmatter combinatorics, number theory, s-geometry, beam spin flux and Bell inequalities",
               "labyrinth"};
  app.set_version_flag("--version", report::toolkit_version());
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option overrides");

  Globals globals;
  app.add_option("--format", globals.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--seed", globals.seed, "seed for randomised procedures")->capture_default_str();
  app.add_flag("--timing", globals.timing, "add wall time to the report (breaks byte identity)");

  std::vector<Leaf> leaves;
  register_fractal(app, leaves);
  register_gravity(app, leaves);
  register_celestial(app, leaves);
  register_unmatter(app, leaves);
  register_numtheory(app, leaves);
  register_sgeom(app, leaves);
  register_beth(app, leaves, globals);
  register_bell(app, leaves, globals);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  const Leaf* chosen = nullptr;
  for (const auto& leaf : leaves) {
    if (leaf.app->parsed()) chosen = &leaf;
  }
  if (chosen == nullptr) {
    err << "error: no subcommand selected\n";
    return kValidation;
  }

  report::Report rep;
  rep.subcommand = leaf_path(chosen->app);
  rep.config = config_echo(chosen->app, globals);
  Outcome outcome;
  try {
    const auto start = std::chrono::steady_clock::now();
    outcome = chosen->action();
    if (globals.timing) {
      rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kValidation;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::out_of_range& e) {
    err << "range error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }

  rep.result = std::move(outcome.result);
  out << (globals.format == "table" ? report::render_table(rep) : report::render_json(rep));
  if (outcome.code != kOk) err << "error: " << outcome.message << "\n";
  return outcome.code;
}

}  // namespace labyrinth::cli
