#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "labyrinth/bell_info.hpp"
#include "labyrinth/beth.hpp"
#include "labyrinth/celestial.hpp"
#include "labyrinth/cli.hpp"
#include "labyrinth/errors.hpp"
#include "labyrinth/fractal_fit.hpp"
#include "labyrinth/gravitation.hpp"
#include "labyrinth/numtheory.hpp"
#include "labyrinth/report.hpp"
#include "labyrinth/unmatter.hpp"

namespace py = pybind11;
using namespace labyrinth;

namespace {

// Python ints cross the boundary as decimal text; cpp_int has no caster.
BigInt to_big(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

fractal_fit::InclineSetup setup_from(double coulomb_coeff, double radius, double height) {
  fractal_fit::InclineSetup s{coulomb_coeff, radius, height};
  s.validate();
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "labyrinth-kit native core";
  m.attr("__version__") = report::toolkit_version();

  // ValueError / ArithmeticError bases so callers can catch the builtin kinds.
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  const auto ex1 = fractal_fit::InclineSetup::example1();
  m.def(
      "velocity_sq_energy",
      [](double dim, double x, double k, double r, double h) {
        return fractal_fit::velocity_sq_energy(setup_from(k, r, h), dim, x);
      },
      py::arg("dim"), py::arg("x") = 0.0, py::arg("coulomb_coeff") = ex1.coulomb_coeff,
      py::arg("globe_radius") = ex1.globe_radius, py::arg("incline_height") = ex1.incline_height);
  m.def(
      "velocity_sq_law",
      [](double dim, double eps, double x, double k, double r, double h) {
        return fractal_fit::velocity_sq_law(setup_from(k, r, h), {dim, eps}, x);
      },
      py::arg("dim"), py::arg("eps"), py::arg("x") = 0.0, py::arg("coulomb_coeff") = ex1.coulomb_coeff,
      py::arg("globe_radius") = ex1.globe_radius, py::arg("incline_height") = ex1.incline_height);
  m.def(
      "functional_pi",
      [ex1](double dim, double eps, int panels) {
        fractal_fit::QuadratureConfig q;
        q.panels = panels;
        return fractal_fit::functional_pi(ex1, {dim, eps}, q);
      },
      py::arg("dim"), py::arg("eps"), py::arg("panels") = fractal_fit::QuadratureConfig{}.panels);

  m.def(
      "orbit_g_excess",
      [](double a, double e) {
        const auto b = gravitation::orbit_g_excess(gravitation::TwoBodyConfig::sun(), a, e);
        return std::make_pair(b.lower, b.upper);
      },
      py::arg("semimajor"), py::arg("eccentricity"));
  m.def("g_ratio_constant_dimension", &gravitation::g_ratio_constant_dimension, py::arg("r"), py::arg("dim"));

  m.def(
      "assign_quantum_numbers",
      [](const std::vector<std::pair<std::string, double>>& orbits, double gm, double v0) {
        std::vector<celestial::OrbitEntry> entries;
        for (const auto& [name, a] : orbits) entries.push_back({name, a});
        std::vector<std::tuple<std::string, std::int64_t, double>> out;
        for (const auto& row : celestial::assign_quantum_numbers({gm, v0}, celestial::OrbitTable(entries)))
          out.emplace_back(row.name, row.n, row.residual);
        return out;
      },
      py::arg("orbits"), py::arg("gm") = celestial::GravitySystem::solar().gm,
      py::arg("v0") = celestial::GravitySystem::solar().v0);

  m.def("count_unmatter", [](std::int64_t n) { return to_py(unmatter::count_unmatter_combinations(n)); },
        py::arg("n"));
  m.def("axiom_denial_count", [](std::int64_t n) { return to_py(unmatter::axiom_denial_count(n)); },
        py::arg("axioms"));
  m.def(
      "classify",
      [](const std::string& combo) {
        return std::string(unmatter::to_string(unmatter::classify(unmatter::ParticleCombo::parse(combo))));
      },
      py::arg("combo"));

  m.def("pseudo_smarandache", [](const py::int_& n) { return to_py(numtheory::pseudo_smarandache(to_big(n))); },
        py::arg("n"));
  m.def(
      "factorize",
      [](const py::int_& n) {
        py::dict out;
        for (const auto& [p, e] : numtheory::factorize(to_big(n))) out[to_py(p)] = e;
        return out;
      },
      py::arg("n"));
  m.def(
      "cubic_search",
      [](const py::int_& a, const py::int_& b, const py::int_& c, const py::int_& d, std::int64_t bound) {
        std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
        for (const auto& s : numtheory::cubic_search(to_big(a), to_big(b), to_big(c), to_big(d), bound))
          out.emplace_back(s.x, s.y, s.z);
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("bound"));

  m.def(
      "plate_torque", [](double power, double omega) { return beth::plate_torque(power, {omega}); },
      py::arg("power"), py::arg("omega"));
  m.def(
      "angular_momentum_per_energy",
      [](double amplitude, double core, double skin, double omega) {
        return beth::angular_momentum_per_energy({amplitude, core, skin}, {omega}, 1.0);
      },
      py::arg("amplitude"), py::arg("core_radius"), py::arg("skin"), py::arg("omega"));

  m.def(
      "bell_lhs",
      [](const std::function<double(double)>& corr, double phi, double delta) {
        const auto v = bell_info::bell_lhs(corr, phi, delta);
        return std::make_pair(v.lhs, v.satisfied);
      },
      py::arg("correlation"), py::arg("phi"), py::arg("delta"));
  m.def("entropy", &bell_info::entropy, py::arg("p"));
  m.def(
      "holevo_pure",
      [](const std::vector<std::tuple<double, std::complex<double>, std::complex<double>>>& ensemble) {
        std::vector<std::pair<double, bell_info::QubitDensity>> ens;
        for (const auto& [p, alpha, beta] : ensemble) ens.emplace_back(p, bell_info::QubitDensity::pure(alpha, beta));
        return bell_info::holevo_quantity(ens);
      },
      py::arg("ensemble"));
  m.def(
      "simulate_lhv",
      [](double phi, double delta, std::int64_t samples, std::uint64_t seed) {
        const auto e = bell_info::simulate_lhv(phi, delta, samples, seed);
        py::dict d;
        d["lhs"] = e.lhs;
        d["sigma"] = e.sigma;
        d["c_phi"] = e.c_phi;
        d["c_delta"] = e.c_delta;
        d["c_diff"] = e.c_diff;
        d["samples"] = e.samples;
        return d;
      },
      py::arg("phi"), py::arg("delta"), py::arg("samples") = 100000, py::arg("seed") = 42);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"labyrinth"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
