// Copyright 2026 The dirikit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dirikit/analytic_function.hpp"
#include "dirikit/circle_measure.hpp"
#include "dirikit/dirichlet.hpp"
#include "dirikit/disc_quadrature.hpp"
#include "dirikit/operator_lab.hpp"
#include "dirikit/verification.hpp"

namespace py = pybind11;

namespace dirikit {
namespace {

std::vector<Complex> to_vector(const AnalyticFunction& f) {
  return {f.coeffs().begin(), f.coeffs().end()};
}

MeasureTuple make_tuple(const std::vector<CircleMeasure>& entries) {
  return MeasureTuple(entries);
}

std::string verify(const std::string& suite, std::optional<int> trials, std::uint64_t seed,
                   std::optional<int> n, std::optional<double> tol,
                   std::optional<QuadratureSpec> quadrature, int workers) {
  VerifyOptions o;
  o.trials = trials;
  o.seed = seed;
  o.order = n;
  o.tolerance = tol;
  o.quadrature = quadrature.value_or(QuadratureSpec::from_environment());
  o.workers = workers;
  VerificationReport report;
  {
    py::gil_scoped_release release;
    report = run_suite(suite, o);
  }
  return to_json(report).dump();
}

}  // namespace
}  // namespace dirikit

PYBIND11_MODULE(_dirikit, m) {
  using namespace dirikit;
  m.doc() = "Weighted Dirichlet-type integrals on the unit disc.";

  py::register_exception<NotInSpace>(m, "NotInSpace", PyExc_ValueError);
  py::register_exception<SingularIntegrand>(m, "SingularIntegrand", PyExc_ArithmeticError);

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def(py::init([](int radial, int angular, double clip, int levels) {
             QuadratureSpec s{radial, angular, clip, levels};
             s.validate();
             return s;
           }),
           py::arg("radial"), py::arg("angular"), py::arg("clip"), py::arg("levels"))
      .def_readwrite("radial", &QuadratureSpec::radial)
      .def_readwrite("angular", &QuadratureSpec::angular)
      .def_readwrite("clip", &QuadratureSpec::clip)
      .def_readwrite("levels", &QuadratureSpec::levels)
      .def_static("parse", &QuadratureSpec::parse)
      .def_static("from_environment", &QuadratureSpec::from_environment)
      .def("__str__", &QuadratureSpec::to_string)
      .def("__repr__",
           [](const QuadratureSpec& s) { return "QuadratureSpec('" + s.to_string() + "')"; });

  py::class_<AnalyticFunction>(m, "AnalyticFunction")
      .def(py::init<std::vector<Complex>, bool>(), py::arg("coeffs"), py::arg("exact") = true)
      .def_static("monomial", &AnalyticFunction::monomial, py::arg("k"), py::arg("c") = 1.0)
      .def_property_readonly("coeffs", &to_vector)
      .def_property_readonly("degree", &AnalyticFunction::degree)
      .def_property_readonly("exact", &AnalyticFunction::exact)
      .def("__call__", &AnalyticFunction::operator(), py::arg("z"))
      .def("__repr__", [](const AnalyticFunction& f) {
        return "AnalyticFunction(degree=" + std::to_string(f.degree()) +
               (f.exact() ? ", exact)" : ", truncated)");
      });

  py::class_<Atom>(m, "Atom")
      .def_readonly("angle", &Atom::angle)
      .def_readonly("mass", &Atom::mass)
      .def_property_readonly("point", &Atom::point);

  py::class_<CircleMeasure>(m, "CircleMeasure")
      .def(py::init([](const std::vector<std::pair<double, double>>& atoms, double lebesgue) {
             std::vector<Atom> a;
             for (const auto& [angle, mass] : atoms) a.push_back(Atom{angle, mass});
             return CircleMeasure(std::move(a), lebesgue);
           }),
           py::arg("atoms") = std::vector<std::pair<double, double>>{},
           py::arg("lebesgue") = 0.0)
      .def_static("lebesgue", &CircleMeasure::lebesgue, py::arg("c") = 1.0)
      .def_static("dirac", &CircleMeasure::dirac, py::arg("angle"), py::arg("mass") = 1.0)
      .def_static("dirac_at", &CircleMeasure::dirac_at, py::arg("point"), py::arg("mass") = 1.0)
      .def_property_readonly("atoms", [](const CircleMeasure& mu) {
        return std::vector<Atom>(mu.atoms().begin(), mu.atoms().end());
      })
      .def_property_readonly("lebesgue_mass", &CircleMeasure::lebesgue_mass)
      .def_property_readonly("total_mass", &CircleMeasure::total_mass)
      .def(py::self + py::self);

  py::class_<DirichletResult>(m, "DirichletResult")
      .def_readonly("value", &DirichletResult::value)
      .def_property_readonly("method",
                             [](const DirichletResult& r) { return to_string(r.method); })
      .def_readonly("error_estimate", &DirichletResult::error_estimate)
      .def_readonly("order", &DirichletResult::order);

  py::class_<DouglasCertificate>(m, "DouglasCertificate")
      .def_readonly("alpha", &DouglasCertificate::alpha)
      .def_readonly("g", &DouglasCertificate::g)
      .def_readonly("lhs", &DouglasCertificate::lhs)
      .def_readonly("lhs_error", &DouglasCertificate::lhs_error)
      .def_readonly("rhs", &DouglasCertificate::rhs)
      .def_readonly("residual", &DouglasCertificate::residual)
      .def_readonly("reconstruction_residual", &DouglasCertificate::reconstruction_residual);

  py::class_<AtomicDecomposition>(m, "AtomicDecomposition")
      .def_readonly("p", &AtomicDecomposition::p)
      .def_readonly("g", &AtomicDecomposition::g)
      .def_readonly("residual", &AtomicDecomposition::residual);

  py::class_<DefectSequence>(m, "DefectSequence")
      .def_readonly("beta", &DefectSequence::beta)
      .def_readonly("differences", &DefectSequence::differences)
      .def("leading", &DefectSequence::leading, py::arg("p"));

  m.def(
      "dirichlet",
      [](const AnalyticFunction& f, const CircleMeasure& mu, int n, bool force_quadrature,
         std::optional<QuadratureSpec> quadrature, int workers) {
        DirichletOptions o;
        o.force_quadrature = force_quadrature;
        o.quadrature = quadrature.value_or(QuadratureSpec::from_environment());
        o.workers = workers;
        py::gil_scoped_release release;
        return dirichlet_weighted(f, mu, n, o);
      },
      py::arg("f"), py::arg("mu"), py::arg("n"), py::arg("force_quadrature") = false,
      py::arg("quadrature") = py::none(), py::arg("workers") = 1);
  m.def("dirichlet_sigma", &dirichlet_sigma, py::arg("f"), py::arg("n"));
  m.def("local_dirichlet", &local_dirichlet, py::arg("f"), py::arg("point"), py::arg("n"));
  m.def(
      "douglas_decompose",
      [](const AnalyticFunction& f, Complex lambda, int n,
         std::optional<QuadratureSpec> quadrature, int workers) {
        const QuadratureSpec spec = quadrature.value_or(QuadratureSpec::from_environment());
        py::gil_scoped_release release;
        return douglas_decompose(f, lambda, n, spec, workers);
      },
      py::arg("f"), py::arg("point"), py::arg("n"), py::arg("quadrature") = py::none(),
      py::arg("workers") = 1);
  m.def("atomic_decompose",
        [](const AnalyticFunction& f, const std::vector<Complex>& atoms, int n) {
          return atomic_decompose(f, atoms, n);
        },
        py::arg("f"), py::arg("atoms"), py::arg("n"));
  m.def("t_map", &t_map, py::arg("f"), py::arg("point"), py::arg("n"));
  m.def("szego_dirichlet_norm", &szego_dirichlet_norm, py::arg("w"), py::arg("mu"),
        py::arg("n"));
  m.def("dilation_factor", &dilation_factor, py::arg("r"), py::arg("n"));
  m.def("kernel_bergman_nu", &kernel_bergman_nu, py::arg("z"), py::arg("w"),
        py::arg("point"), py::arg("n"));
  m.def("multiplier_seminorm_estimate", &multiplier_seminorm_estimate, py::arg("phi"),
        py::arg("j"), py::arg("section_degree"));
  m.def("multiplier_seminorm_upper_bound", &multiplier_seminorm_upper_bound, py::arg("phi"),
        py::arg("j"), py::arg("section_degree"));

  m.def(
      "integrate_disc",
      [](const std::function<Complex(Complex)>& integrand,
         std::optional<QuadratureSpec> quadrature) {
        const QuadratureResult r =
            integrate_disc(integrand, quadrature.value_or(QuadratureSpec{}), 1);
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("integrand"), py::arg("quadrature") = py::none(),
      "Returns (value, error_estimate) for the normalized area measure.");

  m.def(
      "gram_section",
      [](const std::vector<CircleMeasure>& tuple, int degree) {
        return gram_section(make_tuple(tuple), degree).matrix;
      },
      py::arg("tuple"), py::arg("degree"));
  m.def(
      "tuple_norm_sq",
      [](const AnalyticFunction& f, const std::vector<CircleMeasure>& tuple) {
        return tuple_norm_sq(f, make_tuple(tuple));
      },
      py::arg("f"), py::arg("tuple"));
  m.def(
      "defect_sequence",
      [](const AnalyticFunction& f, const std::vector<CircleMeasure>& tuple, int max_order) {
        return defect_sequence(f, make_tuple(tuple), max_order);
      },
      py::arg("f"), py::arg("tuple"), py::arg("max_order"));

  m.def("suite_names", [] {
    std::vector<std::string> names;
    for (std::string_view s : suite_names()) names.emplace_back(s);
    return names;
  });
  m.def("_verify_json", &verify, py::arg("suite"), py::arg("trials") = py::none(),
        py::arg("seed") = 0, py::arg("n") = py::none(), py::arg("tol") = py::none(),
        py::arg("quadrature") = py::none(), py::arg("workers") = 1);
}
