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


// dirikit command-line front end.
//
//   dirikit eval      --function F --measure M --n N
//   dirikit decompose --function F --angle A --n N
//   dirikit gram      --tuple T --degree N
//   dirikit defects   --function F --tuple T --max-order P
//   dirikit verify    <suite|all> [--trials --seed --n --tol --quad --workers]
//
// F, M and T are JSON text or paths to JSON files. Output goes to stdout or
// to --out. Exit status: 0 success, 1 failed suite or computation error,
// 2 malformed input.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dirikit/dirichlet.hpp"
#include "dirikit/json_io.hpp"
#include "dirikit/operator_lab.hpp"
#include "dirikit/verification.hpp"

namespace {

using dirikit::io::InputError;
using dirikit::io::Json;

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << text;
}

dirikit::QuadratureSpec quadrature_from(const std::string& flag) {
  try {
    if (!flag.empty()) return dirikit::QuadratureSpec::parse(flag);
    return dirikit::QuadratureSpec::from_environment();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

struct Common {
  std::string out;
  std::string quad;
};

int run_eval(const std::string& function, const std::string& measure, int n,
             bool force, const Common& c) {
  const auto f = dirikit::io::function_from_json(
      dirikit::io::load_json_argument(function));
  const auto mu = dirikit::io::measure_from_json(
      dirikit::io::load_json_argument(measure));
  if (n < 0) throw InputError("--n must be >= 0");
  dirikit::DirichletResult r;
  if (n == 0) {
    // Order 0: boundary values at the atoms plus c |f|^2_{H^2}.
    const dirikit::CircleMeasure atoms(
        std::vector<dirikit::Atom>(mu.atoms().begin(), mu.atoms().end()), 0.0);
    r = dirikit::dirichlet_order_zero_atomic(f, atoms);
    if (mu.lebesgue_mass() > 0.0) {
      const auto s = dirikit::dirichlet_sigma(f, 0);
      r.value += mu.lebesgue_mass() * s.value;
      r.error_estimate += mu.lebesgue_mass() * s.error_estimate;
      if (mu.atoms().empty()) r.method = dirikit::Method::kSeries;
    }
  } else {
    dirikit::DirichletOptions options;
    options.quadrature = quadrature_from(c.quad);
    options.force_quadrature = force;
    r = dirikit::dirichlet_weighted(f, mu, n, options);
  }
  emit(c.out, dirikit::io::dump(dirikit::io::to_json(r)));
  return 0;
}

int run_decompose(const std::string& function, double angle, int n,
                  const Common& c) {
  const auto f = dirikit::io::function_from_json(
      dirikit::io::load_json_argument(function));
  if (n < 1) throw InputError("--n must be >= 1");
  const auto cert = dirikit::douglas_decompose(f, std::polar(1.0, angle), n,
                                               quadrature_from(c.quad));
  emit(c.out, dirikit::io::dump(dirikit::io::to_json(cert, n)));
  return 0;
}

int run_gram(const std::string& tuple, int degree, const Common& c) {
  const auto t = dirikit::io::tuple_from_json(dirikit::io::load_json_argument(tuple));
  if (degree < 1) throw InputError("--degree must be >= 1");
  emit(c.out, dirikit::io::gram_to_csv(dirikit::gram_section(t, degree)));
  return 0;
}

int run_defects(const std::string& function, const std::string& tuple,
                int max_order, const Common& c) {
  const auto f = dirikit::io::function_from_json(
      dirikit::io::load_json_argument(function));
  const auto t = dirikit::io::tuple_from_json(dirikit::io::load_json_argument(tuple));
  if (max_order < 1) throw InputError("--max-order must be >= 1");
  emit(c.out, dirikit::io::dump(
                  dirikit::io::to_json(dirikit::defect_sequence(f, t, max_order))));
  return 0;
}

int run_verify(const std::string& suite, const dirikit::VerifyOptions& base,
               const Common& c) {
  std::vector<std::string_view> names;
  if (suite == "all") {
    for (auto s : dirikit::suite_names()) names.push_back(s);
  } else {
    bool known = false;
    for (auto s : dirikit::suite_names()) known = known || s == suite;
    if (!known) throw InputError("unknown suite '" + suite + "'");
    names.push_back(suite);
  }
  dirikit::VerifyOptions options = base;
  options.quadrature = quadrature_from(c.quad);

  std::vector<dirikit::VerificationReport> reports;
  bool passed = true;
  for (auto name : names) {
    const auto start = std::chrono::steady_clock::now();
    reports.push_back(dirikit::run_suite(name, options));
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const auto& r = reports.back();
    passed = passed && r.passed();
    std::fprintf(stderr, "%-11s %s  checks=%lld failures=%zu max_residual=%.3g  %.2fs\n",
                 r.suite.c_str(), r.passed() ? "PASS" : "FAIL", r.checks,
                 r.failures.size(), r.max_residual, seconds);
  }

  std::string text;
  if (ends_with(c.out, ".csv")) {
    text = dirikit::reports_to_csv(reports);
  } else if (suite == "all") {
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(dirikit::to_json(r));
    text = dirikit::io::dump(
        Json{{"seed", options.seed}, {"passed", passed}, {"suites", std::move(all)}});
  } else {
    text = dirikit::io::dump(dirikit::to_json(reports.front()));
  }
  emit(c.out, text);
  return passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Dirichlet-type integrals on the unit disc"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub, bool quad) {
    sub->add_option("--out", common.out, "Write the report to this path");
    if (quad) {
      sub->add_option("--quad", common.quad,
                      "Quadrature as radial,angular,clip,levels");
    }
  };

  std::string function, measure, tuple;
  int n = 1;
  bool force = false;
  auto* eval = app.add_subcommand("eval", "D_{mu,n}(f) as result JSON");
  eval->add_option("--function", function, "Function JSON")->required();
  eval->add_option("--measure", measure, "Measure JSON")->required();
  eval->add_option("--n", n, "Order")->required();
  eval->add_flag("--force-quadrature", force, "Use quadrature for every part");
  add_common(eval, true);

  double angle = 0.0;
  auto* decompose = app.add_subcommand("decompose", "Douglas certificate JSON");
  decompose->add_option("--function", function, "Function JSON")->required();
  decompose->add_option("--angle", angle, "Angle of lambda")->required();
  decompose->add_option("--n", n, "Order")->required();
  add_common(decompose, true);

  int degree = 0;
  auto* gram = app.add_subcommand("gram", "Gram section CSV");
  gram->add_option("--tuple", tuple, "Measure tuple JSON")->required();
  gram->add_option("--degree", degree, "Section degree N")->required();
  add_common(gram, false);

  int max_order = 0;
  auto* defects = app.add_subcommand("defects", "Defect sequence JSON");
  defects->add_option("--function", function, "Function JSON")->required();
  defects->add_option("--tuple", tuple, "Measure tuple JSON")->required();
  defects->add_option("--max-order", max_order, "Highest difference order")
      ->required();
  add_common(defects, false);

  std::string suite;
  std::optional<int> trials, order;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  int workers = 1;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--trials", trials, "Trials per suite");
  verify->add_option("--seed", seed, "64-bit seed");
  verify->add_option("--n", order, "Fix the order n");
  verify->add_option("--tol", tol, "Override the primary tolerance");
  verify->add_option("--workers", workers, "Concurrent trials")
      ->check(CLI::PositiveNumber);
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*eval) return run_eval(function, measure, n, force, common);
    if (*decompose) return run_decompose(function, angle, n, common);
    if (*gram) return run_gram(tuple, degree, common);
    if (*defects) return run_defects(function, tuple, max_order, common);
    dirikit::VerifyOptions options;
    options.trials = trials;
    options.seed = seed;
    options.order = order;
    options.tolerance = tol;
    options.workers = workers;
    return run_verify(suite, options, common);
  } catch (const InputError& e) {
    std::fprintf(stderr, "dirikit: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "dirikit: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "dirikit: %s\n", e.what());
    return kExitFailure;
  }
}
