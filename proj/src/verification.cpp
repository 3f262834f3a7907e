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


#include "dirikit/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <exception>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dirikit/combinatorics.hpp"
#include "dirikit/dirichlet.hpp"
#include "dirikit/operator_lab.hpp"
#include "dirikit/random.hpp"

namespace dirikit {
namespace {

using io::Json;
using io::to_json;

struct Check {
  Json input;
  double observed = 0.0;
  double bound = 0.0;
  double gap = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct TrialOutcome {
  std::vector<Check> checks;
  std::map<std::string, long long> counters;
};

// |observed - expected| / scale <= tol.
Check equality(Json input, double observed, double expected, double scale,
               double tol) {
  const double gap = std::fabs(observed - expected);
  return {std::move(input), observed, expected, gap, gap / scale, tol};
}

// lhs <= rhs up to a relative slack tol.
Check upper(Json input, double lhs, double rhs, double tol) {
  const double gap = lhs - rhs;
  const double residual =
      gap <= 0.0 ? 0.0 : gap / std::max(std::fabs(rhs), DBL_MIN);
  return {std::move(input), lhs, rhs, gap, residual, tol};
}

// value >= -tol.
Check nonnegative(Json input, double value, double tol) {
  return {std::move(input), value, 0.0, -value, std::max(0.0, -value), tol};
}

Check holds(Json input, bool ok) {
  const double v = ok ? 1.0 : 0.0;
  return {std::move(input), v, 1.0, 1.0 - v, 1.0 - v, 0.0};
}

double tol_or(const VerifyOptions& o, double fallback) {
  return o.tolerance.value_or(fallback);
}

int order_or(const VerifyOptions& o, TrialRng& rng, int lo, int hi) {
  return o.order ? *o.order : rng.integer(lo, hi);
}

Json z_json(Complex z) { return to_json(z); }

// D(lambda, n) tests ---------------------------------------------------------

TrialOutcome douglas_trial(int, TrialRng& rng, const VerifyOptions& o) {
  const int n = order_or(o, rng, 1, 4);
  const AnalyticFunction f = random_polynomial(rng);
  const Complex lambda = rng.unimodular();
  const DouglasCertificate c = douglas_decompose(f, lambda, n, o.quadrature);
  const Json in{{"f", to_json(f)}, {"lambda", z_json(lambda)}, {"n", n}};
  TrialOutcome out;
  out.checks.push_back(equality(in, c.lhs, c.rhs, std::max(c.rhs, 1.0),
                                tol_or(o, n == 1 ? 1e-3 : 1e-6)));
  const double scale = std::max(1.0, max_abs_coeff(f));
  out.checks.push_back(equality(in, c.reconstruction_residual / scale, 0.0, 1.0,
                                1e-12));
  return out;
}

TrialOutcome monomial_trial(int, TrialRng& rng, const VerifyOptions& o) {
  const Complex lambda = rng.unimodular();
  const CircleMeasure mu = CircleMeasure::dirac_at(lambda);
  const double tol = tol_or(o, 1e-12);
  TrialOutcome out;
  const int lo = o.order.value_or(1);
  const int hi = o.order.value_or(4);
  for (int n = lo; n <= hi; ++n) {
    for (int k = 0; k <= 15; ++k) {
      const AnalyticFunction f = AnalyticFunction::monomial(k);
      const Json in{{"k", k}, {"lambda", z_json(lambda)}, {"n", n}};
      const double expected = binomial(k, n);
      out.checks.push_back(
          equality(in, dirichlet_weighted(f, mu, n).value, expected, 1.0, tol));
      out.checks.push_back(
          equality(in, dirichlet_sigma(f, n).value, expected, 1.0, tol));
    }
  }
  return out;
}

TrialOutcome tmap_trial(int, TrialRng& rng, const VerifyOptions& o) {
  const int n = order_or(o, rng, 1, 4);
  const AnalyticFunction f = random_polynomial(rng, n - 1, 12, n - 1);
  const Complex lambda = rng.unimodular();
  const double lhs =
      bergman_nu_norm_sq(t_map(f, lambda, n), lambda, n, o.quadrature).value.real();
  const double rhs = dirichlet_sigma(f, n - 1).value;
  TrialOutcome out;
  out.checks.push_back(equality(
      Json{{"f", to_json(f)}, {"lambda", z_json(lambda)}, {"n", n}}, lhs, rhs,
      std::max(rhs, DBL_MIN), tol_or(o, 1e-6)));
  return out;
}

// 200-term expansion of the A^2(nu_{lambda,n}) kernel in powers of z conj w.
Complex bergman_kernel_series(Complex z, Complex w, Complex lambda, int n) {
  const Complex x = z * std::conj(w);
  Complex sum = 0.0;
  Complex power = 1.0;
  for (int k = 0; k < 200; ++k) {
    sum += binomial(n + k + 1, k) * power;
    power *= x;
  }
  return factorial(n) * factorial(n - 1) * (n + 1) * (z - lambda) *
         (std::conj(w) - std::conj(lambda)) * sum;
}

TrialOutcome kernel_trial(int, TrialRng& rng, const VerifyOptions& o) {
  static const Complex kGrid[5] = {{0.0, 0.0},
                                   {0.7, 0.0},
                                   {0.0, 0.6},
                                   {-0.35, 0.35},
                                   {-0.5, -0.45}};
  const double tol = tol_or(o, 1e-10);
  const Complex lambda = rng.unimodular();
  TrialOutcome out;
  const int lo = o.order.value_or(1);
  const int hi = o.order.value_or(3);
  for (int n = lo; n <= hi; ++n) {
    for (const Complex& z : kGrid) {
      for (const Complex& w : kGrid) {
        const Complex a = kernel_bergman_nu(z, w, lambda, n);
        const Complex b = bergman_kernel_series(z, w, lambda, n);
        const Json in{{"z", z_json(z)}, {"w", z_json(w)},
                      {"lambda", z_json(lambda)}, {"n", n}};
        out.checks.push_back(equality(in, std::abs(a - b), 0.0, 1.0, tol));
      }
    }
  }
  // Closed forms of the sigma kernels for j = 0, 1.
  for (const Complex& z : kGrid) {
    for (const Complex& w : kGrid) {
      const Complex x = z * std::conj(w);
      const Complex k0 = kernel_sigma(z, w, 0, 200).value;
      const Complex k1 = kernel_sigma(z, w, 1, 200).value;
      const Json in{{"z", z_json(z)}, {"w", z_json(w)}};
      out.checks.push_back(equality(in, std::abs(k0 - 1.0 / (1.0 - x)), 0.0, 1.0, tol));
      out.checks.push_back(equality(in, std::abs(k1 + std::log(1.0 - x)), 0.0, 1.0, tol));
    }
  }
  // Reproducing property of the truncated sigma kernel.
  const int j = o.order ? *o.order - 1 : rng.integer(0, 3);
  const AnalyticFunction f = random_polynomial(rng, 0, 20);
  const int cut = rng.integer(j, 20);
  const Complex w = 0.7 * std::sqrt(rng.uniform()) * rng.unimodular();
  std::vector<Complex> kc(static_cast<std::size_t>(cut) + 1, 0.0);
  for (int k = j; k <= cut; ++k) kc[k] = std::pow(std::conj(w), k) / binomial(k, j);
  const AnalyticFunction kernel(std::move(kc), true);
  Complex expected = 0.0;
  for (int k = cut; k >= j; --k) expected = expected * w + f.coeff(k);
  expected *= std::pow(w, j);
  const Complex got = sigma_inner_product(f, kernel, j);
  out.checks.push_back(equality(
      Json{{"f", to_json(f)}, {"w", z_json(w)}, {"j", j}, {"N", cut}},
      std::abs(got - expected), 0.0, 1.0, tol));
  return out;
}

TrialOutcome dilation_trial(int trial, TrialRng& rng, const VerifyOptions& o) {
  const double tol = tol_or(o, 1e-9);
  TrialOutcome out;
  if (trial == 0) {
    for (int n = 1; n <= 6; ++n) {
      for (int i = 0; i < 1000; ++i) {
        const double r = i / 1000.0;
        out.checks.push_back(
            upper(Json{{"r", r}, {"n", n}}, dilation_factor(r, n), 1.0, tol));
      }
    }
  }
  const int n = order_or(o, rng, 2, 3);
  const double r = rng.integer(1, 9) / 10.0;
  CircleMeasure mu = random_measure(rng);
  if (mu.is_zero()) mu = CircleMeasure::lebesgue(1.0);
  const AnalyticFunction f = random_polynomial(rng);
  const double lhs = dirichlet_weighted(dilate(f, r), mu, n).value;
  const double rhs = dilation_factor(r, n) * dirichlet_weighted(f, mu, n).value;
  out.checks.push_back(upper(Json{{"f", to_json(f)}, {"mu", to_json(mu)},
                                  {"n", n}, {"r", r}},
                             lhs, rhs, tol));
  return out;
}

TrialOutcome shiftineq_trial(int, TrialRng& rng, const VerifyOptions& o) {
  const int j = o.order ? *o.order - 1 : rng.integer(0, 3);
  const AnalyticFunction f = random_polynomial(rng, j, 12, j);
  const Complex lambda = rng.unimodular();
  const double lhs = std::sqrt(dirichlet_sigma(times_linear(f, lambda), j).value);
  TrialOutcome out;
  for (int i = 0; i < 10; ++i) {
    const double r = i / 10.0;
    const double rhs =
        2.0 / (1.0 + r) *
        std::sqrt(dirichlet_sigma(times_linear(f, r * lambda), j).value);
    out.checks.push_back(upper(Json{{"f", to_json(f)}, {"lambda", z_json(lambda)},
                                    {"j", j}, {"r", r}},
                               lhs, rhs, tol_or(o, 1e-9)));
  }
  return out;
}

TrialOutcome multiplier_trial(int, TrialRng& rng, const VerifyOptions& o) {
  const int n = order_or(o, rng, 1, 4);
  const int j = n - 1;
  const AnalyticFunction phi = random_polynomial(rng);
  // D_{lambda,n}(f) > 0 needs deg f >= n.
  const AnalyticFunction f = random_polynomial(rng, n, std::max(n, 12));
  const Complex lambda = rng.unimodular();
  const int section = phi.degree() + f.degree() + j + 1;
  const double s_lower = multiplier_seminorm_estimate(phi, j, section);
  const double s_upper = multiplier_seminorm_upper_bound(phi, j, 2 * section);
  const double d_phi_f = local_dirichlet(multiply(phi, f), lambda, n);
  const double d_f = local_dirichlet(f, lambda, n);
  const double d_phi = local_dirichlet(phi, lambda, n);
  const double boundary = std::norm(evaluate(f, lambda));
  const Json in{{"phi", to_json(phi)},     {"f", to_json(f)},
                {"lambda", z_json(lambda)}, {"n", n},
                {"seminorm_lower", s_lower}, {"seminorm_upper", s_upper}};
  const double tol = tol_or(o, 1e-9);
  TrialOutcome out;
  out.checks.push_back(
      upper(in, d_phi_f, 2.0 * s_upper * s_upper * d_f + 2.0 * boundary * d_phi, tol));
  out.checks.push_back(
      upper(in, boundary * d_phi, 2.0 * s_upper * s_upper * d_f + 2.0 * d_phi_f, tol));
  return out;
}

TrialOutcome atomic_trial(int, TrialRng& rng, const VerifyOptions& o) {
  const int count = rng.integer(1, 4);
  std::vector<Complex> atoms;
  for (double a : random_distinct_angles(rng, count)) atoms.push_back(std::polar(1.0, a));
  const AnalyticFunction f = random_polynomial(rng);
  const int n = order_or(o, rng, 1, 4);
  const AtomicDecomposition d = atomic_decompose(f, atoms, n);
  Json atoms_json = Json::array();
  for (const Complex& a : atoms) atoms_json.push_back(z_json(a));
  const Json in{{"f", to_json(f)}, {"atoms", atoms_json}, {"n", n}};
  const double scale = std::max({1.0, max_abs_coeff(f), max_abs_coeff(d.p),
                                 max_abs_coeff(d.g)});
  const double tol = tol_or(o, 1e-10);
  TrialOutcome out;
  out.checks.push_back(equality(in, d.residual / scale, 0.0, 1.0, tol));
  for (const Complex& a : atoms) {
    out.checks.push_back(equality(in, std::abs(evaluate(d.p, a) - evaluate(f, a)) / scale,
                                  0.0, 1.0, tol));
  }
  out.checks.push_back(holds(in, d.p.degree() <= count - 1));
  return out;
}

// Szego kernel 1/(1 - z conj w) cut at degree 60.
AnalyticFunction szego_truncation(Complex w) {
  std::vector<Complex> c(61);
  Complex p = 1.0;
  for (auto& x : c) {
    x = p;
    p *= std::conj(w);
  }
  return AnalyticFunction(std::move(c), false);
}

double szego_sigma_series(Complex w, int n) {
  const double x = std::norm(w);
  double sum = 0.0;
  for (int k = n; k < 4000; ++k) {
    const double term = binomial(k, n) * std::pow(x, k);
    sum += term;
    if (term < 1e-300 || (k > n + 10 && term < 1e-20 * sum)) break;
  }
  return sum;
}

void szego_case(const CircleMeasure& mu, int n, Complex w,
                const VerifyOptions& o, TrialOutcome& out) {
  const double closed = szego_dirichlet_norm(w, mu, n);
  const double quad =
      dirichlet_quadrature(szego_truncation(w), mu, n, o.quadrature).value;
  const Json in{{"mu", to_json(mu)}, {"n", n}, {"w", z_json(w)}};
  out.checks.push_back(
      equality(in, quad, closed, std::max(closed, DBL_MIN), tol_or(o, 1e-4)));
  if (mu.atoms().empty()) {
    const double series = mu.lebesgue_mass() * szego_sigma_series(w, n);
    out.checks.push_back(
        equality(in, series, closed, std::max(closed, DBL_MIN), 1e-10));
  }
}

TrialOutcome szego_trial(int trial, TrialRng& rng, const VerifyOptions& o) {
  TrialOutcome out;
  if (trial == 0) {
    const double half_pi = std::acos(0.0);
    const CircleMeasure measures[4] = {
        CircleMeasure::dirac(0.0),
        CircleMeasure::lebesgue(1.0),
        CircleMeasure({{0.0, 1.0}, {half_pi, 2.0}}, 0.0),
        CircleMeasure({{0.0, 1.0}}, 1.0),
    };
    const Complex ws[3] = {{0.3, 0.0}, {0.0, 0.5}, {-0.6, 0.0}};
    const int lo = o.order.value_or(1);
    const int hi = o.order.value_or(3);
    for (const CircleMeasure& mu : measures) {
      for (int n = lo; n <= hi; ++n) {
        for (const Complex& w : ws) szego_case(mu, n, w, o, out);
      }
    }
    return out;
  }
  CircleMeasure mu = random_measure(rng);
  if (mu.is_zero()) mu = CircleMeasure::lebesgue(1.0);
  const Complex w = 0.7 * std::sqrt(rng.uniform()) * rng.unimodular();
  szego_case(mu, order_or(o, rng, 1, 3), w, o, out);
  return out;
}

// Operator lab ----------------------------------------------------------------

TrialOutcome isometry_trial(int, TrialRng& rng, const VerifyOptions& o) {
  const int m = o.order ? *o.order : rng.integer(1, 3);
  std::vector<CircleMeasure> entries;
  for (int i = 0; i < m; ++i) entries.push_back(random_measure(rng));
  const MeasureTuple tuple(entries);
  const AnalyticFunction f = random_polynomial(rng);
  const DefectSequence d = defect_sequence(f, tuple, m + 1);
  TrialOutcome out;
  out.checks.push_back(equality(Json{{"f", to_json(f)}, {"tuple", to_json(tuple)}},
                                d.leading(m + 1), 0.0, 1.0, tol_or(o, 1e-8)));
  return out;
}

TrialOutcome vsubspace_trial(int trial, TrialRng& rng, const VerifyOptions& o) {
  const CircleMeasure mu = random_measure(rng);
  const CircleMeasure tau = random_atomic_measure(rng, 1, 3);
  AnalyticFunction f = random_polynomial(rng, 0, 9);
  std::string kind = "random";
  if (trial % 3 == 0) {
    for (const Atom& a : tau.atoms()) f = times_linear(f, a.point());
    kind = "all_roots";
  } else if (trial % 3 == 1) {
    f = times_linear(f, tau.atoms()[0].point());
    kind = tau.atoms().size() == 1 ? "all_roots" : "some_roots";
  }
  const VMembership v = v_membership_check(f, mu, tau);
  const Json in{{"f", to_json(f)}, {"mu", to_json(mu)}, {"tau", to_json(tau)},
                {"case", kind}};
  const double tol = tol_or(o, kMembershipTolerance);
  TrialOutcome out;
  out.checks.push_back(holds(in, v.consistent));
  out.checks.push_back(nonnegative(in, v.defect2, tol));
  if (kind == "all_roots") {
    out.checks.push_back(equality(in, v.dtau0, 0.0, 1.0, tol));
    out.checks.push_back(equality(in, v.defect2, 0.0, 1.0, tol));
  }
  const double scale = std::max(1.0, v.dtau0);
  if (std::fabs(v.defect2 - v.dtau0) <= kMembershipTolerance * scale) {
    ++out.counters["defect2_equals_dtau0"];
  }
  ++out.counters["compared"];
  return out;
}

using TrialFn = TrialOutcome (*)(int, TrialRng&, const VerifyOptions&);

struct SuiteEntry {
  std::string_view name;
  TrialFn run;
  int trials;
};

constexpr SuiteEntry kSuites[] = {
    {"douglas", douglas_trial, 200},
    {"monomial", monomial_trial, 50},
    {"tmap", tmap_trial, 100},
    {"kernel", kernel_trial, 1},
    {"dilation", dilation_trial, 500},
    {"shiftineq", shiftineq_trial, 500},
    {"multiplier", multiplier_trial, 200},
    {"atomic", atomic_trial, 100},
    {"szego", szego_trial, 1},
    {"isometry", isometry_trial, 100},
    {"vsubspace", vsubspace_trial, 100},
};

const std::string_view kSuiteNames[] = {
    "douglas", "monomial",   "tmap",   "kernel", "dilation", "shiftineq",
    "multiplier", "atomic", "szego", "isometry", "vsubspace"};

const SuiteEntry& find_suite(std::string_view name) {
  for (const SuiteEntry& s : kSuites) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

TrialOutcome run_guarded(const SuiteEntry& suite, int trial,
                         const VerifyOptions& o) {
  TrialRng rng(o.seed, static_cast<std::uint64_t>(trial));
  try {
    return suite.run(trial, rng, o);
  } catch (const std::exception& e) {
    TrialOutcome out;
    Check c = holds(Json{{"error", e.what()}}, false);
    out.checks.push_back(std::move(c));
    return out;
  }
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuiteNames; }

int default_trials(std::string_view suite) { return find_suite(suite).trials; }

VerificationReport run_suite(std::string_view name,
                             const VerifyOptions& options) {
  const SuiteEntry& suite = find_suite(name);
  const int trials = options.trials.value_or(suite.trials);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (options.order && *options.order < 1) {
    throw std::invalid_argument("order must be >= 1");
  }
  options.quadrature.validate();

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  const int workers = std::clamp(options.workers, 1, trials);
  if (workers == 1) {
    for (int t = 0; t < trials; ++t) outcomes[t] = run_guarded(suite, t, options);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int t = next++; t < trials; t = next++) {
          outcomes[t] = run_guarded(suite, t, options);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.suite = std::string(name);
  report.trials = trials;
  report.seed = options.seed;
  std::map<std::string, long long> counters;
  for (int t = 0; t < trials; ++t) {
    for (Check& c : outcomes[t].checks) {
      ++report.checks;
      if (std::isfinite(c.residual)) {
        report.max_residual = std::max(report.max_residual, c.residual);
      }
      if (!(c.residual <= c.tolerance)) {
        report.failures.push_back(
            {t, std::move(c.input), c.observed, c.bound, c.gap});
      }
    }
    for (const auto& [key, count] : outcomes[t].counters) counters[key] += count;
  }
  for (const auto& [key, count] : counters) report.notes[key] = count;
  return report;
}

io::Json to_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const Failure& f : r.failures) {
    failures.push_back(Json{{"trial", f.trial},
                            {"input", f.input},
                            {"observed", f.observed},
                            {"bound", f.bound},
                            {"gap", f.gap}});
  }
  Json out{{"suite", r.suite},
           {"trials", r.trials},
           {"seed", r.seed},
           {"checks", r.checks},
           {"max_residual", r.max_residual},
           {"passed", r.passed()},
           {"failures", std::move(failures)}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

std::string reports_to_csv(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  out << "suite,trials,seed,checks,max_residual,failures,passed\n";
  for (const VerificationReport& r : reports) {
    char residual[40];
    std::snprintf(residual, sizeof(residual), "%.17g", r.max_residual);
    out << r.suite << ',' << r.trials << ',' << r.seed << ',' << r.checks << ','
        << residual << ',' << r.failures.size() << ','
        << (r.passed() ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace dirikit
