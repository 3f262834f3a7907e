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

#include "dirikit/dirichlet.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dirikit/combinatorics.hpp"

namespace dirikit {
namespace {

double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

void require_order(int n, int min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + ": order must be >= " +
                                std::to_string(min));
  }
}

void require_disc(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error(std::string(what) + ": need |z| < 1");
  }
}

// Normalized weighted integral of |h|^2 against weight(z) (1-|z|^2)^power.
template <typename Weight>
QuadratureResult weighted_square_integral(const AnalyticFunction& h,
                                          Weight weight, int power,
                                          double normalization,
                                          const QuadratureSpec& spec,
                                          int workers) {
  auto integrand = [&h, &weight, power, normalization](Complex z) -> Complex {
    const double defect = 1.0 - std::norm(z);
    return std::norm(evaluate(h, z)) * weight(z) * int_pow(defect, power) *
           normalization;
  };
  QuadratureResult q = integrate_disc(integrand, spec, workers);
  return q;
}

DirichletResult quadrature_part(const AnalyticFunction& f,
                                const CircleMeasure& mu, int n,
                                const QuadratureSpec& spec, int workers) {
  const AnalyticFunction d = derivative(f, n);
  const double norm = 1.0 / (factorial(n) * factorial(n - 1));
  const QuadratureResult q = weighted_square_integral(
      d, [&mu](Complex z) { return poisson_integral(mu, z); }, n - 1, norm,
      spec, workers);
  return {std::max(0.0, q.value.real()), Method::kQuadrature,
          q.error_estimate + std::fabs(q.value.imag()), n};
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::kSeries:
      return "series";
    case Method::kDecomposition:
      return "decomposition";
    case Method::kQuadrature:
      return "quadrature";
  }
  return "unknown";
}

DirichletResult dirichlet_sigma(const AnalyticFunction& f, int n) {
  require_order(n, 0, "dirichlet_sigma");
  double total = 0.0;
  double last = 0.0;
  for (int k = n; k <= f.degree(); ++k) {
    last = binomial(k, n) * std::norm(f.coeff(k));
    total += last;
  }
  return {total, Method::kSeries, f.exact() ? 0.0 : last, n};
}

Complex sigma_inner_product(const AnalyticFunction& f,
                            const AnalyticFunction& g, int j) {
  require_order(j, 0, "sigma_inner_product");
  const int top = std::min(f.degree(), g.degree());
  Complex s = 0.0;
  for (int k = j; k <= top; ++k) {
    s += binomial(k, j) * f.coeff(k) * std::conj(g.coeff(k));
  }
  return s;
}

double local_dirichlet(const AnalyticFunction& f, Complex lambda, int n) {
  require_order(n, 1, "local_dirichlet");
  if (!f.exact()) {
    throw std::invalid_argument(
        "local_dirichlet: the decomposition path needs an exact polynomial");
  }
  const RootDivision div = divide_by_root(f, lambda, evaluate(f, lambda));
  return dirichlet_sigma(div.quotient, n - 1).value;
}

DirichletResult dirichlet_quadrature(const AnalyticFunction& f,
                                     const CircleMeasure& mu, int n,
                                     const QuadratureSpec& spec, int workers) {
  require_order(n, 1, "dirichlet_quadrature");
  if (mu.is_zero()) return {0.0, Method::kQuadrature, 0.0, n};
  return quadrature_part(f, mu, n, spec, workers);
}

DirichletResult dirichlet_weighted(const AnalyticFunction& f,
                                   const CircleMeasure& mu, int n,
                                   const DirichletOptions& options) {
  if (n == 0) {
    throw std::invalid_argument(
        "dirichlet_weighted: order 0 is handled by "
        "dirichlet_order_zero_atomic");
  }
  require_order(n, 1, "dirichlet_weighted");
  if (options.force_quadrature) {
    return dirichlet_quadrature(f, mu, n, options.quadrature, options.workers);
  }
  DirichletResult result{0.0, Method::kSeries, 0.0, n};
  if (mu.lebesgue_mass() > 0.0) {
    const DirichletResult s = dirichlet_sigma(f, n);
    result.value += mu.lebesgue_mass() * s.value;
    result.error_estimate += mu.lebesgue_mass() * s.error_estimate;
  }
  if (mu.atoms().empty()) return result;
  if (f.exact()) {
    for (const Atom& a : mu.atoms()) {
      result.value += a.mass * local_dirichlet(f, a.point(), n);
    }
    result.method = Method::kDecomposition;
    return result;
  }
  const CircleMeasure atomic(
      std::vector<Atom>(mu.atoms().begin(), mu.atoms().end()), 0.0);
  const DirichletResult q =
      quadrature_part(f, atomic, n, options.quadrature, options.workers);
  result.value += q.value;
  result.error_estimate += q.error_estimate;
  result.method = Method::kQuadrature;
  return result;
}

DirichletResult dirichlet_order_zero_atomic(const AnalyticFunction& f,
                                            const CircleMeasure& mu) {
  if (!mu.is_atomic()) {
    throw std::invalid_argument(
        "dirichlet_order_zero_atomic: measure must be purely atomic");
  }
  DirichletResult result{0.0, Method::kDecomposition, 0.0, 0};
  for (const Atom& a : mu.atoms()) {
    const BoundaryValue bv = boundary_value(f, a.point());
    if (bv.status == BoundaryStatus::kDivergent) {
      throw NotInSpace("D_{mu,0} undefined for this f");
    }
    result.value += a.mass * std::norm(bv.value);
    result.error_estimate +=
        a.mass * bv.error_estimate * (2.0 * std::abs(bv.value) + bv.error_estimate);
  }
  return result;
}

QuadratureResult auxiliary_integral(const AnalyticFunction& f,
                                    const CircleMeasure& mu, int j, int n,
                                    const QuadratureSpec& spec, int workers) {
  require_order(n, 1, "auxiliary_integral");
  if (j < 0 || j > n) {
    throw std::invalid_argument("auxiliary_integral: need 0 <= j <= n");
  }
  return weighted_square_integral(
      derivative(f, j), [&mu](Complex z) { return poisson_integral(mu, z); },
      n - 1, 1.0, spec, workers);
}

DouglasCertificate douglas_decompose(const AnalyticFunction& f, Complex lambda,
                                     int n, const QuadratureSpec& spec,
                                     int workers) {
  require_order(n, 1, "douglas_decompose");
  const BoundaryValue bv = boundary_value(f, lambda);
  if (bv.status == BoundaryStatus::kDivergent) {
    throw NotInSpace("f is not in H_{lambda," + std::to_string(n) +
                     "} (no decomposition)");
  }
  DouglasCertificate cert;
  cert.alpha = bv.value;
  RootDivision div = divide_by_root(f, lambda, cert.alpha);
  cert.g = std::move(div.quotient);
  const DirichletResult lhs =
      dirichlet_quadrature(f, CircleMeasure::dirac_at(lambda), n, spec, workers);
  cert.lhs = lhs.value;
  cert.lhs_error = lhs.error_estimate;
  cert.rhs = dirichlet_sigma(cert.g, n - 1).value;
  cert.residual = std::fabs(cert.lhs - cert.rhs);
  const AnalyticFunction rebuilt =
      add(AnalyticFunction::constant(cert.alpha), times_linear(cert.g, lambda));
  cert.reconstruction_residual = max_coeff_distance(rebuilt, f);
  return cert;
}

AnalyticFunction t_map(const AnalyticFunction& f, Complex lambda, int n) {
  require_order(n, 1, "t_map");
  return derivative(times_linear(f, lambda), n);
}

QuadratureResult bergman_nu_norm_sq(const AnalyticFunction& h, Complex lambda,
                                    int n, const QuadratureSpec& spec,
                                    int workers) {
  require_order(n, 1, "bergman_nu_norm_sq");
  const double norm = 1.0 / (factorial(n) * factorial(n - 1));
  // P_{delta_lambda} (1-|z|^2)^(n-1) = (1-|z|^2)^n / |z - lambda|^2.
  return weighted_square_integral(
      h, [lambda](Complex z) { return 1.0 / std::norm(z - lambda); }, n, norm,
      spec, workers);
}

KernelSum kernel_sigma(Complex z, Complex w, int j, int terms) {
  require_disc(z, "kernel_sigma");
  require_disc(w, "kernel_sigma");
  require_order(j, 0, "kernel_sigma");
  if (terms < 1) throw std::invalid_argument("kernel_sigma: terms must be >= 1");
  const Complex x = z * std::conj(w);
  Complex power = std::pow(x, j);
  Complex sum = 0.0;
  for (int k = j; k < j + terms; ++k) {
    sum += power / binomial(k, j);
    power *= x;
  }
  const double ax = std::abs(x);
  return {sum, std::pow(ax, j + terms) / (1.0 - ax)};
}

Complex kernel_bergman_nu(Complex z, Complex w, Complex lambda, int n) {
  require_disc(z, "kernel_bergman_nu");
  require_disc(w, "kernel_bergman_nu");
  require_order(n, 1, "kernel_bergman_nu");
  const double c = factorial(n + 1) * factorial(n - 1);
  return c * (z - lambda) * (std::conj(w) - std::conj(lambda)) /
         std::pow(1.0 - z * std::conj(w), n + 2);
}

double szego_dirichlet_norm(Complex w, const CircleMeasure& mu, int n) {
  require_disc(w, "szego_dirichlet_norm");
  require_order(n, 1, "szego_dirichlet_norm");
  const double w2 = std::norm(w);
  return int_pow(w2, n) / int_pow(1.0 - w2, n) * v_mu(mu, w);
}

double dilation_factor(double r, int n) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("dilation_factor: r must lie in [0, 1)");
  }
  require_order(n, 1, "dilation_factor");
  return int_pow(4.0, n - 1) * (2.0 - r) * int_pow(r, 2 * n) /
         int_pow(1.0 + r, 2 * n - 2);
}

AnalyticFunction lagrange_interpolant(std::span<const Complex> nodes,
                                      std::span<const Complex> values) {
  if (nodes.empty() || nodes.size() != values.size()) {
    throw std::invalid_argument("lagrange_interpolant: size mismatch");
  }
  const std::size_t k = nodes.size();
  // Newton divided differences, in place.
  std::vector<Complex> c(values.begin(), values.end());
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      const Complex denom = nodes[i] - nodes[i - level];
      if (std::abs(denom) == 0.0) {
        throw std::invalid_argument("lagrange_interpolant: repeated node");
      }
      c[i] = (c[i] - c[i - 1]) / denom;
    }
  }
  AnalyticFunction p = AnalyticFunction::constant(c[k - 1]);
  for (std::size_t i = k - 1; i-- > 0;) {
    p = add(times_linear(p, nodes[i]), AnalyticFunction::constant(c[i]));
  }
  return p;
}

AtomicDecomposition atomic_decompose(const AnalyticFunction& f,
                                     std::span<const Complex> atoms, int n) {
  require_order(n, 1, "atomic_decompose");
  if (atoms.empty()) {
    throw std::invalid_argument("atomic_decompose: need at least one atom");
  }
  // Validates unimodularity and distinctness.
  std::vector<Atom> checked;
  for (const Complex& a : atoms) checked.push_back({unimodular_angle(a), 1.0});
  (void)CircleMeasure(checked, 0.0);

  std::vector<Complex> values;
  for (const Complex& a : atoms) {
    const BoundaryValue bv = boundary_value(f, a);
    if (bv.status == BoundaryStatus::kDivergent) {
      throw NotInSpace("f is not in H_{mu," + std::to_string(n) + "}");
    }
    values.push_back(bv.value);
  }
  AtomicDecomposition out;
  out.p = lagrange_interpolant(atoms, values);
  AnalyticFunction h = subtract(f, out.p).with_exact(f.exact());
  for (const Complex& a : atoms) h = divide_by_root(h, a, 0.0).quotient;
  out.g = h;

  AnalyticFunction product = out.g;
  for (const Complex& a : atoms) product = times_linear(product, a);
  out.residual = max_coeff_distance(add(out.p, product), f);
  return out;
}

namespace {

Eigen::MatrixXcd multiplier_section(const AnalyticFunction& phi, int j,
                                    int section_degree) {
  if (!phi.exact()) {
    throw std::invalid_argument("multiplier seminorm: phi must be exact");
  }
  require_order(j, 0, "multiplier seminorm");
  const int d = phi.degree();
  if (section_degree < d + j || section_degree < 1) {
    throw std::invalid_argument(
        "multiplier seminorm: section degree must be >= deg phi + j");
  }
  const int cols = section_degree - j + 1;
  const int rows = cols + d;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, cols);
  for (int k = j; k <= section_degree; ++k) {
    for (int i = 0; i <= d; ++i) {
      const int m = k + i;
      a(m - j, k - j) =
          phi.coeff(i) * std::sqrt(binomial(m, j) / binomial(k, j));
    }
  }
  return a;
}

}  // namespace

double multiplier_seminorm_estimate(const AnalyticFunction& phi, int j,
                                    int section_degree) {
  const Eigen::MatrixXcd a = multiplier_section(phi, j, section_degree);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

double multiplier_seminorm_upper_bound(const AnalyticFunction& phi, int j,
                                       int section_degree) {
  double bound = multiplier_seminorm_estimate(phi, j, section_degree);
  const int k = section_degree + 1;
  for (int i = 0; i <= phi.degree(); ++i) {
    bound += std::abs(phi.coeff(i)) *
             std::sqrt(binomial(k + i, j) / binomial(k, j));
  }
  return bound;
}

}  // namespace dirikit
