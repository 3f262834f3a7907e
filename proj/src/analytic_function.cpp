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

#include "dirikit/analytic_function.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dirikit/combinatorics.hpp"
#include "dirikit/extrapolation.hpp"

namespace dirikit {
namespace {

constexpr int kFirstRadialExponent = 3;
constexpr int kLastRadialExponent = 12;
constexpr double kDivergenceThreshold = 1e8;
constexpr double kDivisionTolerance = 1e-12;

}  // namespace

AnalyticFunction::AnalyticFunction() : coeffs_{Complex{0.0}}, exact_(true) {}

AnalyticFunction::AnalyticFunction(std::vector<Complex> coeffs, bool exact)
    : coeffs_(std::move(coeffs)), exact_(exact) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

AnalyticFunction AnalyticFunction::constant(Complex c) {
  return AnalyticFunction({c}, true);
}

AnalyticFunction AnalyticFunction::monomial(int k, Complex c) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Complex> a(static_cast<std::size_t>(k) + 1, 0.0);
  a.back() = c;
  return AnalyticFunction(std::move(a), true);
}

Complex AnalyticFunction::coeff(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex AnalyticFunction::operator()(Complex z) const {
  return evaluate(*this, z);
}

AnalyticFunction AnalyticFunction::with_exact(bool exact) const {
  return AnalyticFunction(coeffs_, exact);
}

Complex evaluate(const AnalyticFunction& f, Complex z) {
  const auto a = f.coeffs();
  Complex acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

AnalyticFunction derivative(const AnalyticFunction& f, int j) {
  if (j < 0) throw std::invalid_argument("derivative: negative order");
  if (j == 0) return f;
  const int n = f.degree();
  if (j > n) return AnalyticFunction({0.0}, f.exact());
  std::vector<Complex> b(static_cast<std::size_t>(n - j) + 1);
  for (int k = j; k <= n; ++k) {
    b[static_cast<std::size_t>(k - j)] = falling_factorial(k, j) * f.coeff(k);
  }
  return AnalyticFunction(std::move(b), f.exact());
}

AnalyticFunction dilate(const AnalyticFunction& f, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("dilate: r must lie in [0, 1), got " +
                                std::to_string(r));
  }
  std::vector<Complex> b(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t k = 1; k < b.size(); ++k) {
    b[k] *= std::pow(r, static_cast<double>(k));
  }
  return AnalyticFunction(std::move(b), f.exact());
}

AnalyticFunction add(const AnalyticFunction& f, const AnalyticFunction& g) {
  const int n = std::max(f.degree(), g.degree());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = f.coeff(k) + g.coeff(k);
  return AnalyticFunction(std::move(c), f.exact() && g.exact());
}

AnalyticFunction subtract(const AnalyticFunction& f,
                          const AnalyticFunction& g) {
  return add(f, scale(g, -1.0));
}

AnalyticFunction scale(const AnalyticFunction& f, Complex c) {
  std::vector<Complex> b(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : b) x *= c;
  return AnalyticFunction(std::move(b), f.exact());
}

AnalyticFunction multiply(const AnalyticFunction& f, const AnalyticFunction& g,
                          int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("multiply: max_degree < 0");
  const int full = f.degree() + g.degree();
  const int n = std::min(full, max_degree);
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i <= f.degree(); ++i) {
    const Complex fi = f.coeff(i);
    for (int j = 0; j <= g.degree() && i + j <= n; ++j) {
      c[i + j] += fi * g.coeff(j);
    }
  }
  return AnalyticFunction(std::move(c), f.exact() && g.exact() && full <= n);
}

AnalyticFunction poly_arith(const AnalyticFunction& f,
                            const AnalyticFunction& g, PolyOp op,
                            int max_degree) {
  switch (op) {
    case PolyOp::kAdd:
      return add(f, g);
    case PolyOp::kMultiply:
      return multiply(f, g, max_degree);
    case PolyOp::kScale:
      return scale(f, g.coeff(0)).with_exact(f.exact() && g.exact());
  }
  throw std::invalid_argument("poly_arith: unknown op");
}

AnalyticFunction times_linear(const AnalyticFunction& f, Complex root) {
  const int n = f.degree();
  std::vector<Complex> c(static_cast<std::size_t>(n) + 2, 0.0);
  for (int k = 0; k <= n; ++k) {
    c[k + 1] += f.coeff(k);
    c[k] -= root * f.coeff(k);
  }
  return AnalyticFunction(std::move(c), f.exact());
}

AnalyticFunction shift(const AnalyticFunction& f, int k) {
  if (k < 0) throw std::invalid_argument("shift: negative power");
  std::vector<Complex> c(static_cast<std::size_t>(k), 0.0);
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  return AnalyticFunction(std::move(c), f.exact());
}

AnalyticFunction operator+(const AnalyticFunction& f,
                           const AnalyticFunction& g) {
  return add(f, g);
}
AnalyticFunction operator-(const AnalyticFunction& f,
                           const AnalyticFunction& g) {
  return subtract(f, g);
}
AnalyticFunction operator*(const AnalyticFunction& f,
                           const AnalyticFunction& g) {
  return multiply(f, g);
}
AnalyticFunction operator*(Complex c, const AnalyticFunction& f) {
  return scale(f, c);
}

RootDivision divide_by_root(const AnalyticFunction& f, Complex lambda,
                            Complex alpha) {
  const int n = f.degree();
  if (n == 0) {
    const Complex rem = f.coeff(0) - alpha;
    const double scale = std::max({1.0, std::abs(f.coeff(0)), std::abs(alpha)});
    return {AnalyticFunction({0.0}, f.exact()), rem,
            f.exact() && std::abs(rem) > kDivisionTolerance * scale};
  }
  std::vector<Complex> g(static_cast<std::size_t>(n));
  if (f.exact()) {
    // g_{N-1} = b_N, g_{k-1} = b_k + lambda g_k; remainder b_0 + lambda g_0.
    g[n - 1] = f.coeff(n);
    for (int k = n - 1; k >= 1; --k) g[k - 1] = f.coeff(k) + lambda * g[k];
    const Complex rem = (f.coeff(0) - alpha) + lambda * g[0];
    double scale = std::abs(alpha);
    for (const auto& a : f.coeffs()) scale += std::abs(a);
    scale = std::max(scale, 1.0);
    return {AnalyticFunction(std::move(g), true), rem,
            std::abs(rem) > kDivisionTolerance * scale};
  }
  // b_0 = -lambda g_0, b_k = g_{k-1} - lambda g_k.
  const Complex inv = std::conj(lambda) / std::norm(lambda);
  g[0] = -(f.coeff(0) - alpha) * inv;
  for (int k = 1; k < n; ++k) g[k] = (g[k - 1] - f.coeff(k)) * inv;
  const Complex residue = f.coeff(n) - g[n - 1];
  return {AnalyticFunction(std::move(g), false), residue, false};
}

const char* to_string(BoundaryStatus s) {
  switch (s) {
    case BoundaryStatus::kExact:
      return "exact";
    case BoundaryStatus::kExtrapolated:
      return "extrapolated";
    case BoundaryStatus::kDivergent:
      return "divergent";
  }
  return "unknown";
}

BoundaryValue boundary_value(const AnalyticFunction& f, Complex lambda) {
  if (f.exact()) {
    return {evaluate(f, lambda), BoundaryStatus::kExact, 0.0};
  }
  constexpr int kSamples = kLastRadialExponent - kFirstRadialExponent + 1;
  std::array<double, kSamples> h{};
  std::array<Complex, kSamples> v{};
  for (int i = 0; i < kSamples; ++i) {
    h[i] = std::ldexp(1.0, -(kFirstRadialExponent + i));
    v[i] = evaluate(f, (1.0 - h[i]) * lambda);
    if (!std::isfinite(std::abs(v[i])) ||
        std::abs(v[i]) > kDivergenceThreshold) {
      return {v[i], BoundaryStatus::kDivergent,
              std::numeric_limits<double>::infinity()};
    }
  }
  const Extrapolated e = extrapolate_to_zero(h, v);
  return {e.value, BoundaryStatus::kExtrapolated, e.error_estimate};
}

double max_coeff_distance(const AnalyticFunction& f,
                          const AnalyticFunction& g) {
  const int n = std::max(f.degree(), g.degree());
  double d = 0.0;
  for (int k = 0; k <= n; ++k) d = std::max(d, std::abs(f.coeff(k) - g.coeff(k)));
  return d;
}

double max_abs_coeff(const AnalyticFunction& f) {
  double m = 0.0;
  for (const auto& a : f.coeffs()) m = std::max(m, std::abs(a));
  return m;
}

}  // namespace dirikit
