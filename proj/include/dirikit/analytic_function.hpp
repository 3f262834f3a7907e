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

// Truncated Taylor series on the unit disc.
//
// An AnalyticFunction stores a_0..a_N together with a flag telling whether
// the series is a polynomial represented exactly or a truncation of a longer
// series. All operations are pure; values are immutable once built.

#ifndef DIRIKIT_ANALYTIC_FUNCTION_HPP_
#define DIRIKIT_ANALYTIC_FUNCTION_HPP_

#include <complex>
#include <span>
#include <vector>

namespace dirikit {

using Complex = std::complex<double>;

/// Products are cut at this degree unless a caller asks otherwise.
inline constexpr int kDefaultTruncationDegree = 64;

class AnalyticFunction {
 public:
  /// The zero polynomial.
  AnalyticFunction();
  /// An empty coefficient list is read as the zero function.
  explicit AnalyticFunction(std::vector<Complex> coeffs, bool exact = true);

  static AnalyticFunction constant(Complex c);
  static AnalyticFunction monomial(int k, Complex c = 1.0);

  std::span<const Complex> coeffs() const { return coeffs_; }
  /// Coefficient of z^k; zero past the stored degree.
  Complex coeff(int k) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool exact() const { return exact_; }

  Complex operator()(Complex z) const;

  /// Copy with the exact flag replaced.
  AnalyticFunction with_exact(bool exact) const;

 private:
  std::vector<Complex> coeffs_;
  bool exact_;
};

/// Horner evaluation of the stored polynomial.
Complex evaluate(const AnalyticFunction& f, Complex z);

/// j-th derivative; the zero function once j exceeds the degree.
AnalyticFunction derivative(const AnalyticFunction& f, int j);

/// f_r(z) = f(rz). Throws std::invalid_argument unless 0 <= r < 1.
AnalyticFunction dilate(const AnalyticFunction& f, double r);

AnalyticFunction add(const AnalyticFunction& f, const AnalyticFunction& g);
AnalyticFunction subtract(const AnalyticFunction& f,
                          const AnalyticFunction& g);
AnalyticFunction scale(const AnalyticFunction& f, Complex c);
/// Cauchy product cut at max_degree. The result is exact only if both
/// factors are and no coefficient was dropped.
AnalyticFunction multiply(const AnalyticFunction& f, const AnalyticFunction& g,
                          int max_degree = kDefaultTruncationDegree);

/// The generic arithmetic entry point used by the bindings and the CLI.
enum class PolyOp { kAdd, kMultiply, kScale };
/// For kScale the scalar is taken from g's constant term.
AnalyticFunction poly_arith(const AnalyticFunction& f,
                            const AnalyticFunction& g, PolyOp op,
                            int max_degree = kDefaultTruncationDegree);

/// (z - root) * f, never truncated.
AnalyticFunction times_linear(const AnalyticFunction& f, Complex root);
/// z^k * f, never truncated.
AnalyticFunction shift(const AnalyticFunction& f, int k);

AnalyticFunction operator+(const AnalyticFunction& f,
                           const AnalyticFunction& g);
AnalyticFunction operator-(const AnalyticFunction& f,
                           const AnalyticFunction& g);
AnalyticFunction operator*(const AnalyticFunction& f,
                           const AnalyticFunction& g);
AnalyticFunction operator*(Complex c, const AnalyticFunction& f);

struct RootDivision {
  /// g with (z - lambda) g = f - alpha.
  AnalyticFunction quotient;
  /// For exact f: f(lambda) - alpha, left in the constant term.
  /// For truncations: b_N - g_{N-1}, left in the top coefficient.
  Complex residue;
  /// Set for exact f when the remainder is not zero to rounding.
  bool inexact = false;
};

/// Solves f = alpha + (z - lambda) g.
///
/// Exact polynomials use synthetic division from the top, so the remainder
/// f(lambda) - alpha appears at degree 0. Truncations are divided as power
/// series from the bottom: each g_k is then the true Taylor coefficient of
/// (f - alpha)/(z - lambda), and the mismatch lands on the top coefficient.
RootDivision divide_by_root(const AnalyticFunction& f, Complex lambda,
                            Complex alpha);

enum class BoundaryStatus { kExact, kExtrapolated, kDivergent };

const char* to_string(BoundaryStatus s);

struct BoundaryValue {
  Complex value;
  BoundaryStatus status;
  /// Spread between the last two rows of the extrapolation tableau.
  double error_estimate = 0.0;
};

/// Radial limit f*(lambda), |lambda| = 1.
///
/// Exact polynomials are evaluated at lambda. Truncations are sampled at
/// r_k = 1 - 2^-k, k = 3..12, and Richardson-extrapolated to r = 1. A
/// sample above 1e8 in modulus marks the limit as divergent.
BoundaryValue boundary_value(const AnalyticFunction& f, Complex lambda);

/// max_k |f_k - g_k| over the union of both supports.
double max_coeff_distance(const AnalyticFunction& f, const AnalyticFunction& g);

/// max_k |f_k|.
double max_abs_coeff(const AnalyticFunction& f);

}  // namespace dirikit

#endif  // DIRIKIT_ANALYTIC_FUNCTION_HPP_
