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

// Weighted Dirichlet-type integrals of order n on the unit disc,
//
//   D_{mu,n}(f) = 1/(n!(n-1)!) int |f^(n)|^2 P_mu(z) (1-|z|^2)^(n-1) dA(z),
//
// and the machinery around them: the local Douglas decomposition
// f = f*(lambda) + (z - lambda) g with D_{lambda,n}(f) = D_{sigma,n-1}(g),
// reproducing kernels, the T-map, dilation bounds, finitely atomic
// decompositions and multiplier seminorm sections.
//
// Two independent routes produce every integral: the series/decomposition
// route below (exact for polynomials, O(N^2)) and disc quadrature.

#ifndef DIRIKIT_DIRICHLET_HPP_
#define DIRIKIT_DIRICHLET_HPP_

#include <complex>
#include <span>
#include <stdexcept>
#include <string>

#include "dirikit/analytic_function.hpp"
#include "dirikit/circle_measure.hpp"
#include "dirikit/disc_quadrature.hpp"

namespace dirikit {

enum class Method { kSeries, kDecomposition, kQuadrature };

const char* to_string(Method m);

struct DirichletResult {
  double value = 0.0;
  Method method = Method::kSeries;
  double error_estimate = 0.0;
  int order = 0;
};

/// f has no boundary value at an atom, so it is outside the space.
class NotInSpace : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DirichletOptions {
  QuadratureSpec quadrature;
  /// Route every part of the measure through quadrature.
  bool force_quadrature = false;
  int workers = 1;
};

/// sum_{k>=n} C(k,n) |a_k|^2. For a truncation the error estimate is the
/// size of the last retained term, a heuristic for the missing tail.
DirichletResult dirichlet_sigma(const AnalyticFunction& f, int n);

/// Polarization of D_{sigma,j}: sum_{k>=j} C(k,j) f_k conj(g_k).
Complex sigma_inner_product(const AnalyticFunction& f,
                            const AnalyticFunction& g, int j);

/// D_{lambda,n}(f) for exact polynomial f through the Douglas decomposition.
/// Throws std::invalid_argument for truncations or n < 1.
double local_dirichlet(const AnalyticFunction& f, Complex lambda, int n);

/// D_{mu,n}(f), n >= 1.
///
/// The c*sigma part is c times dirichlet_sigma. Atoms go through the
/// decomposition path when f is exact and through quadrature otherwise; the
/// pieces add by Fubini. force_quadrature sends the whole measure to
/// quadrature. The method tag reports quadrature if it was used at all,
/// else decomposition if there were atoms, else series.
DirichletResult dirichlet_weighted(const AnalyticFunction& f,
                                   const CircleMeasure& mu, int n,
                                   const DirichletOptions& options = {});

/// D_{mu,n}(f) by disc quadrature alone.
DirichletResult dirichlet_quadrature(const AnalyticFunction& f,
                                     const CircleMeasure& mu, int n,
                                     const QuadratureSpec& spec = {},
                                     int workers = 1);

/// D_{mu,0}(f) = sum_j c_j |f*(lambda_j)|^2 for purely atomic mu.
/// Throws std::invalid_argument if mu has a sigma part and NotInSpace if a
/// boundary value diverges.
DirichletResult dirichlet_order_zero_atomic(const AnalyticFunction& f,
                                            const CircleMeasure& mu);

/// I_{mu,j,n}(f) = int |f^(j)|^2 P_mu (1-|z|^2)^(n-1) dA by quadrature.
QuadratureResult auxiliary_integral(const AnalyticFunction& f,
                                    const CircleMeasure& mu, int j, int n,
                                    const QuadratureSpec& spec = {},
                                    int workers = 1);

struct DouglasCertificate {
  /// f*(lambda).
  Complex alpha;
  AnalyticFunction g;
  /// D_{lambda,n}(f) by quadrature.
  double lhs = 0.0;
  double lhs_error = 0.0;
  /// D_{sigma,n-1}(g) by the series.
  double rhs = 0.0;
  double residual = 0.0;
  /// max_k |(alpha + (z - lambda) g - f)_k|.
  double reconstruction_residual = 0.0;
};

/// Splits f = alpha + (z - lambda) g and checks D_{lambda,n}(f) against
/// D_{sigma,n-1}(g). Throws NotInSpace if f*(lambda) diverges.
DouglasCertificate douglas_decompose(const AnalyticFunction& f, Complex lambda,
                                     int n, const QuadratureSpec& spec = {},
                                     int workers = 1);

/// ((z - lambda) f)^(n).
AnalyticFunction t_map(const AnalyticFunction& f, Complex lambda, int n);

/// int |h|^2 d nu_{lambda,n}, with
/// d nu_{lambda,n} = P_{delta_lambda} (1-|z|^2)^(n-1) dA / (n!(n-1)!).
QuadratureResult bergman_nu_norm_sq(const AnalyticFunction& h, Complex lambda,
                                    int n, const QuadratureSpec& spec = {},
                                    int workers = 1);

struct KernelSum {
  Complex value;
  /// Bound on the omitted terms: |zw|^(j+terms) / (1 - |zw|).
  double tail_bound = 0.0;
};

/// Partial sum over k = j .. j+terms-1 of C(k,j)^{-1} (z conj w)^k, the
/// reproducing kernel of U_{sigma,j}. Throws std::domain_error off the disc.
KernelSum kernel_sigma(Complex z, Complex w, int j, int terms);

/// Reproducing kernel of A^2(d nu_{lambda,n}):
/// (n+1)!(n-1)! (z - lambda)(conj w - conj lambda) / (1 - z conj w)^(n+2).
Complex kernel_bergman_nu(Complex z, Complex w, Complex lambda, int n);

/// D_{mu,n}(1/(1 - z conj w)) = |w|^(2n) / (1-|w|^2)^n * V_mu(w).
double szego_dirichlet_norm(Complex w, const CircleMeasure& mu, int n);

/// 4^(n-1) (2-r) r^(2n) / (1+r)^(2n-2); bounds D_{mu,n}(f_r)/D_{mu,n}(f).
double dilation_factor(double r, int n);

struct AtomicDecomposition {
  /// Interpolant of f* at the atoms, degree <= k-1.
  AnalyticFunction p;
  AnalyticFunction g;
  /// max_k |(p + g prod(z - lambda_j) - f)_k|.
  double residual = 0.0;
};

/// f = p + g prod_j (z - lambda_j) for distinct unimodular lambda_j.
/// The split does not depend on n; n >= 1 only names the space
/// H_{mu,n} in error messages. Throws NotInSpace on a divergent boundary
/// value and std::invalid_argument on repeated or empty atoms.
AtomicDecomposition atomic_decompose(const AnalyticFunction& f,
                                     std::span<const Complex> atoms, int n);

/// Polynomial of degree <= k-1 through (nodes_i, values_i).
AnalyticFunction lagrange_interpolant(std::span<const Complex> nodes,
                                      std::span<const Complex> values);

/// Largest singular value of multiplication by phi from
/// span{z^j..z^N} into U_{sigma,j}, both with the orthonormal monomials
/// C(k,j)^{-1/2} z^k. Nondecreasing in N and a lower bound for the
/// seminorm of phi on U_{sigma,j}. Requires exact phi and N >= deg phi + j.
double multiplier_seminorm_estimate(const AnalyticFunction& phi, int j,
                                    int section_degree);

/// Upper bound for the same seminorm:
///   ||A_N|| + sum_i |phi_i| sqrt(C(N+1+i, j) / C(N+1, j)),
/// the section norm plus the norm of the weighted shifts on the
/// complement of the section.
double multiplier_seminorm_upper_bound(const AnalyticFunction& phi, int j,
                                       int section_degree);

}  // namespace dirikit

#endif  // DIRIKIT_DIRICHLET_HPP_
