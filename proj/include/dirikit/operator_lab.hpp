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


// Finite-section experiments with the shift M_z on the space normed by
//
//   ||f||^2 = ||f||^2_{H^2} + sum_{i=1}^m D_{mu_i,i}(f)
//
// for a tuple (mu_1, ..., mu_m). Everything here runs on the exact
// decomposition path; no quadrature is involved.

#ifndef DIRIKIT_OPERATOR_LAB_HPP_
#define DIRIKIT_OPERATOR_LAB_HPP_

#include <Eigen/Dense>
#include <vector>

#include "dirikit/analytic_function.hpp"
#include "dirikit/circle_measure.hpp"

namespace dirikit {

struct GramSection {
  MeasureTuple tuple;
  int degree;
  /// G(j, k) = <z^j, z^k>, linear in the first slot.
  Eigen::MatrixXcd matrix;
};

/// Polarized D_{mu,n} on the exact path: the sigma part is c sum C(k,n)
/// f_k conj(g_k), each atom contributes <f_1, g_1>_{sigma,n-1} for the
/// quotients of the Douglas splits at that atom.
Complex dirichlet_inner_product(const AnalyticFunction& f,
                                const AnalyticFunction& g,
                                const CircleMeasure& mu, int n);

/// Gram matrix of 1, z, ..., z^N. Throws std::invalid_argument if N < 1.
GramSection gram_section(const MeasureTuple& tuple, int degree);

/// ||f||^2_{H^2} + sum_i D_{mu_i,i}(f) for exact f.
double tuple_norm_sq(const AnalyticFunction& f, const MeasureTuple& tuple);

struct DefectSequence {
  /// beta_k = ||z^k f||^2, k = 0..max_order.
  std::vector<double> beta;
  /// differences[p - 1][k] = (Delta^p beta)_k, k = 0..max_order-p.
  std::vector<std::vector<double>> differences;

  /// (Delta^p beta)_0; p = 0 gives beta_0.
  double leading(int p) const;
};

/// (Delta^p beta)_k = sum_q (-1)^(p-q) C(p,q) beta_{k+q}.
DefectSequence defect_sequence(const AnalyticFunction& f,
                               const MeasureTuple& tuple, int max_order);

struct VMembership {
  double defect2 = 0.0;
  double dtau0 = 0.0;
  bool consistent = false;
};

inline constexpr double kMembershipTolerance = 1e-9;

/// Compares Delta^2 beta_0 for the tuple (mu, tau) with D_{tau,0}(f); the
/// two must vanish together. tau must be purely atomic.
VMembership v_membership_check(const AnalyticFunction& f,
                               const CircleMeasure& mu,
                               const CircleMeasure& tau);

}  // namespace dirikit

#endif  // DIRIKIT_OPERATOR_LAB_HPP_
