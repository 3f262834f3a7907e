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


#include "dirikit/operator_lab.hpp"

#include <stdexcept>

#include "dirikit/combinatorics.hpp"
#include "dirikit/dirichlet.hpp"

namespace dirikit {
namespace {

void require_exact(const AnalyticFunction& f, const char* what) {
  if (!f.exact()) {
    throw std::invalid_argument(std::string(what) +
                                ": needs an exact polynomial");
  }
}

AnalyticFunction douglas_quotient(const AnalyticFunction& f, Complex lambda) {
  return divide_by_root(f, lambda, evaluate(f, lambda)).quotient;
}

}  // namespace

Complex dirichlet_inner_product(const AnalyticFunction& f,
                                const AnalyticFunction& g,
                                const CircleMeasure& mu, int n) {
  require_exact(f, "dirichlet_inner_product");
  require_exact(g, "dirichlet_inner_product");
  if (n < 1) {
    throw std::invalid_argument("dirichlet_inner_product: order must be >= 1");
  }
  Complex s = mu.lebesgue_mass() * sigma_inner_product(f, g, n);
  for (const Atom& a : mu.atoms()) {
    const Complex lambda = a.point();
    s += a.mass * sigma_inner_product(douglas_quotient(f, lambda),
                                      douglas_quotient(g, lambda), n - 1);
  }
  return s;
}

GramSection gram_section(const MeasureTuple& tuple, int degree) {
  if (degree < 1) throw std::invalid_argument("gram_section: degree must be >= 1");
  const int size = degree + 1;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(size, size);
  for (int i = 0; i < tuple.size(); ++i) {
    const CircleMeasure& mu = tuple[i];
    const int order = i + 1;
    for (int k = 0; k < size; ++k) {
      g(k, k) += mu.lebesgue_mass() * binomial(k, order);
    }
    for (const Atom& a : mu.atoms()) {
      const Complex lambda = a.point();
      std::vector<AnalyticFunction> quotients;
      quotients.reserve(size);
      for (int k = 0; k < size; ++k) {
        quotients.push_back(douglas_quotient(AnalyticFunction::monomial(k), lambda));
      }
      for (int j = 0; j < size; ++j) {
        for (int k = j; k < size; ++k) {
          const Complex v =
              a.mass * sigma_inner_product(quotients[j], quotients[k], order - 1);
          g(j, k) += v;
          if (k != j) g(k, j) += std::conj(v);
        }
      }
    }
  }
  return {tuple, degree, std::move(g)};
}

double tuple_norm_sq(const AnalyticFunction& f, const MeasureTuple& tuple) {
  require_exact(f, "tuple_norm_sq");
  double total = dirichlet_sigma(f, 0).value;
  for (int i = 0; i < tuple.size(); ++i) {
    if (tuple[i].is_zero()) continue;
    total += dirichlet_weighted(f, tuple[i], i + 1).value;
  }
  return total;
}

double DefectSequence::leading(int p) const {
  if (p == 0) return beta.at(0);
  return differences.at(static_cast<std::size_t>(p - 1)).at(0);
}

DefectSequence defect_sequence(const AnalyticFunction& f,
                               const MeasureTuple& tuple, int max_order) {
  require_exact(f, "defect_sequence");
  if (max_order < 1) {
    throw std::invalid_argument("defect_sequence: max_order must be >= 1");
  }
  DefectSequence out;
  for (int k = 0; k <= max_order; ++k) {
    out.beta.push_back(tuple_norm_sq(shift(f, k), tuple));
  }
  for (int p = 1; p <= max_order; ++p) {
    std::vector<double> row;
    for (int k = 0; k + p <= max_order; ++k) {
      double d = 0.0;
      for (int q = 0; q <= p; ++q) {
        const double sign = ((p - q) % 2 == 0) ? 1.0 : -1.0;
        d += sign * binomial(p, q) * out.beta[k + q];
      }
      row.push_back(d);
    }
    out.differences.push_back(std::move(row));
  }
  return out;
}

VMembership v_membership_check(const AnalyticFunction& f,
                               const CircleMeasure& mu,
                               const CircleMeasure& tau) {
  if (!tau.is_atomic()) {
    throw std::invalid_argument("v_membership_check: tau must be atomic");
  }
  const MeasureTuple tuple({mu, tau});
  VMembership out;
  out.defect2 = defect_sequence(f, tuple, 2).leading(2);
  out.dtau0 = dirichlet_order_zero_atomic(f, tau).value;
  out.consistent = (out.defect2 <= kMembershipTolerance) ==
                   (out.dtau0 <= kMembershipTolerance);
  return out;
}

}  // namespace dirikit
