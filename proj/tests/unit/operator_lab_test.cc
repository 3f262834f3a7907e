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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dirikit/combinatorics.hpp"
#include "dirikit/random.hpp"
#include "oracles.hpp"

namespace dirikit {
namespace {

const Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

AnalyticFunction poly(std::vector<Complex> c) { return AnalyticFunction(std::move(c)); }

// <z^j, z^k> for the tuple from the closed-form local Gram entries.
Complex oracle_gram(const MeasureTuple& t, int j, int k) {
  Complex g = j == k ? 1.0 : 0.0;
  for (int i = 0; i < t.size(); ++i) {
    const int order = i + 1;
    if (j == k) g += t[i].lebesgue_mass() * oracle::binomial(k, order);
    for (const Atom& a : t[i].atoms()) {
      const Complex lambda = std::polar(1.0, a.angle);
      g += a.mass * std::pow(lambda, j - k) * oracle::binomial(std::min(j, k), order);
    }
  }
  return g;
}

TEST(GramSectionTest, Examples) {
  const GramSection s = gram_section(MeasureTuple({CircleMeasure::lebesgue()}), 2);
  EXPECT_EQ(s.matrix.rows(), 3);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(s.matrix(j, k), j == k ? Complex(1.0 + j) : Complex(0.0));
    }
  }
  const GramSection d = gram_section(MeasureTuple({CircleMeasure::dirac(0.0)}), 2);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(std::abs(d.matrix(j, k) - Complex((j == k) + std::min(j, k))), 0.0, 1e-15);
    }
  }
  const GramSection z = gram_section(MeasureTuple({CircleMeasure()}), 4);
  EXPECT_TRUE(z.matrix.isIdentity(0.0));
  EXPECT_THROW(gram_section(MeasureTuple({CircleMeasure()}), 0), std::invalid_argument);
}

TEST(GramSectionTest, FrozenMixedTuple) {
  const MeasureTuple t({CircleMeasure::lebesgue(0.5),
                        CircleMeasure({{0.0, 1.0}, {kPi / 2, 2.0}}, 0.0)});
  const GramSection s = gram_section(t, 3);
  const Complex want[4][4] = {{1.0, 0.0, 0.0, 0.0},
                              {0.0, 1.5, 0.0, 0.0},
                              {0.0, 0.0, 5.0, {1.0, -2.0}},
                              {0.0, 0.0, {1.0, 2.0}, 11.5}};
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(s.matrix(j, k) - want[j][k]), 0.0, 1e-14) << j << k;
    }
  }
}

TEST(GramSectionTest, RandomTuplesMatchOracleAndArePsd) {
  for (int t = 0; t < 20; ++t) {
    TrialRng rng(41, t);
    std::vector<CircleMeasure> e;
    for (int i = 0, m = rng.integer(1, 3); i < m; ++i) e.push_back(random_measure(rng));
    const MeasureTuple tuple(e);
    const int n = rng.integer(1, 8);
    const GramSection s = gram_section(tuple, n);
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) {
        const Complex want = oracle_gram(tuple, j, k);
        EXPECT_NEAR(std::abs(s.matrix(j, k) - want), 0.0, 1e-12 * std::max(1.0, std::abs(want)));
      }
      EXPECT_NEAR(s.matrix(j, j).real(), tuple_norm_sq(AnalyticFunction::monomial(j), tuple),
                  1e-12 * s.matrix(j, j).real());
    }
    EXPECT_TRUE(s.matrix.isApprox(s.matrix.adjoint(), 0.0) ||
                (s.matrix - s.matrix.adjoint()).norm() < 1e-12);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(s.matrix);
    EXPECT_GE(eig.eigenvalues().minCoeff(), 1.0 - 1e-12);
  }
}

TEST(GramSectionTest, SigmaOnlyIsDiagonal) {
  const MeasureTuple t({CircleMeasure::lebesgue(0.3), CircleMeasure::lebesgue(2.0)});
  const GramSection s = gram_section(t, 6);
  for (int j = 0; j <= 6; ++j) {
    for (int k = 0; k <= 6; ++k) {
      if (j != k) EXPECT_EQ(s.matrix(j, k), 0.0);
    }
  }
}

TEST(TupleNormTest, Examples) {
  EXPECT_EQ(tuple_norm_sq(poly({1.0}), MeasureTuple({CircleMeasure::dirac(0.0)})), 1.0);
  EXPECT_EQ(tuple_norm_sq(poly({0.0, 1.0}), MeasureTuple({CircleMeasure::lebesgue()})), 2.0);
  EXPECT_NEAR(tuple_norm_sq(poly({0.0, 0.0, 1.0}),
                            MeasureTuple({CircleMeasure::lebesgue(), CircleMeasure::dirac(0.0)})),
              4.0, 1e-15);
  EXPECT_THROW(tuple_norm_sq(poly({1.0}).with_exact(false),
                             MeasureTuple({CircleMeasure::lebesgue()})),
               std::invalid_argument);
}

TEST(TupleNormTest, IsTheGramQuadraticForm) {
  for (int t = 0; t < 20; ++t) {
    TrialRng rng(42, t);
    const MeasureTuple tuple({random_measure(rng), random_measure(rng)});
    const AnalyticFunction f = random_polynomial(rng, 0, 8);
    const GramSection s = gram_section(tuple, std::max(1, f.degree()));
    Eigen::VectorXcd c(s.matrix.rows());
    for (int k = 0; k < c.size(); ++k) c(k) = f.coeff(k);
    // sum_{j,k} f_j conj(f_k) <z^j, z^k>.
    const double q = (c.transpose() * s.matrix * c.conjugate())(0, 0).real();
    EXPECT_NEAR(tuple_norm_sq(f, tuple), q, 1e-11 * std::max(1.0, q));
  }
}

TEST(DefectSequenceTest, Examples) {
  const DefectSequence a =
      defect_sequence(poly({1.0}), MeasureTuple({CircleMeasure::lebesgue()}), 3);
  EXPECT_EQ(a.beta, (std::vector<double>{1.0, 2.0, 3.0, 4.0}));
  EXPECT_EQ(a.leading(2), 0.0);

  const MeasureTuple t({CircleMeasure(), CircleMeasure::dirac(0.0)});
  const DefectSequence b = defect_sequence(poly({1.0}), t, 4);
  for (int k = 0; k <= 4; ++k) EXPECT_NEAR(b.beta[k], 1.0 + binomial(k, 2), 1e-13);
  EXPECT_NEAR(b.leading(2), 1.0, 1e-13);
  EXPECT_NEAR(b.leading(3), 0.0, 1e-13);

  const DefectSequence c = defect_sequence(poly({-1.0, 1.0}), t, 3);
  for (int k = 0; k <= 3; ++k) EXPECT_NEAR(c.beta[k], 2.0 + k, 1e-13);
  EXPECT_NEAR(c.leading(2), 0.0, 1e-13);
}

TEST(DefectSequenceTest, FrozenThreeIsometry) {
  const MeasureTuple t({CircleMeasure::dirac(0.0), CircleMeasure(), CircleMeasure::dirac(kPi)});
  const DefectSequence d = defect_sequence(poly({1.0, 1.0}), t, 4);
  const double want[] = {3.0, 7.0, 12.0, 18.0, 25.0};
  for (int k = 0; k <= 4; ++k) EXPECT_NEAR(d.beta[k], want[k], 1e-13);
  EXPECT_EQ(d.differences.size(), 4u);
  EXPECT_EQ(d.differences[0].size(), 4u);
  EXPECT_NEAR(d.leading(1), 4.0, 1e-13);
  EXPECT_NEAR(d.leading(3), 0.0, 1e-12);
  EXPECT_NEAR(d.leading(4), 0.0, 1e-12);
}

TEST(DefectSequenceTest, HigherIsometry) {
  for (int t = 0; t < 30; ++t) {
    TrialRng rng(43, t);
    const int m = rng.integer(1, 3);
    std::vector<CircleMeasure> e;
    for (int i = 0; i < m; ++i) e.push_back(random_measure(rng));
    const AnalyticFunction f = random_polynomial(rng);
    EXPECT_NEAR(defect_sequence(f, MeasureTuple(e), m + 1).leading(m + 1), 0.0, 1e-8);
  }
}

TEST(VMembershipTest, Examples) {
  const CircleMeasure d1 = CircleMeasure::dirac(0.0);
  const VMembership a = v_membership_check(poly({-1.0, 1.0}), CircleMeasure(), d1);
  EXPECT_NEAR(a.defect2, 0.0, 1e-13);
  EXPECT_EQ(a.dtau0, 0.0);
  EXPECT_TRUE(a.consistent);
  const VMembership b = v_membership_check(poly({1.0}), CircleMeasure(), d1);
  EXPECT_NEAR(b.defect2, 1.0, 1e-13);
  EXPECT_EQ(b.dtau0, 1.0);
  EXPECT_TRUE(b.consistent);
  const CircleMeasure two({{0.0, 1.0}, {kPi, 1.0}}, 0.0);
  const VMembership c = v_membership_check(poly({-1.0, 0.0, 1.0}), CircleMeasure(), two);
  EXPECT_NEAR(c.defect2, 0.0, 1e-12);
  EXPECT_NEAR(c.dtau0, 0.0, 1e-24);
  EXPECT_TRUE(c.consistent);
  EXPECT_THROW(v_membership_check(poly({1.0}), CircleMeasure(), CircleMeasure::lebesgue()),
               std::invalid_argument);
}

TEST(VMembershipTest, PositivityAndConsistency) {
  for (int t = 0; t < 30; ++t) {
    TrialRng rng(44, t);
    const CircleMeasure mu = random_measure(rng);
    const CircleMeasure tau = random_atomic_measure(rng, 1, 3);
    AnalyticFunction f = random_polynomial(rng, 0, 9);
    if (t % 2 == 0) {
      for (const Atom& a : tau.atoms()) f = times_linear(f, a.point());
    }
    const VMembership v = v_membership_check(f, mu, tau);
    EXPECT_GE(v.defect2, -1e-9);
    EXPECT_TRUE(v.consistent);
    if (t % 2 == 0) EXPECT_LE(v.dtau0, 1e-9);
  }
}

}  // namespace
}  // namespace dirikit
