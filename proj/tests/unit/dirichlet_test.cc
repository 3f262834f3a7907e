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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dirikit/combinatorics.hpp"
#include "dirikit/random.hpp"
#include "oracles.hpp"

namespace dirikit {
namespace {

const Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

AnalyticFunction poly(std::vector<Complex> c) { return AnalyticFunction(std::move(c)); }

AnalyticFunction szego(Complex w, int degree) {
  std::vector<Complex> c;
  for (int k = 0; k <= degree; ++k) c.push_back(std::pow(std::conj(w), k));
  return AnalyticFunction(c, false);
}

// 1 + 2z - i z^3 + z^4/2, used for the frozen values below.
AnalyticFunction reference_poly() { return poly({1.0, 2.0, 0.0, -kI, 0.5}); }

TEST(DirichletSigmaTest, Examples) {
  EXPECT_EQ(dirichlet_sigma(poly({0.0, 0.0, 1.0}), 1).value, 2.0);
  EXPECT_EQ(dirichlet_sigma(poly({3.0}), 2).value, 0.0);
  EXPECT_EQ(dirichlet_sigma(poly({1.0, 1.0}), 1).value, 1.0);
  EXPECT_EQ(dirichlet_sigma(poly({1.0, 1.0}), 0).value, 2.0);
  const DirichletResult r = dirichlet_sigma(poly({1.0, 1.0}), 1);
  EXPECT_EQ(r.method, Method::kSeries);
  EXPECT_EQ(r.error_estimate, 0.0);
  EXPECT_EQ(r.order, 1);
}

TEST(SigmaInnerProductTest, PolarizesTheSeminorm) {
  for (int t = 0; t < 20; ++t) {
    TrialRng rng(21, t);
    const AnalyticFunction f = random_polynomial(rng);
    const AnalyticFunction g = random_polynomial(rng);
    const int j = rng.integer(0, 3);
    const double d = dirichlet_sigma(f + g, j).value - dirichlet_sigma(f - g, j).value;
    EXPECT_NEAR(4.0 * sigma_inner_product(f, g, j).real(), d, 1e-11 * std::max(1.0, d));
  }
}

TEST(LocalDirichletTest, FrozenValues) {
  const AnalyticFunction f = reference_poly();
  EXPECT_NEAR(local_dirichlet(f, kI, 1), 5.0, 1e-13);
  EXPECT_NEAR(local_dirichlet(f, kI, 2), 1.5, 1e-13);
  EXPECT_NEAR(local_dirichlet(f, kI, 3), 1.0, 1e-13);
  const Complex lambda = std::polar(1.0, kPi / 3);
  EXPECT_NEAR(local_dirichlet(f, lambda, 1), 6.0 + std::sqrt(3.0) / 2, 1e-13);
  EXPECT_NEAR(local_dirichlet(f, lambda, 2), 4.5 - 1.5 * std::sqrt(3.0), 1e-13);
}

TEST(LocalDirichletTest, MatchesClosedFormGram) {
  for (int t = 0; t < 50; ++t) {
    TrialRng rng(22, t);
    const AnalyticFunction f = random_polynomial(rng);
    const Complex lambda = rng.unimodular();
    const int n = rng.integer(1, 4);
    const double want = oracle::local_dirichlet(f, lambda, n);
    EXPECT_NEAR(local_dirichlet(f, lambda, n), want, 1e-11 * std::max(1.0, want));
  }
}

TEST(LocalDirichletTest, RejectsTruncationsAndOrderZero) {
  EXPECT_THROW(local_dirichlet(szego(0.5, 10), 1.0, 1), std::invalid_argument);
  EXPECT_THROW(local_dirichlet(poly({1.0}), 1.0, 0), std::invalid_argument);
}

TEST(DirichletWeightedTest, Examples) {
  const DirichletResult a =
      dirichlet_weighted(poly({0.0, 0.0, 1.0}), CircleMeasure::dirac(0.0), 1);
  EXPECT_NEAR(a.value, 2.0, 1e-15);
  EXPECT_EQ(a.method, Method::kDecomposition);
  EXPECT_EQ(dirichlet_weighted(poly({4.0}), CircleMeasure({{1.0, 2.0}}, 3.0), 2).value,
            0.0);
  EXPECT_THROW(dirichlet_weighted(poly({1.0}), CircleMeasure::dirac(0.0), 0),
               std::invalid_argument);
  EXPECT_EQ(dirichlet_weighted(poly({1.0, 1.0}), CircleMeasure::lebesgue(2.0), 1).method,
            Method::kSeries);
}

TEST(DirichletWeightedTest, HockeyStickMonomials) {
  for (int t = 0; t < 10; ++t) {
    TrialRng rng(23, t);
    const CircleMeasure mu = CircleMeasure::dirac(rng.angle());
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k <= 15; ++k) {
        const AnalyticFunction z_k = AnalyticFunction::monomial(k);
        const double want = oracle::hockey_stick(k, n);
        EXPECT_NEAR(dirichlet_weighted(z_k, mu, n).value, want, 1e-12);
        EXPECT_EQ(dirichlet_sigma(z_k, n).value, want);
      }
    }
  }
}

TEST(DirichletWeightedTest, MonomialByQuadrature) {
  const CircleMeasure mu = CircleMeasure::dirac(2.0);
  for (int n = 1; n <= 3; ++n) {
    const DirichletResult q = dirichlet_quadrature(AnalyticFunction::monomial(7), mu, n);
    EXPECT_NEAR(q.value, binomial(7, n), 1e-9 * binomial(7, n));
    EXPECT_EQ(q.method, Method::kQuadrature);
  }
}

TEST(DirichletWeightedTest, FubiniSplitMatchesOracleAndQuadrature) {
  for (int t = 0; t < 5; ++t) {
    TrialRng rng(24, t);
    CircleMeasure mu = random_measure(rng);
    if (mu.is_zero()) mu = CircleMeasure::dirac(1.0);
    const AnalyticFunction f = random_polynomial(rng);
    const int n = rng.integer(1, 3);
    const double exact = dirichlet_weighted(f, mu, n).value;
    EXPECT_NEAR(exact, oracle::weighted_dirichlet(f, mu, n), 1e-11 * std::max(1.0, exact));
    DirichletOptions forced;
    forced.force_quadrature = true;
    const DirichletResult q = dirichlet_weighted(f, mu, n, forced);
    EXPECT_EQ(q.method, Method::kQuadrature);
    EXPECT_NEAR(q.value, exact, 1e-9 * std::max(1.0, exact));
  }
}

TEST(DirichletWeightedTest, TruncationsUseQuadrature) {
  const Complex w(0.0, 0.5);
  const CircleMeasure mu({{0.0, 1.0}}, 1.0);
  const DirichletResult r = dirichlet_weighted(szego(w, 60), mu, 2);
  EXPECT_EQ(r.method, Method::kQuadrature);
  EXPECT_NEAR(r.value, szego_dirichlet_norm(w, mu, 2), 1e-10);
}

TEST(OrderZeroTest, Examples) {
  EXPECT_EQ(dirichlet_order_zero_atomic(poly({1.0}), CircleMeasure::dirac(0.0)).value,
            1.0);
  EXPECT_EQ(dirichlet_order_zero_atomic(poly({-1.0, 1.0}), CircleMeasure::dirac(0.0)).value,
            0.0);
  const CircleMeasure half({{0.0, 0.5}, {kPi, 0.5}}, 0.0);
  EXPECT_NEAR(dirichlet_order_zero_atomic(poly({0.0, 1.0}), half).value, 1.0, 1e-15);
  EXPECT_THROW(dirichlet_order_zero_atomic(poly({1.0}), CircleMeasure::lebesgue()),
               std::invalid_argument);
  std::vector<Complex> big;
  for (int k = 0; k <= 200; ++k) big.push_back(std::pow(double(k), 4));
  EXPECT_THROW(dirichlet_order_zero_atomic(AnalyticFunction(big, false),
                                           CircleMeasure::dirac(0.0)),
               NotInSpace);
}

TEST(DouglasTest, Examples) {
  const DouglasCertificate a = douglas_decompose(poly({0.0, 0.0, 1.0}), 1.0, 2);
  EXPECT_EQ(a.alpha, 1.0);
  EXPECT_EQ(max_coeff_distance(a.g, poly({1.0, 1.0})), 0.0);
  EXPECT_NEAR(a.lhs, 1.0, 1e-12);
  EXPECT_EQ(a.rhs, 1.0);

  const DouglasCertificate b = douglas_decompose(poly({kI}), std::polar(1.0, 0.7), 3);
  EXPECT_EQ(b.alpha, kI);
  EXPECT_EQ(b.lhs, 0.0);
  EXPECT_EQ(b.rhs, 0.0);

  const DouglasCertificate c = douglas_decompose(AnalyticFunction::monomial(3), -1.0, 1);
  EXPECT_EQ(c.alpha, -1.0);
  EXPECT_EQ(max_coeff_distance(c.g, poly({1.0, -1.0, 1.0})), 0.0);
  EXPECT_EQ(c.rhs, 3.0);
  EXPECT_NEAR(c.lhs, 3.0, 1e-12);
  EXPECT_EQ(c.reconstruction_residual, 0.0);
}

TEST(DouglasTest, FrozenOrderOne) {
  const DouglasCertificate c = douglas_decompose(reference_poly(), kI, 1);
  EXPECT_NEAR(c.rhs, 5.0, 1e-13);
  EXPECT_NEAR(c.lhs, 5.0, 1e-10);
}

TEST(DouglasTest, RandomIdentity) {
  for (int t = 0; t < 8; ++t) {
    TrialRng rng(25, t);
    const AnalyticFunction f = random_polynomial(rng);
    const Complex lambda = rng.unimodular();
    const int n = 1 + t % 4;
    const DouglasCertificate c = douglas_decompose(f, lambda, n);
    EXPECT_LE(c.residual / std::max(c.rhs, 1.0), n == 1 ? 1e-3 : 1e-6);
    EXPECT_LE(c.reconstruction_residual, 1e-12 * std::max(1.0, max_abs_coeff(f)));
  }
}

TEST(DouglasTest, TruncatedSzegoKernel) {
  const Complex w = 0.5;
  const DouglasCertificate c = douglas_decompose(szego(w, 60), 1.0, 1);
  EXPECT_NEAR(c.alpha.real(), 2.0, 1e-10);
  // D_{delta_1,1} of the kernel: |w|^2/(1-|w|^2) V(w) = 4/3.
  EXPECT_NEAR(c.rhs, 4.0 / 3.0, 1e-9);
  EXPECT_NEAR(c.lhs, 4.0 / 3.0, 1e-9);
}

TEST(DouglasTest, DivergentBoundaryValue) {
  std::vector<Complex> big;
  for (int k = 0; k <= 200; ++k) big.push_back(std::pow(double(k), 4));
  EXPECT_THROW(douglas_decompose(AnalyticFunction(big, false), 1.0, 2), NotInSpace);
}

TEST(TMapTest, Examples) {
  EXPECT_EQ(max_coeff_distance(t_map(poly({1.0}), kI, 1), poly({1.0})), 0.0);
  EXPECT_EQ(max_coeff_distance(t_map(poly({0.0, 1.0}), 1.0, 1), poly({-1.0, 2.0})), 0.0);
  EXPECT_EQ(max_coeff_distance(t_map(poly({0.0, 1.0}), 1.0, 2), poly({2.0})), 0.0);
}

TEST(TMapTest, Isometry) {
  for (int t = 0; t < 6; ++t) {
    TrialRng rng(26, t);
    const int n = 1 + t % 4;
    const AnalyticFunction f = random_polynomial(rng, n - 1, 12, n - 1);
    const Complex lambda = rng.unimodular();
    const double lhs = bergman_nu_norm_sq(t_map(f, lambda, n), lambda, n).value.real();
    const double rhs = oracle::sigma_dirichlet(f, n - 1);
    EXPECT_NEAR(lhs, rhs, 1e-6 * rhs);
  }
}

TEST(KernelSigmaTest, Examples) {
  EXPECT_EQ(kernel_sigma(0.0, 0.0, 1, 50).value, 0.0);
  EXPECT_NEAR(std::abs(kernel_sigma(0.5, 0.5, 0, 200).value - 4.0 / 3.0), 0.0, 1e-15);
  EXPECT_NEAR(kernel_sigma(0.5, 0.5, 1, 200).value.real(), 0.2876820724517809, 1e-15);
  const KernelSum s = kernel_sigma(0.5, 0.5, 0, 10);
  EXPECT_NEAR(s.tail_bound, std::pow(0.25, 10) / 0.75, 1e-18);
  EXPECT_LE(std::abs(s.value - 4.0 / 3.0), s.tail_bound);
  EXPECT_THROW(kernel_sigma(1.0, 0.0, 0, 5), std::domain_error);
}

TEST(KernelSigmaTest, ReproducesTruncatedPart) {
  for (int t = 0; t < 20; ++t) {
    TrialRng rng(27, t);
    const AnalyticFunction f = random_polynomial(rng, 0, 20);
    const int j = rng.integer(0, 3);
    const int cut = rng.integer(j, 20);
    const Complex w = 0.7 * std::sqrt(rng.uniform()) * rng.unimodular();
    std::vector<Complex> kc(cut + 1, 0.0);
    for (int k = j; k <= cut; ++k) kc[k] = std::pow(std::conj(w), k) / binomial(k, j);
    Complex want = 0.0;
    for (int k = j; k <= cut; ++k) want += f.coeff(k) * std::pow(w, k);
    EXPECT_NEAR(std::abs(sigma_inner_product(f, poly(kc), j) - want), 0.0, 1e-10);
    // The same kernel evaluated at z through kernel_sigma.
    const Complex z = 0.7 * std::sqrt(rng.uniform()) * rng.unimodular();
    EXPECT_NEAR(std::abs(kernel_sigma(z, w, j, cut - j + 1).value -
                         evaluate(poly(kc), z)),
                0.0, 1e-13);
  }
}

TEST(KernelBergmanTest, Examples) {
  EXPECT_THROW(kernel_bergman_nu(kI, 0.3, kI, 2), std::domain_error);
  EXPECT_NEAR(std::abs(kernel_bergman_nu(0.0, 0.0, 1.0, 1) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(kernel_bergman_nu(0.0, 0.0, 1.0, 2) - 6.0), 0.0, 1e-15);
  const Complex frozen(3.1886481952114205, 0.31313984534022693);
  EXPECT_NEAR(std::abs(kernel_bergman_nu({0.3, 0.1}, {-0.2, 0.4}, kI, 2) - frozen), 0.0,
              1e-14);
}

TEST(KernelBergmanTest, MatchesBasisExpansion) {
  const Complex grid[] = {0.0, 0.7, {0.0, 0.6}, {-0.35, 0.35}, {-0.5, -0.45}};
  for (int n = 1; n <= 3; ++n) {
    for (const Complex& z : grid) {
      for (const Complex& w : grid) {
        const Complex lambda = std::polar(1.0, 0.4 * n);
        const Complex series = factorial(n) * factorial(n - 1) * (n + 1) * (z - lambda) *
                               (std::conj(w) - std::conj(lambda)) *
                               oracle::bergman_series(z * std::conj(w), n);
        EXPECT_NEAR(std::abs(kernel_bergman_nu(z, w, lambda, n) - series), 0.0, 1e-10);
      }
    }
  }
}

TEST(KernelBergmanTest, ReproducesByQuadrature) {
  // <K(., w), K(., w)>_{nu} = K(w, w).
  const Complex lambda = std::polar(1.0, 1.1);
  const Complex w(0.2, -0.3);
  for (int n = 1; n <= 2; ++n) {
    std::vector<Complex> c;
    const double pref = factorial(n) * factorial(n - 1) * (n + 1);
    const Complex wl = std::conj(w) - std::conj(lambda);
    // Coefficients of pref (z - lambda) conj(w - lambda) sum C(n+k+1,k) (z conj w)^k.
    std::vector<Complex> s;
    double ck = 1.0;
    for (int k = 0; k < 60; ++k) {
      s.push_back(pref * wl * ck * std::pow(std::conj(w), k));
      ck = ck * (n + k + 2) / (k + 1);
    }
    const AnalyticFunction kw = times_linear(AnalyticFunction(s, false), lambda);
    const double norm = bergman_nu_norm_sq(kw, lambda, n).value.real();
    EXPECT_NEAR(norm, kernel_bergman_nu(w, w, lambda, n).real(),
                1e-8 * kernel_bergman_nu(w, w, lambda, n).real());
  }
}

TEST(SzegoNormTest, Examples) {
  EXPECT_EQ(szego_dirichlet_norm(0.0, CircleMeasure::dirac(0.0), 2), 0.0);
  EXPECT_NEAR(szego_dirichlet_norm(0.5, CircleMeasure::dirac(0.0), 1), 4.0 / 3.0, 1e-15);
  const CircleMeasure mixed({{0.0, 1.0}, {kPi / 2, 2.0}}, 0.0);
  EXPECT_NEAR(szego_dirichlet_norm({0.0, 0.5}, mixed, 2), 44.0 / 45.0, 1e-15);
  for (int n = 1; n <= 3; ++n) {
    const Complex w(0.3, 0.4);
    const double x = std::norm(w);
    double series = 0.0;
    double c = 1.0;  // C(k, n)
    for (int k = n; k < 400; ++k) {
      series += c * std::pow(x, k);
      c = c * (k + 1) / (k + 1 - n);
    }
    EXPECT_NEAR(szego_dirichlet_norm(w, CircleMeasure::lebesgue(), n),
                std::pow(x, n) / std::pow(1 - x, n + 1), 1e-14);
    EXPECT_NEAR(szego_dirichlet_norm(w, CircleMeasure::lebesgue(), n), series,
                1e-12 * series);
  }
}

TEST(SzegoNormTest, QuadratureOnTruncation) {
  const CircleMeasure mu = CircleMeasure::dirac(0.0);
  const DirichletResult q = dirichlet_quadrature(szego(0.5, 60), mu, 1);
  EXPECT_NEAR(q.value, 4.0 / 3.0, 1e-4 * 4.0 / 3.0);
}

TEST(DilationTest, FactorExamples) {
  EXPECT_EQ(dilation_factor(0.0, 3), 0.0);
  EXPECT_NEAR(dilation_factor(0.5, 1), 0.375, 1e-16);
  EXPECT_NEAR(dilation_factor(0.5, 2), 1.0 / 6.0, 1e-16);
  EXPECT_THROW(dilation_factor(1.0, 2), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 1000; ++i) EXPECT_LE(dilation_factor(i / 1000.0, n), 1.0);
  }
}

TEST(DilationTest, Bound) {
  for (int t = 0; t < 50; ++t) {
    TrialRng rng(28, t);
    CircleMeasure mu = random_measure(rng);
    if (mu.is_zero()) mu = CircleMeasure::lebesgue();
    const AnalyticFunction f = random_polynomial(rng);
    const int n = 2 + t % 2;
    const double r = rng.integer(1, 9) / 10.0;
    const double lhs = dirichlet_weighted(dilate(f, r), mu, n).value;
    const double rhs = dilation_factor(r, n) * dirichlet_weighted(f, mu, n).value;
    EXPECT_LE(lhs, rhs * (1 + 1e-9));
  }
}

TEST(AuxiliaryIntegralTest, FiniteAndConsistent) {
  const CircleMeasure mu({{0.5, 1.0}, {2.5, 0.5}}, 0.0);
  const AnalyticFunction f = reference_poly();
  for (int n = 1; n <= 3; ++n) {
    for (int j = 0; j <= n; ++j) {
      const QuadratureResult q = auxiliary_integral(f, mu, j, n);
      EXPECT_TRUE(std::isfinite(q.value.real()));
      EXPECT_GE(q.value.real(), 0.0);
    }
    const double top = auxiliary_integral(f, mu, n, n).value.real() /
                       (factorial(n) * factorial(n - 1));
    EXPECT_NEAR(top, dirichlet_weighted(f, mu, n).value, 1e-9);
  }
  EXPECT_THROW(auxiliary_integral(f, mu, 3, 2), std::invalid_argument);
}

TEST(AtomicDecomposeTest, Examples) {
  const Complex one[] = {1.0};
  const AtomicDecomposition a = atomic_decompose(poly({0.0, 0.0, 1.0}), one, 2);
  EXPECT_EQ(max_coeff_distance(a.p, poly({1.0})), 0.0);
  EXPECT_EQ(max_coeff_distance(a.g, poly({1.0, 1.0})), 0.0);
  const Complex two[] = {1.0, -1.0};
  const AtomicDecomposition b = atomic_decompose(poly({0.0, 0.0, 1.0}), two, 1);
  EXPECT_EQ(max_coeff_distance(b.p, poly({1.0})), 0.0);
  EXPECT_EQ(max_coeff_distance(b.g, poly({1.0})), 0.0);
  const Complex three[] = {1.0, kI, -1.0};
  const AtomicDecomposition c = atomic_decompose(poly({2.0, kI}), three, 3);
  EXPECT_LE(max_coeff_distance(c.p, poly({2.0, kI})), 1e-15);
  EXPECT_LE(max_abs_coeff(c.g), 1e-15);
  EXPECT_THROW(atomic_decompose(poly({1.0}), std::vector<Complex>{1.0, 1.0}, 1),
               std::invalid_argument);
}

TEST(AtomicDecomposeTest, RoundTrip) {
  for (int t = 0; t < 30; ++t) {
    TrialRng rng(29, t);
    const int k = rng.integer(1, 4);
    std::vector<Complex> atoms;
    for (double a : random_distinct_angles(rng, k)) atoms.push_back(std::polar(1.0, a));
    const AnalyticFunction f = random_polynomial(rng);
    const AtomicDecomposition d = atomic_decompose(f, atoms, 2);
    const double scale =
        std::max({1.0, max_abs_coeff(f), max_abs_coeff(d.p), max_abs_coeff(d.g)});
    EXPECT_LE(d.residual / scale, 1e-10);
    EXPECT_LE(d.p.degree(), k - 1);
    for (const Complex& a : atoms) {
      EXPECT_NEAR(std::abs(evaluate(d.p, a) - oracle::evaluate(f, a)), 0.0, 1e-10 * scale);
    }
  }
}

TEST(LagrangeTest, InterpolatesNodes) {
  const Complex nodes[] = {1.0, kI, -1.0, {0.6, -0.8}};
  const Complex values[] = {2.0, -kI, 0.5, {1.0, 1.0}};
  const AnalyticFunction p = lagrange_interpolant(nodes, values);
  EXPECT_EQ(p.degree(), 3);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(evaluate(p, nodes[i]) - values[i]), 0.0, 1e-14);
  }
}

TEST(MultiplierSeminormTest, Examples) {
  for (int j = 0; j <= 3; ++j) {
    EXPECT_NEAR(multiplier_seminorm_estimate(poly({1.0}), j, 10), 1.0, 1e-14);
  }
  EXPECT_NEAR(multiplier_seminorm_estimate(poly({0.0, 1.0}), 0, 10), 1.0, 1e-14);
  EXPECT_NEAR(multiplier_seminorm_estimate(poly({0.0, 1.0}), 1, 2), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(multiplier_seminorm_estimate(poly({0.0, 1.0}), 1, 20), std::sqrt(2.0), 1e-14);
  EXPECT_THROW(multiplier_seminorm_estimate(poly({0.0, 0.0, 1.0}), 1, 2),
               std::invalid_argument);
  EXPECT_THROW(multiplier_seminorm_estimate(szego(0.5, 4), 0, 10), std::invalid_argument);
}

TEST(MultiplierSeminormTest, ToeplitzSection) {
  // On H^2, multiplication by 1 + z restricted to degree N has norm
  // 2 cos(pi / (2 (N + 2))).
  for (int n : {1, 5, 20}) {
    EXPECT_NEAR(multiplier_seminorm_estimate(poly({1.0, 1.0}), 0, n),
                2.0 * std::cos(kPi / (2.0 * (n + 2))), 1e-13);
  }
}

TEST(MultiplierSeminormTest, MonotoneAndBracketed) {
  for (int t = 0; t < 10; ++t) {
    TrialRng rng(30, t);
    const AnalyticFunction phi = random_polynomial(rng, 0, 6);
    const int j = rng.integer(0, 3);
    double prev = 0.0;
    for (int n = phi.degree() + j; n <= phi.degree() + j + 12; n += 3) {
      if (n < 1) continue;
      const double s = multiplier_seminorm_estimate(phi, j, n);
      EXPECT_GE(s, prev * (1 - 1e-14));
      EXPECT_GE(multiplier_seminorm_upper_bound(phi, j, n), s);
      prev = s;
    }
  }
}

}  // namespace
}  // namespace dirikit
