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

// Finite non-negative measures on the unit circle of the form
//   c * sigma + sum_j c_j delta_{lambda_j},
// with sigma the normalized arc length.

#ifndef DIRIKIT_CIRCLE_MEASURE_HPP_
#define DIRIKIT_CIRCLE_MEASURE_HPP_

#include <complex>
#include <span>
#include <vector>

namespace dirikit {

struct Atom {
  /// Angle of lambda_j, normalized to [0, 2 pi).
  double angle;
  double mass;

  std::complex<double> point() const;
};

class CircleMeasure {
 public:
  /// The zero measure.
  CircleMeasure() = default;

  /// Validates masses (> 0), lebesgue (>= 0, finite) and pairwise distinct
  /// atoms (circular distance above 1e-9 rad). Throws std::invalid_argument.
  CircleMeasure(std::vector<Atom> atoms, double lebesgue);

  static CircleMeasure lebesgue(double c = 1.0);
  static CircleMeasure dirac(double angle, double mass = 1.0);
  /// Point mass at a unimodular lambda (|lambda| = 1 to 1e-12).
  static CircleMeasure dirac_at(std::complex<double> lambda, double mass = 1.0);

  std::span<const Atom> atoms() const { return atoms_; }
  double lebesgue_mass() const { return lebesgue_; }
  double total_mass() const;
  bool is_atomic() const { return lebesgue_ == 0.0; }
  bool is_zero() const { return atoms_.empty() && lebesgue_ == 0.0; }

  /// Sum of measures; coinciding atoms merge.
  CircleMeasure operator+(const CircleMeasure& other) const;
  CircleMeasure scaled(double factor) const;

 private:
  std::vector<Atom> atoms_;
  double lebesgue_ = 0.0;
};

/// (mu_1, ..., mu_m), m >= 1. Entry i carries order i + 1 in the tuple norm.
class MeasureTuple {
 public:
  explicit MeasureTuple(std::vector<CircleMeasure> entries);

  std::span<const CircleMeasure> entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const CircleMeasure& operator[](int i) const { return entries_[i]; }

 private:
  std::vector<CircleMeasure> entries_;
};

/// Wraps an angle into [0, 2 pi).
double normalize_angle(double angle);

/// Angle of a unimodular number; throws std::invalid_argument when
/// ||lambda| - 1| > 1e-12.
double unimodular_angle(std::complex<double> lambda);

/// P_mu(z) = int (1 - |z|^2)/|z - zeta|^2 dmu(zeta); the sigma part is
/// exactly c. Throws std::domain_error for |z| >= 1.
double poisson_integral(const CircleMeasure& mu, std::complex<double> z);

/// V_mu(w) = int dmu(lambda) / |1 - lambda conj(w)|^2.
/// Throws std::domain_error for |w| >= 1.
double v_mu(const CircleMeasure& mu, std::complex<double> w);

}  // namespace dirikit

#endif  // DIRIKIT_CIRCLE_MEASURE_HPP_
