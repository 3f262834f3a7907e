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


// Seeded random inputs for property checks. Every trial owns a stream
// derived from (seed, trial index), so trials can run in any order.

#ifndef DIRIKIT_RANDOM_HPP_
#define DIRIKIT_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "dirikit/analytic_function.hpp"
#include "dirikit/circle_measure.hpp"

namespace dirikit {

std::uint64_t splitmix64(std::uint64_t x);

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next() { return engine_(); }
  /// [0, 1) with 53 random bits; identical on every platform.
  double uniform();
  double uniform(double lo, double hi);
  /// Inclusive range.
  int integer(int lo, int hi);
  /// Uniform in the square [-1, 1] x [-1, 1].
  Complex in_square();
  double angle();
  Complex unimodular();

 private:
  std::mt19937_64 engine_;
};

/// Exact polynomial of degree uniform in [min_degree, max_degree] with
/// coefficients from in_square(); coefficients below `zero_below` are 0.
AnalyticFunction random_polynomial(TrialRng& rng, int min_degree = 0,
                                   int max_degree = 12, int zero_below = 0);

/// `count` angles, pairwise at least 1e-6 apart on the circle.
std::vector<double> random_distinct_angles(TrialRng& rng, int count);

/// Atoms with masses uniform in [0.1, 2].
CircleMeasure random_atomic_measure(TrialRng& rng, int min_atoms,
                                    int max_atoms);

/// 0-3 atoms plus, with probability 1/2, a sigma part of mass in [0.1, 2].
/// May be the zero measure.
CircleMeasure random_measure(TrialRng& rng);

}  // namespace dirikit

#endif  // DIRIKIT_RANDOM_HPP_
