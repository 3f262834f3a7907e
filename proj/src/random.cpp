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


#include "dirikit/random.hpp"

#include <cmath>
#include <numbers>

namespace dirikit {
namespace {

constexpr double kMinSeparation = 1e-6;

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(~trial))) {}

double TrialRng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double TrialRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

int TrialRng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Complex TrialRng::in_square() {
  const double re = uniform(-1.0, 1.0);
  return {re, uniform(-1.0, 1.0)};
}

double TrialRng::angle() { return 2.0 * std::numbers::pi * uniform(); }

Complex TrialRng::unimodular() { return std::polar(1.0, angle()); }

AnalyticFunction random_polynomial(TrialRng& rng, int min_degree,
                                   int max_degree, int zero_below) {
  const int degree = rng.integer(min_degree, max_degree);
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int k = 0; k <= degree; ++k) {
    const Complex a = rng.in_square();
    if (k >= zero_below) c[k] = a;
  }
  return AnalyticFunction(std::move(c), true);
}

std::vector<double> random_distinct_angles(TrialRng& rng, int count) {
  std::vector<double> out;
  while (static_cast<int>(out.size()) < count) {
    const double a = rng.angle();
    bool ok = true;
    for (double b : out) {
      const double d = std::fabs(a - b);
      if (std::min(d, 2.0 * std::numbers::pi - d) < kMinSeparation) ok = false;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

CircleMeasure random_atomic_measure(TrialRng& rng, int min_atoms,
                                    int max_atoms) {
  const int count = rng.integer(min_atoms, max_atoms);
  std::vector<Atom> atoms;
  for (double a : random_distinct_angles(rng, count)) {
    atoms.push_back({a, rng.uniform(0.1, 2.0)});
  }
  return CircleMeasure(std::move(atoms), 0.0);
}

CircleMeasure random_measure(TrialRng& rng) {
  const CircleMeasure atomic = random_atomic_measure(rng, 0, 3);
  const bool with_sigma = rng.integer(0, 1) == 1;
  const double c = with_sigma ? rng.uniform(0.1, 2.0) : 0.0;
  return atomic + CircleMeasure::lebesgue(c);
}

}  // namespace dirikit
