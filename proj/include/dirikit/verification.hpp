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


// Seeded property batteries, one per identity or inequality. Each suite
// draws random inputs per trial, compares two independent routes or checks
// an inequality, and records every check that misses its tolerance.

#ifndef DIRIKIT_VERIFICATION_HPP_
#define DIRIKIT_VERIFICATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dirikit/disc_quadrature.hpp"
#include "dirikit/json_io.hpp"

namespace dirikit {

struct VerifyOptions {
  /// Suite default when unset.
  std::optional<int> trials;
  std::uint64_t seed = 0;
  /// Fixes the order n where a suite would otherwise draw it.
  std::optional<int> order;
  /// Replaces the suite's primary tolerance.
  std::optional<double> tolerance;
  QuadratureSpec quadrature;
  /// Trials run concurrently on this many threads.
  int workers = 1;
};

struct Failure {
  int trial = 0;
  io::Json input;
  double observed = 0.0;
  double bound = 0.0;
  double gap = 0.0;
};

struct VerificationReport {
  std::string suite;
  int trials = 0;
  std::uint64_t seed = 0;
  long long checks = 0;
  double max_residual = 0.0;
  std::vector<Failure> failures;
  /// Observations that are logged without being asserted.
  io::Json notes = io::Json::object();

  bool passed() const { return failures.empty(); }
};

/// douglas, monomial, tmap, kernel, dilation, shiftineq, multiplier, atomic,
/// szego, isometry, vsubspace.
std::span<const std::string_view> suite_names();

int default_trials(std::string_view suite);

/// Throws std::invalid_argument for an unknown suite or bad options.
VerificationReport run_suite(std::string_view suite,
                             const VerifyOptions& options);

io::Json to_json(const VerificationReport& report);
/// Summary table, one row per suite.
std::string reports_to_csv(std::span<const VerificationReport> reports);

}  // namespace dirikit

#endif  // DIRIKIT_VERIFICATION_HPP_
