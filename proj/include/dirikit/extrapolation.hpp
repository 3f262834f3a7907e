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

#ifndef DIRIKIT_EXTRAPOLATION_HPP_
#define DIRIKIT_EXTRAPOLATION_HPP_

#include <complex>
#include <span>

namespace dirikit {

struct Extrapolated {
  std::complex<double> value;
  /// |P(0..m) - P(0..m-1)| at the origin; zero for a single sample.
  double error_estimate;
};

/// Evaluates at h = 0 the interpolating polynomial through (h_i, v_i)
/// (Neville's scheme). h must be pairwise distinct and non-empty.
Extrapolated extrapolate_to_zero(std::span<const double> h,
                                 std::span<const std::complex<double>> v);

}  // namespace dirikit

#endif  // DIRIKIT_EXTRAPOLATION_HPP_
