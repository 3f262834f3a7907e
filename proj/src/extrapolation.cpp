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

#include "dirikit/extrapolation.hpp"

#include <stdexcept>
#include <vector>

namespace dirikit {

namespace {

// In-place Neville tableau at zero over the first m samples.
std::complex<double> neville(std::span<const double> h,
                             std::span<const std::complex<double>> v,
                             std::size_t m) {
  std::vector<std::complex<double>> p(v.begin(), v.begin() + m);
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = 0; i + level < m; ++i) {
      const double hi = h[i];
      const double hj = h[i + level];
      p[i] = (hj * p[i] - hi * p[i + 1]) / (hj - hi);
    }
  }
  return p[0];
}

}  // namespace

Extrapolated extrapolate_to_zero(std::span<const double> h,
                                 std::span<const std::complex<double>> v) {
  if (h.empty() || h.size() != v.size()) {
    throw std::invalid_argument("extrapolate_to_zero: size mismatch");
  }
  const std::size_t m = h.size();
  const std::complex<double> full = neville(h, v, m);
  if (m == 1) return {full, 0.0};
  return {full, std::abs(full - neville(h, v, m - 1))};
}

}  // namespace dirikit
