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

#include "dirikit/combinatorics.hpp"

#include <algorithm>
#include <limits>

namespace dirikit {
namespace {

__extension__ using u128 = unsigned __int128;

constexpr u128 kU128Max = ~static_cast<u128>(0);

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  // r * (n - k + i) / i stays integral at every step.
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    const u128 num = static_cast<u128>(n - k + i);
    if (r > kU128Max / num) {
      double d = static_cast<double>(r);
      for (int j = i; j <= k; ++j) d = d * (n - k + j) / j;
      return d;
    }
    r = r * num / static_cast<u128>(i);
  }
  return static_cast<double>(r);
}

double falling_factorial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  u128 r = 1;
  for (int i = 0; i < k; ++i) {
    const u128 m = static_cast<u128>(n - i);
    if (r > kU128Max / m) {
      double d = static_cast<double>(r);
      for (int j = i; j < k; ++j) d *= (n - j);
      return d;
    }
    r *= m;
  }
  return static_cast<double>(r);
}

double factorial(int n) { return falling_factorial(n, n); }

}  // namespace dirikit
