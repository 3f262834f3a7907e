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

#ifndef DIRIKIT_COMBINATORICS_HPP_
#define DIRIKIT_COMBINATORICS_HPP_

namespace dirikit {

/// Binomial coefficient C(n, k) as a double. Zero when k < 0 or k > n.
/// The value is exact whenever it is below 2^53; larger values are the
/// correctly rounded product of an exact 128-bit intermediate, falling back
/// to a floating recurrence only past 2^127.
double binomial(int n, int k);

/// Falling factorial n (n-1) ... (n-k+1) = n!/(n-k)!, with the same exactness
/// guarantees as binomial(). Zero when k > n, one when k == 0.
double falling_factorial(int n, int k);

/// n! as a double (exact for n <= 22).
double factorial(int n);

}  // namespace dirikit

#endif  // DIRIKIT_COMBINATORICS_HPP_
