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

// Product quadrature over the unit disc against the normalized area measure
// dA = (1/pi) r dr dtheta.
//
// Radially a Gauss-Legendre rule covers all of [0, 1]; its nodes never reach
// r = 1. On the ring of radius r the angular trapezoid rule uses
//
//   M(r) = max(angular, ceil(1 / (clip * (1 - r))))
//
// equispaced nodes, i.e. the angular spacing never exceeds 2 pi * clip times
// the distance to the circle. A Poisson kernel centred at a boundary point
// has angular width about 1 - r on that ring, so it stays resolved up to the
// outermost node, and the trapezoid error decays like exp(-1/clip).
//
// The error estimate compares the result with a coarser rule that halves
// both node counts and doubles clip.

#ifndef DIRIKIT_DISC_QUADRATURE_HPP_
#define DIRIKIT_DISC_QUADRATURE_HPP_

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dirikit {

struct QuadratureSpec {
  int radial = 96;
  int angular = 256;
  double clip = 1.0 / 64.0;
  /// 0 disables the coarse comparison rule (error estimate reported as 0).
  int levels = 4;

  /// Throws std::invalid_argument unless radial >= 4, angular >= 8,
  /// 0 < clip < 0.5, levels >= 0.
  void validate() const;

  /// "radial,angular,clip,levels", e.g. "96,256,0.015625,4".
  static QuadratureSpec parse(std::string_view text);
  /// Defaults, overridden by DIRIKIT_QUAD_DEFAULT when set.
  static QuadratureSpec from_environment();

  std::string to_string() const;

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
};

/// Thrown when the integrand is NaN or infinite at a node.
class SingularIntegrand : public std::runtime_error {
 public:
  explicit SingularIntegrand(std::complex<double> node);
  std::complex<double> node() const { return node_; }

 private:
  std::complex<double> node_;
};

using DiscIntegrand = std::function<std::complex<double>(std::complex<double>)>;

/// Integral of the integrand over the disc with respect to dA (so the
/// integral of 1 is 1). Rings are split across `workers` threads; the
/// reduction order is fixed, so results do not depend on the worker count.
/// The integrand must be safe to call concurrently when workers > 1.
QuadratureResult integrate_disc(const DiscIntegrand& integrand,
                                const QuadratureSpec& spec = {},
                                int workers = 1);

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1].
GaussLegendreRule gauss_legendre(int n);

/// Angular node count used on the ring of radius r.
long long angular_nodes_at(double r, int angular, double clip);

/// Sum in a fixed pairwise order.
std::complex<double> pairwise_sum(const std::complex<double>* data,
                                  std::size_t n);

}  // namespace dirikit

#endif  // DIRIKIT_DISC_QUADRATURE_HPP_
