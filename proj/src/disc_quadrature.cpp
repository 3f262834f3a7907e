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

#include "dirikit/disc_quadrature.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

namespace dirikit {
namespace {

constexpr long long kMaxAngularNodes = 1LL << 24;
constexpr std::size_t kPairwiseBlock = 32;

std::string format_node(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "(%.17g, %.17g)", z.real(), z.imag());
  return buf;
}

template <typename T>
T parse_number(std::string_view s) {
  T value{};
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && *(last - 1) == ' ') --last;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed quadrature field '" +
                                std::string(s) + "'");
  }
  return value;
}

// One ring: (weight * r / M) * sum_m F(r e^{2 pi i m / M}).
std::complex<double> ring_contribution(const DiscIntegrand& integrand,
                                       double r, double weight, long long m,
                                       std::vector<std::complex<double>>& buf) {
  buf.resize(static_cast<std::size_t>(m));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  for (long long k = 0; k < m; ++k) {
    const std::complex<double> z = std::polar(r, step * static_cast<double>(k));
    const std::complex<double> v = integrand(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw SingularIntegrand(z);
    }
    buf[static_cast<std::size_t>(k)] = v;
  }
  return pairwise_sum(buf.data(), buf.size()) *
         (weight * r / static_cast<double>(m));
}

std::complex<double> apply_rule(const DiscIntegrand& integrand, int radial,
                                int angular, double clip, int workers) {
  const GaussLegendreRule gl = gauss_legendre(radial);
  std::vector<std::complex<double>> rings(static_cast<std::size_t>(radial));
  auto run_range = [&](int begin, int end) {
    std::vector<std::complex<double>> buf;
    for (int i = begin; i < end; ++i) {
      const double r = 0.5 * (gl.nodes[i] + 1.0);
      // 1/2 from dx -> dr, 2 from the full turn of dtheta / pi.
      const double w = gl.weights[i];
      rings[i] = ring_contribution(integrand, r, w,
                                   angular_nodes_at(r, angular, clip), buf);
    }
  };
  workers = std::clamp(workers, 1, radial);
  if (workers == 1) {
    run_range(0, radial);
  } else {
    std::vector<std::thread> threads;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int t = 0; t < workers; ++t) {
      const int begin = radial * t / workers;
      const int end = radial * (t + 1) / workers;
      threads.emplace_back([&, begin, end] {
        try {
          run_range(begin, end);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  return pairwise_sum(rings.data(), rings.size());
}

}  // namespace

void QuadratureSpec::validate() const {
  if (radial < 4) throw std::invalid_argument("quadrature: radial must be >= 4");
  if (angular < 8) {
    throw std::invalid_argument("quadrature: angular must be >= 8");
  }
  if (!(clip > 0.0 && clip < 0.5)) {
    throw std::invalid_argument("quadrature: clip must lie in (0, 0.5)");
  }
  if (levels < 0) throw std::invalid_argument("quadrature: levels must be >= 0");
}

QuadratureSpec QuadratureSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw std::invalid_argument(
        "quadrature spec must be 'radial,angular,clip,levels'");
  }
  QuadratureSpec spec;
  spec.radial = parse_number<int>(parts[0]);
  spec.angular = parse_number<int>(parts[1]);
  spec.clip = parse_number<double>(parts[2]);
  spec.levels = parse_number<int>(parts[3]);
  spec.validate();
  return spec;
}

QuadratureSpec QuadratureSpec::from_environment() {
  if (const char* env = std::getenv("DIRIKIT_QUAD_DEFAULT");
      env != nullptr && *env != '\0') {
    return parse(env);
  }
  return {};
}

std::string QuadratureSpec::to_string() const {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%d", radial, angular, clip,
                levels);
  return buf;
}

SingularIntegrand::SingularIntegrand(std::complex<double> node)
    : std::runtime_error("singular integrand at node " + format_node(node)),
      node_(node) {}

long long angular_nodes_at(double r, int angular, double clip) {
  const double gap = 1.0 - r;
  const double boundary = std::ceil(1.0 / (clip * gap));
  long long m = angular;
  if (boundary > static_cast<double>(m)) {
    m = boundary >= static_cast<double>(kMaxAngularNodes)
            ? kMaxAngularNodes
            : static_cast<long long>(boundary);
  }
  return m;
}

QuadratureResult integrate_disc(const DiscIntegrand& integrand,
                                const QuadratureSpec& spec, int workers) {
  spec.validate();
  QuadratureResult result;
  result.value =
      apply_rule(integrand, spec.radial, spec.angular, spec.clip, workers);
  if (spec.levels > 0) {
    const std::complex<double> coarse =
        apply_rule(integrand, std::max(4, spec.radial / 2),
                   std::max(8, spec.angular / 2),
                   std::min(2.0 * spec.clip, 0.5), workers);
    result.error_estimate = std::abs(result.value - coarse);
  }
  return result;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

std::complex<double> pairwise_sum(const std::complex<double>* data,
                                  std::size_t n) {
  if (n <= kPairwiseBlock) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

}  // namespace dirikit
