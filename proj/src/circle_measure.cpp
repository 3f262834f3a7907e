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

#include "dirikit/circle_measure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dirikit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTolerance = 1e-9;
constexpr double kUnimodularTolerance = 1e-12;

double circular_distance(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, kTwoPi - d);
}

void require_open_disc(std::complex<double> z, const char* what) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error(std::string(what) + ": point must satisfy |z| < 1");
  }
}

}  // namespace

std::complex<double> Atom::point() const { return std::polar(1.0, angle); }

double normalize_angle(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("non-finite angle");
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double unimodular_angle(std::complex<double> lambda) {
  if (std::fabs(std::abs(lambda) - 1.0) > kUnimodularTolerance) {
    throw std::invalid_argument("point is not on the unit circle");
  }
  return normalize_angle(std::arg(lambda));
}

CircleMeasure::CircleMeasure(std::vector<Atom> atoms, double lebesgue)
    : atoms_(std::move(atoms)), lebesgue_(lebesgue) {
  if (!std::isfinite(lebesgue_) || lebesgue_ < 0.0) {
    throw std::invalid_argument("lebesgue mass must be finite and >= 0");
  }
  for (auto& a : atoms_) {
    if (!std::isfinite(a.mass) || !(a.mass > 0.0)) {
      throw std::invalid_argument("atom masses must be finite and > 0");
    }
    a.angle = normalize_angle(a.angle);
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
      if (circular_distance(atoms_[i].angle, atoms_[j].angle) <=
          kAngleTolerance) {
        throw std::invalid_argument("atom points must be pairwise distinct");
      }
    }
  }
}

CircleMeasure CircleMeasure::lebesgue(double c) { return CircleMeasure({}, c); }

CircleMeasure CircleMeasure::dirac(double angle, double mass) {
  return CircleMeasure({Atom{angle, mass}}, 0.0);
}

CircleMeasure CircleMeasure::dirac_at(std::complex<double> lambda,
                                      double mass) {
  return dirac(unimodular_angle(lambda), mass);
}

double CircleMeasure::total_mass() const {
  double m = lebesgue_;
  for (const auto& a : atoms_) m += a.mass;
  return m;
}

CircleMeasure CircleMeasure::operator+(const CircleMeasure& other) const {
  std::vector<Atom> merged = atoms_;
  for (const auto& b : other.atoms_) {
    bool found = false;
    for (auto& a : merged) {
      if (circular_distance(a.angle, b.angle) <= kAngleTolerance) {
        a.mass += b.mass;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(b);
  }
  return CircleMeasure(std::move(merged), lebesgue_ + other.lebesgue_);
}

CircleMeasure CircleMeasure::scaled(double factor) const {
  if (!(factor > 0.0)) {
    if (factor == 0.0) return CircleMeasure();
    throw std::invalid_argument("measures scale by non-negative factors only");
  }
  std::vector<Atom> a = atoms_;
  for (auto& x : a) x.mass *= factor;
  return CircleMeasure(std::move(a), lebesgue_ * factor);
}

MeasureTuple::MeasureTuple(std::vector<CircleMeasure> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("a measure tuple needs at least one entry");
  }
}

double poisson_integral(const CircleMeasure& mu, std::complex<double> z) {
  require_open_disc(z, "poisson_integral");
  const double one_minus = 1.0 - std::norm(z);
  double p = mu.lebesgue_mass();
  for (const auto& a : mu.atoms()) {
    p += a.mass * one_minus / std::norm(z - a.point());
  }
  return p;
}

double v_mu(const CircleMeasure& mu, std::complex<double> w) {
  require_open_disc(w, "v_mu");
  double v = mu.lebesgue_mass() / (1.0 - std::norm(w));
  for (const auto& a : mu.atoms()) {
    v += a.mass / std::norm(1.0 - a.point() * std::conj(w));
  }
  return v;
}

}  // namespace dirikit
