// Copyright 2026 The coexline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COEXLINE_MODEL_HPP
#define COEXLINE_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coexline/error.hpp"

namespace coexline {

/// Boundary and bulk rates of the open ASEP. Only gamma = delta = q = 0
/// (the open TASEP) is ever sampled; the extra rates feed kappa_pm.
struct BoundaryRates {
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 0.0;
  double delta = 0.0;
  double q = 0.0;
};

/// Left/right boundary parameters (a, b) with alpha = 1/(1+a), beta = 1/(1+b).
struct RepParams {
  double a = 1.0;
  double b = 1.0;

  double alpha() const { return 1.0 / (1.0 + a); }
  double beta() const { return 1.0 / (1.0 + b); }
  bool on_coexistence_line() const { return a == b && a > 1.0; }
};

enum class Sign { plus, minus };

/// kappa_{+/-}(x, y) = (1 - q - x + y +/- sqrt((1 - q - x + y)^2 + 4xy)) / (2x).
inline double kappa_pm(double x, double y, double q, Sign sign) {
  detail::require_domain(x > 0.0, "kappa_pm: x must be positive");
  detail::require_domain(y >= 0.0, "kappa_pm: y must be non-negative");
  detail::require_domain(q >= 0.0 && q < 1.0, "kappa_pm: q must lie in [0, 1)");
  const double c = 1.0 - q - x + y;
  const double root = std::sqrt(c * c + 4.0 * x * y);
  return (sign == Sign::plus ? c + root : c - root) / (2.0 * x);
}

inline RepParams rep_from_rates(const BoundaryRates& rates) {
  detail::require_domain(rates.alpha > 0.0 && rates.alpha < 1.0,
                         "rep_from_rates: alpha must lie in (0, 1)");
  detail::require_domain(rates.beta > 0.0 && rates.beta < 1.0,
                         "rep_from_rates: beta must lie in (0, 1)");
  detail::require_domain(rates.gamma == 0.0 && rates.delta == 0.0 && rates.q == 0.0,
                         "rep_from_rates: only the open TASEP (gamma = delta = q = 0) is supported");
  return {(1.0 - rates.alpha) / rates.alpha, (1.0 - rates.beta) / rates.beta};
}

/// Particle configuration tau_1..tau_n on sites 1..n.
class OccupationVector {
 public:
  OccupationVector() = default;

  explicit OccupationVector(std::vector<std::uint8_t> tau) : tau_(std::move(tau)) {
    if (tau_.empty()) throw LengthError("OccupationVector: n must be at least 1");
    for (auto v : tau_) {
      if (v > 1) throw DomainError("OccupationVector: entries must be 0 or 1");
    }
  }

  OccupationVector(std::initializer_list<int> tau)
      : OccupationVector(std::vector<std::uint8_t>(tau.begin(), tau.end())) {}

  std::size_t size() const { return tau_.size(); }
  std::uint8_t operator[](std::size_t site) const { return tau_[site]; }
  std::span<const std::uint8_t> values() const { return tau_; }

  friend bool operator==(const OccupationVector&, const OccupationVector&) = default;

 private:
  std::vector<std::uint8_t> tau_;
};

/// s_j = tau_1 + ... + tau_j.
inline long height(const OccupationVector& tau, std::size_t j) {
  if (j > tau.size()) {
    throw std::out_of_range("height: index " + std::to_string(j) + " exceeds n = " +
                            std::to_string(tau.size()));
  }
  long s = 0;
  for (std::size_t k = 0; k < j; ++k) s += tau[k];
  return s;
}

namespace detail {

/// Smallest j minimizing 2 * s[j] - j over a path s[0..n]. Integer-exact.
template <class Values>
std::size_t first_min_tilted(const Values& s) {
  std::size_t best = 0;
  long best_value = 2L * static_cast<long>(s[0]);
  for (std::size_t j = 1; j < std::size(s); ++j) {
    const long v = 2L * static_cast<long>(s[j]) - static_cast<long>(j);
    if (v < best_value) {
      best_value = v;
      best = j;
    }
  }
  return best;
}

}  // namespace detail

/// First minimizer of s_j - j/2 over j = 0..n (the empirical shock location).
inline std::size_t tau_star(const OccupationVector& tau) {
  std::size_t best = 0;
  long best_value = 0;
  long s = 0;
  for (std::size_t j = 1; j <= tau.size(); ++j) {
    s += tau[j - 1];
    const long v = 2 * s - static_cast<long>(j);
    if (v < best_value) {
      best_value = v;
      best = j;
    }
  }
  return best;
}

}  // namespace coexline

#endif  // COEXLINE_MODEL_HPP
