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

#ifndef COEXLINE_WALKS_HPP
#define COEXLINE_WALKS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "coexline/error.hpp"
#include "coexline/rng.hpp"

namespace coexline {

/// Nearest-neighbour path (s_0 = 0, s_1, ..., s_m) with increments in {-1, 0, 1}.
class LatticePath {
 public:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};

  LatticePath() : values_{0} {}

  explicit LatticePath(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty() || values_.front() != 0) {
      throw DomainError("LatticePath: a path must start at 0");
    }
    for (std::size_t j = 1; j < values_.size(); ++j) {
      if (std::abs(values_[j] - values_[j - 1]) > 1) {
        throw DomainError("LatticePath: increments must lie in {-1, 0, 1}");
      }
    }
  }

  LatticePath(std::vector<int> values, unchecked_t) : values_(std::move(values)) {}

  static LatticePath from_increments(std::span<const int> increments) {
    std::vector<int> values(increments.size() + 1, 0);
    for (std::size_t j = 0; j < increments.size(); ++j) {
      values[j + 1] = values[j] + increments[j];
    }
    return LatticePath(std::move(values));
  }
  static LatticePath from_increments(std::initializer_list<int> increments) {
    return from_increments(std::span<const int>(increments.begin(), increments.size()));
  }

  std::size_t steps() const { return values_.size() - 1; }
  int operator[](std::size_t j) const { return values_[j]; }
  int back() const { return values_.back(); }
  /// Increment number j (1-based): s_j - s_{j-1}.
  int increment(std::size_t j) const { return values_[j] - values_[j - 1]; }
  std::span<const int> values() const { return values_; }

  std::vector<int> increments() const {
    std::vector<int> out(steps());
    for (std::size_t j = 1; j < values_.size(); ++j) out[j - 1] = values_[j] - values_[j - 1];
    return out;
  }

  int min() const { return *std::min_element(values_.begin(), values_.end()); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<int> values_;
};

/// Step law nu_a on {-1, 0, 1}: weights a, 2, 1/a over a + 1/a + 2.
struct StepLaw {
  double a = 1.0;
  double p_up = 0.25;
  double p_zero = 0.5;
  double p_down = 0.25;

  double mean() const { return (a - 1.0) / (a + 1.0); }
  double operator()(int step) const { return step > 0 ? p_up : (step == 0 ? p_zero : p_down); }

  int draw(Stream& rng) const {
    const double u = rng.uniform();
    if (u < p_down) return -1;
    if (u < p_down + p_zero) return 0;
    return 1;
  }
};

inline StepLaw step_law(double a) {
  detail::require_domain(a > 0.0, "step_law: a must be positive");
  const double d = (a + 1.0) * (a + 1.0);
  return {a, a * a / d, 2.0 * a / d, 1.0 / d};
}

/// w_a = a/4 + 1/(4a) + 1/2 = (a + 1)^2 / (4a).
inline double weight_w(double a) {
  detail::require_domain(a > 0.0, "weight_w: a must be positive");
  return a / 4.0 + 1.0 / (4.0 * a) + 0.5;
}

struct TableLimits {
  std::size_t max_steps = 100000;
  std::size_t max_entries = std::size_t{1} << 27;
};

/// q_r(h): probability that a nu_a walk started at height h stays >= 0 for r
/// steps. Rows are stored for h < min(r, height_cap); everything above reads
/// as 1. For a > 1 the cap is the height beyond which 1 - q_r(h) <= a^{-2(h+1)}
/// is below 2^-64, so the truncation is invisible in double precision.
class SurvivalTable {
 public:
  double a() const { return law_.a; }
  std::size_t n_max() const { return n_max_; }
  std::size_t height_cap() const { return cap_; }
  const StepLaw& law() const { return law_; }

  double operator()(std::size_t r, long h) const {
    if (h < 0) return 0.0;
    const auto uh = static_cast<std::size_t>(h);
    if (uh >= r || uh >= cap_) return 1.0;
    return data_[offset_[r] + uh];
  }

  /// p_l = q_l(0).
  double survival(std::size_t steps) const { return (*this)(steps, 0); }

  /// Debug dump, one row per r: q_r(0), ..., q_r(r-1).
  void write_csv(std::ostream& os) const {
    const auto old = os.precision(17);
    for (std::size_t r = 1; r <= n_max_; ++r) {
      for (std::size_t h = 0; h < r; ++h) {
        if (h) os << ',';
        os << (*this)(r, static_cast<long>(h));
      }
      os << '\n';
    }
    os.precision(old);
  }

  friend SurvivalTable survival_table(double a, std::size_t n_max, const TableLimits& limits);

 private:
  StepLaw law_;
  std::size_t n_max_ = 0;
  std::size_t cap_ = 0;
  std::vector<std::size_t> offset_;
  std::vector<double> data_;
};

inline std::size_t survival_height_cap(double a) {
  if (a <= 1.0) return static_cast<std::size_t>(-1);
  // smallest H with a^{-2(H+1)} <= 2^-64
  const double h = std::ceil(32.0 * std::log(2.0) / std::log(a));
  return static_cast<std::size_t>(std::max(1.0, h));
}

inline SurvivalTable survival_table(double a, std::size_t n_max,
                                    const TableLimits& limits = {}) {
  SurvivalTable t;
  t.law_ = step_law(a);
  if (n_max > limits.max_steps) {
    throw ResourceError("survival_table: n_max = " + std::to_string(n_max) +
                        " exceeds the cap of " + std::to_string(limits.max_steps));
  }
  t.n_max_ = n_max;
  t.cap_ = survival_height_cap(a);

  t.offset_.resize(n_max + 2);
  std::size_t total = 0;
  for (std::size_t r = 0; r <= n_max; ++r) {
    t.offset_[r] = total;
    total += std::min(r, t.cap_);
  }
  t.offset_[n_max + 1] = total;
  if (total > limits.max_entries) {
    throw ResourceError("survival_table: " + std::to_string(total) +
                        " entries exceed the cap of " + std::to_string(limits.max_entries));
  }
  t.data_.resize(total);

  const StepLaw& nu = t.law_;
  for (std::size_t r = 1; r <= n_max; ++r) {
    const std::size_t width = std::min(r, t.cap_);
    double* row = t.data_.data() + t.offset_[r];
    for (std::size_t h = 0; h < width; ++h) {
      const long lh = static_cast<long>(h);
      row[h] = nu.p_down * t(r - 1, lh - 1) + nu.p_zero * t(r - 1, lh) +
               nu.p_up * t(r - 1, lh + 1);
    }
  }
  return t;
}

/// Transition kernel of the walk conditioned to survive: at height h with r
/// steps left, returns (P(-1), P(0), P(+1)) = nu(w) q_{r-1}(h+w) / q_r(h).
inline std::array<double, 3> conditioned_step_probabilities(const SurvivalTable& table, long h,
                                                            std::size_t r) {
  const double qr = table(r, h);
  const StepLaw& nu = table.law();
  return {nu.p_down * table(r - 1, h - 1) / qr, nu.p_zero * table(r - 1, h) / qr,
          nu.p_up * table(r - 1, h + 1) / qr};
}

/// Exact draw of an m-step nu_a walk conditioned to stay >= 0 (h-transform).
inline LatticePath sample_conditioned(double a, std::size_t m, const SurvivalTable& table,
                                      Stream& rng) {
  detail::require_domain(table.a() == a, "sample_conditioned: table built for a different a");
  detail::require_domain(m <= table.n_max(), "sample_conditioned: m exceeds the table's n_max");
  const StepLaw& nu = table.law();
  std::vector<int> values;
  values.reserve(m + 1);
  values.push_back(0);
  long h = 0;
  for (std::size_t r = m; r >= 1; --r) {
    const double u = rng.uniform() * table(r, h);
    const double down = h > 0 ? nu.p_down * table(r - 1, h - 1) : 0.0;
    if (u < down) {
      --h;
    } else if (u >= down + nu.p_zero * table(r - 1, h)) {
      ++h;
    }
    values.push_back(static_cast<int>(h));
  }
  return LatticePath(std::move(values), LatticePath::unchecked);
}

/// Same law as sample_conditioned, by restarting unconditioned walks that hit -1.
/// Only offered for a > 1, where the acceptance probability stays above 1 - 1/a^2.
inline LatticePath sample_conditioned_rejection(double a, std::size_t m, Stream& rng,
                                                std::size_t* attempts = nullptr) {
  detail::require_domain(a > 1.0, "sample_conditioned_rejection: requires a > 1");
  const StepLaw nu = step_law(a);
  std::vector<int> values(m + 1, 0);
  std::size_t tries = 0;
  for (;;) {
    ++tries;
    int h = 0;
    bool alive = true;
    for (std::size_t j = 1; j <= m; ++j) {
      h += nu.draw(rng);
      if (h < 0) {
        alive = false;
        break;
      }
      values[j] = h;
    }
    if (alive) break;
  }
  if (attempts) *attempts = tries;
  return LatticePath(std::move(values), LatticePath::unchecked);
}

enum class Side { left, right };

/// Primed companion of a left or right block. Right: +1 -> 1, -1 -> 0,
/// 0 -> coin. Left: +1 -> 0, -1 -> -1, 0 -> -coin.
inline LatticePath couple_primed(const LatticePath& path, Side side, Stream& rng) {
  std::vector<int> values(path.steps() + 1, 0);
  for (std::size_t j = 1; j <= path.steps(); ++j) {
    const int d = path.increment(j);
    int dp = 0;
    if (side == Side::right) {
      dp = d == 1 ? 1 : (d == -1 ? 0 : rng.coin());
    } else {
      dp = d == 1 ? 0 : (d == -1 ? -1 : -rng.coin());
    }
    values[j] = values[j - 1] + dp;
  }
  return LatticePath(std::move(values), LatticePath::unchecked);
}

}  // namespace coexline

#endif  // COEXLINE_WALKS_HPP
