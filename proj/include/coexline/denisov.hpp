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

#ifndef COEXLINE_DENISOV_HPP
#define COEXLINE_DENISOV_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstring>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "coexline/error.hpp"
#include "coexline/model.hpp"
#include "coexline/rng.hpp"
#include "coexline/walks.hpp"

namespace coexline {

/// Law of the first-minimum location T_n over m = 0..n.
struct MinLocationLaw {
  std::size_t n = 0;
  double a = 1.0;
  double b = 1.0;
  std::vector<double> log_weights;
  std::vector<double> pmf;
  std::vector<double> cdf;
  /// log of the normalizing constant C_{n,a,b}.
  double log_C = 0.0;
};

namespace detail {

inline double log_sum_exp(const std::vector<double>& xs) {
  const double top = *std::max_element(xs.begin(), xs.end());
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - top);
  return top + std::log(sum);
}

inline void fill_cdf(MinLocationLaw& law) {
  law.cdf.resize(law.pmf.size());
  double acc = 0.0;
  for (std::size_t m = 0; m < law.pmf.size(); ++m) {
    acc += law.pmf[m];
    law.cdf[m] = acc;
  }
  law.cdf.back() = 1.0;
}

}  // namespace detail

/// Builds a law directly from probabilities (tests, degenerate cases).
inline MinLocationLaw min_location_law_from_pmf(std::vector<double> pmf) {
  if (pmf.empty()) throw LengthError("min_location_law_from_pmf: empty pmf");
  MinLocationLaw law;
  law.n = pmf.size() - 1;
  law.log_weights.resize(pmf.size());
  std::transform(pmf.begin(), pmf.end(), law.log_weights.begin(),
                 [](double p) { return std::log(p); });
  law.pmf = std::move(pmf);
  detail::fill_cdf(law);
  return law;
}

/// P(T_n = m) proportional to (a/4) w_a^{m-1} w_b^{n-m} p^a_{m-1} p^b_{n-m}
/// for m >= 1 and to w_b^n p^b_n for m = 0. Normalized in log space.
inline MinLocationLaw tn_law(double a, double b, std::size_t n, const SurvivalTable& left,
                             const SurvivalTable& right) {
  detail::require_domain(a > 0.0 && b > 0.0, "tn_law: a and b must be positive");
  detail::require_domain(n >= 1, "tn_law: n must be at least 1");
  detail::require_domain(left.a() == a && right.a() == b,
                         "tn_law: survival tables built for different parameters");
  detail::require_domain(left.n_max() + 1 >= n && right.n_max() >= n,
                         "tn_law: survival tables too short for n");

  MinLocationLaw law;
  law.n = n;
  law.a = a;
  law.b = b;
  law.log_weights.resize(n + 1);
  const double log_wa = std::log(weight_w(a));
  const double log_wb = std::log(weight_w(b));
  law.log_weights[0] = static_cast<double>(n) * log_wb + std::log(right.survival(n));
  for (std::size_t m = 1; m <= n; ++m) {
    law.log_weights[m] = std::log(a / 4.0) + static_cast<double>(m - 1) * log_wa +
                         static_cast<double>(n - m) * log_wb + std::log(left.survival(m - 1)) +
                         std::log(right.survival(n - m));
  }
  for (double lw : law.log_weights) {
    if (!std::isfinite(lw)) {
      throw SolverError("tn_law: survival probability underflowed; n too large for these parameters");
    }
  }
  law.log_C = detail::log_sum_exp(law.log_weights);
  law.pmf.resize(n + 1);
  for (std::size_t m = 0; m <= n; ++m) law.pmf[m] = std::exp(law.log_weights[m] - law.log_C);
  detail::fill_cdf(law);
  return law;
}

/// Inverse-CDF draw from the law.
inline std::size_t sample_tn(const MinLocationLaw& law, Stream& rng) {
  const double u = rng.uniform();
  const auto it = std::upper_bound(law.cdf.begin(), law.cdf.end(), u);
  const auto m = static_cast<std::size_t>(it - law.cdf.begin());
  return std::min(m, law.n);
}

namespace detail {

inline void check_blocks(const LatticePath& left, const LatticePath& right, std::size_t n,
                         std::size_t m, const char* who) {
  if (m > n) throw LengthError(std::string(who) + ": split index exceeds n");
  const std::size_t left_len = m == 0 ? 0 : m - 1;
  if (left.steps() != left_len || right.steps() != n - m) {
    throw LengthError(std::string(who) + ": block lengths do not match (n, m)");
  }
}

/// Left block time-reversed and shifted, then a middle step, then the right block.
inline LatticePath join(const LatticePath& left, const LatticePath& right, std::size_t n,
                        std::size_t m, int middle_step) {
  if (m == 0) return right;
  std::vector<int> s(n + 1);
  const int top = left.back();
  for (std::size_t j = 0; j < m; ++j) s[j] = left[m - 1 - j] - top;
  s[m] = -top + middle_step;
  for (std::size_t j = 1; j <= n - m; ++j) s[m + j] = s[m] + right[j];
  return LatticePath(std::move(s), LatticePath::unchecked);
}

}  // namespace detail

/// S = L (.) R: time-reversed left block, a -1 step at m, then the right block.
/// m = 0 returns R.
inline LatticePath concat(const LatticePath& left, const LatticePath& right, std::size_t n,
                          std::size_t m) {
  detail::check_blocks(left, right, n, m, "concat");
  return detail::join(left, right, n, m, -1);
}

/// Primed concatenation: identical, except that step m is 0.
inline LatticePath concat_primed(const LatticePath& left, const LatticePath& right,
                                 std::size_t n, std::size_t m) {
  detail::check_blocks(left, right, n, m, "concat_primed");
  return detail::join(left, right, n, m, 0);
}

/// First minimizer of S'_j - j/2.
inline std::size_t tn_prime(const LatticePath& s_primed) {
  return detail::first_min_tilted(s_primed.values());
}

/// One exact draw from the open TASEP stationary measure, with its construction.
struct DenisovSample {
  std::size_t n = 0;
  std::size_t t_n = 0;
  LatticePath L, L_primed;
  LatticePath R, R_primed;
  LatticePath S, S_primed;
  std::size_t tau_star = 0;

  /// Occupations tau_1..tau_n, i.e. the increments of S'.
  OccupationVector occupations() const {
    std::vector<std::uint8_t> tau(n);
    for (std::size_t j = 1; j <= n; ++j) tau[j - 1] = static_cast<std::uint8_t>(S_primed.increment(j));
    return OccupationVector(std::move(tau));
  }
};

/// Throws std::logic_error naming the first violated structural property.
inline void verify_sample(const DenisovSample& s) {
  auto fail = [](const std::string& what) { throw std::logic_error("DenisovSample: " + what); };
  if (s.S.steps() != s.n || s.S_primed.steps() != s.n) fail("S or S' has the wrong length");
  const std::size_t left_len = s.t_n == 0 ? 0 : s.t_n - 1;
  if (s.L.steps() != left_len || s.L_primed.steps() != left_len) fail("left block length");
  if (s.R.steps() != s.n - s.t_n || s.R_primed.steps() != s.n - s.t_n) fail("right block length");
  for (std::size_t j = 1; j <= s.n; ++j) {
    const int d = s.S.increment(j);
    const int dp = s.S_primed.increment(j);
    if (d < -1 || d > 1) fail("increment of S outside {-1,0,1}");
    if (dp < 0 || dp > 1) fail("increment of S' outside {0,1}");
    if (dp - d < 0 || dp - d > 1) fail("increment of S' - S outside {0,1}");
  }
  if (s.t_n >= 1) {
    if (s.S.increment(s.t_n) != -1) fail("step t_n of S is not -1");
    if (s.S_primed.increment(s.t_n) != 0) fail("step t_n of S' is not 0");
  }
  const int floor_value = s.S[s.t_n];
  for (std::size_t j = 0; j <= s.n; ++j) {
    if (j < s.t_n && s.S[j] <= floor_value) fail("S reaches its minimum before t_n");
    if (j > s.t_n && s.S[j] < floor_value) fail("S goes below S_{t_n} after t_n");
  }
  if (s.tau_star != tn_prime(s.S_primed)) fail("tau_star is not the first minimizer of S' - j/2");
}

/// Process-wide cache of survival tables keyed by a; a cached table is reused
/// whenever it covers the requested number of steps.
inline std::shared_ptr<const SurvivalTable> cached_survival_table(double a, std::size_t n_max,
                                                                   const TableLimits& limits = {}) {
  static std::mutex mutex;
  static std::map<double, std::shared_ptr<const SurvivalTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[a];
  if (!slot || slot->n_max() < n_max) {
    slot = std::make_shared<const SurvivalTable>(survival_table(a, n_max, limits));
  }
  return slot;
}

/// Immutable sampler for fixed (a, b, n); share one across workers, give each
/// replica its own Stream.
class StationarySampler {
 public:
  StationarySampler(double a, double b, std::size_t n, const TableLimits& limits = {})
      : a_(a), b_(b), n_(n) {
    detail::require_domain(a > 0.0 && b > 0.0, "StationarySampler: a and b must be positive");
    detail::require_domain(n >= 1, "StationarySampler: n must be at least 1");
    left_ = cached_survival_table(a, n, limits);
    right_ = a == b ? left_ : cached_survival_table(b, n, limits);
    law_ = tn_law(a, b, n, *left_, *right_);
  }

  double a() const { return a_; }
  double b() const { return b_; }
  std::size_t n() const { return n_; }
  const MinLocationLaw& law() const { return law_; }
  const SurvivalTable& left_table() const { return *left_; }
  const SurvivalTable& right_table() const { return *right_; }

  DenisovSample operator()(Stream& rng) const {
    DenisovSample s;
    s.n = n_;
    s.t_n = sample_tn(law_, rng);
    const std::size_t m = s.t_n;
    if (m >= 1) s.L = sample_conditioned(a_, m - 1, *left_, rng);
    s.R = sample_conditioned(b_, n_ - m, *right_, rng);
    s.L_primed = couple_primed(s.L, Side::left, rng);
    s.R_primed = couple_primed(s.R, Side::right, rng);
    s.S = concat(s.L, s.R, n_, m);
    s.S_primed = concat_primed(s.L_primed, s.R_primed, n_, m);
    s.tau_star = tn_prime(s.S_primed);
#ifndef NDEBUG
    verify_sample(s);
#endif
    return s;
  }

 private:
  double a_;
  double b_;
  std::size_t n_;
  std::shared_ptr<const SurvivalTable> left_;
  std::shared_ptr<const SurvivalTable> right_;
  MinLocationLaw law_;
};

/// Convenience one-shot draw; tables come from the shared cache.
inline DenisovSample sample_stationary(double a, double b, std::size_t n, Stream& rng) {
  return StationarySampler(a, b, n)(rng);
}

}  // namespace coexline

#endif  // COEXLINE_DENISOV_HPP
