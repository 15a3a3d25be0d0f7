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

#ifndef COEXLINE_STATS_HPP
#define COEXLINE_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coexline/denisov.hpp"
#include "coexline/error.hpp"
#include "coexline/model.hpp"
#include "coexline/parallel.hpp"
#include "coexline/rng.hpp"

namespace coexline {

/// Default observation grid: 0.1, 0.2, ..., 1.0.
inline std::vector<double> default_time_grid() {
  std::vector<double> t;
  for (int k = 1; k <= 10; ++k) t.push_back(k / 10.0);
  return t;
}

/// floor(n t) with a small guard so that e.g. 0.29 * 100 gives 29.
inline std::size_t floor_index(std::size_t n, double t) {
  detail::require_domain(t >= 0.0 && t <= 1.0, "time must lie in [0, 1]");
  const double x = std::floor(static_cast<double>(n) * t + 1e-9);
  return std::min(n, static_cast<std::size_t>(x));
}

struct FluctuationRecord {
  double u_hat = 0.0;
  std::vector<double> W;
};

/// sigma_a = sqrt(a)/(1+a) together with the grid it is used on.
struct LimitReference {
  double a = 3.0;
  double sigma_a = std::sqrt(3.0) / 4.0;
  std::vector<double> times;
};

inline LimitReference limit_reference(double a, std::vector<double> times) {
  detail::require_domain(a > 1.0, "limit_reference: requires a > 1");
  return {a, std::sqrt(a) / (1.0 + a), std::move(times)};
}

/// Centered height at site k: h(k) - (k ^ tau*)/(1+a) - (k - tau*)_+ a/(1+a).
inline double centered_height(const LatticePath& s_primed, std::size_t k, std::size_t tau_star,
                              double a) {
  const double before = static_cast<double>(std::min(k, tau_star));
  const double after = k > tau_star ? static_cast<double>(k - tau_star) : 0.0;
  return static_cast<double>(s_primed[k]) - before / (1.0 + a) - after * a / (1.0 + a);
}

inline FluctuationRecord fluctuation_field(const DenisovSample& sample, double a,
                                           std::span<const double> times) {
  FluctuationRecord rec;
  const double root_n = std::sqrt(static_cast<double>(sample.n));
  rec.u_hat = static_cast<double>(sample.tau_star) / static_cast<double>(sample.n);
  rec.W.reserve(times.size());
  for (double t : times) {
    const std::size_t k = floor_index(sample.n, t);
    rec.W.push_back(centered_height(sample.S_primed, k, sample.tau_star, a) / root_n);
  }
  return rec;
}

/// h_n(floor(nt)) / n.
inline std::vector<double> first_order_profile(const DenisovSample& sample,
                                               std::span<const double> times) {
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    out.push_back(static_cast<double>(sample.S_primed[floor_index(sample.n, t)]) /
                  static_cast<double>(sample.n));
  }
  return out;
}

/// sup over j of |h_n(j)/n - ((t ^ u)/(1+a) + (t - u)_+ a/(1+a))| at t = j/n, u = tau*/n.
inline double lln_sup_gap(const DenisovSample& sample, double a) {
  double worst = 0.0;
  const auto n = static_cast<double>(sample.n);
  for (std::size_t j = 0; j <= sample.n; ++j) {
    worst = std::max(worst, std::abs(centered_height(sample.S_primed, j, sample.tau_star, a)) / n);
  }
  return worst;
}

struct Uniform01 {
  double cdf(double x) const { return std::clamp(x, 0.0, 1.0); }
};

struct Normal {
  double sigma = 1.0;
  double cdf(double x) const {
    if (sigma <= 0.0) return x < 0.0 ? 0.0 : 1.0;
    return 0.5 * std::erfc(-x / (sigma * std::sqrt(2.0)));
  }
};

using ReferenceCdf = std::variant<Uniform01, Normal>;

/// Kolmogorov-Smirnov distance between the empirical CDF of the samples and
/// the reference CDF.
inline double ks_statistic(std::vector<double> samples, const ReferenceCdf& reference) {
  if (samples.empty()) throw LengthError("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const auto count = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = std::visit([&](const auto& ref) { return ref.cdf(samples[i]); }, reference);
    d = std::max({d, static_cast<double>(i + 1) / count - f, f - static_cast<double>(i) / count});
  }
  return d;
}

/// Asymptotic Kolmogorov tail P(sqrt(N) D > sqrt(N) d), series cut at 100 terms.
inline double ks_pvalue(double statistic, std::size_t count) {
  const double lambda = std::sqrt(static_cast<double>(count)) * statistic;
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

/// Standard deviation of the limit marginal at time t: sigma_a sqrt(t).
inline double limit_marginal_sigma(double a, double t) {
  detail::require_domain(a > 1.0, "limit_marginal_sigma: requires a > 1");
  detail::require_domain(t >= 0.0 && t <= 1.0, "limit_marginal_sigma: t must lie in [0, 1]");
  return std::sqrt(a) / (1.0 + a) * std::sqrt(t);
}

/// Covariance of the limit field: sigma_a^2 min(s, t), whatever the value of U.
inline double limit_covariance(double a, double s, double t) {
  detail::require_domain(a > 1.0, "limit_covariance: requires a > 1");
  const double sigma = std::sqrt(a) / (1.0 + a);
  return sigma * sigma * std::min(s, t);
}

inline double sample_mean(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

inline double sample_covariance(std::span<const double> x, std::span<const double> y) {
  const double mx = sample_mean(x), my = sample_mean(y);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += (x[i] - mx) * (y[i] - my);
  return acc / static_cast<double>(x.size() - 1);
}

inline double sample_variance(std::span<const double> x) { return sample_covariance(x, x); }

inline double sample_correlation(std::span<const double> x, std::span<const double> y) {
  return sample_covariance(x, y) / std::sqrt(sample_variance(x) * sample_variance(y));
}

/// Linear-interpolation quantile (type 7).
inline double quantile(std::vector<double> x, double p) {
  if (x.empty()) throw LengthError("quantile: no samples");
  std::sort(x.begin(), x.end());
  const double pos = p * static_cast<double>(x.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, x.size() - 1);
  return x[lo] + (pos - static_cast<double>(lo)) * (x[hi] - x[lo]);
}

struct CoexistenceConfig {
  double a = 3.0;
  std::size_t n = 2000;
  std::size_t replicas = 100000;
  std::vector<double> times = default_time_grid();
  std::uint64_t seed = 42;
  std::size_t workers = 1;
  /// Sizes for the |T_n' - T_n| ladder (empty: skip), replicas per size.
  std::vector<std::size_t> ladder;
  std::size_t ladder_replicas = 10000;
};

struct TimeStatistics {
  double t = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double limit_variance = 0.0;
  double ks_normal = 0.0;
  double corr_with_u = 0.0;
};

struct LadderRung {
  std::size_t n = 0;
  double median_gap = 0.0;
  double q90_gap = 0.0;
};

struct CoexistenceReport {
  CoexistenceConfig config;
  std::vector<FluctuationRecord> records;
  double ks_uniform = 0.0;
  std::vector<TimeStatistics> per_time;
  /// Row-major |times| x |times|.
  std::vector<double> covariance;
  std::vector<double> limit_cov;
  double lln_fraction = 0.0;
  std::size_t tau_star_mismatches = 0;
  std::vector<LadderRung> ladder;
};

/// Quantiles of |T_n' - T_n| over independent draws at size n.
inline LadderRung tightness_rung(double a, std::size_t n, std::size_t replicas,
                                 std::uint64_t seed, std::size_t workers) {
  const StationarySampler sampler(a, a, n);
  const std::uint64_t rung_seed = mix64(seed, (std::uint64_t{1} << 40) + n);
  const auto gaps = run_replicas(replicas, workers, [&](std::size_t i) {
    Stream rng = Stream::for_replica(rung_seed, i);
    const DenisovSample s = sampler(rng);
    return std::abs(static_cast<double>(s.tau_star) - static_cast<double>(s.t_n));
  });
  return {n, quantile(gaps, 0.5), quantile(gaps, 0.9)};
}

/// Runs the coexistence-line Monte Carlo and reduces it to the statistics the
/// limit theorems predict.
inline CoexistenceReport coexistence_report(const CoexistenceConfig& config) {
  detail::require_domain(config.a > 1.0, "coexistence_report: requires a > 1");
  detail::require_domain(config.replicas >= 2, "coexistence_report: need at least 2 replicas");
  for (double t : config.times) detail::require_domain(t >= 0.0 && t <= 1.0, "times must lie in [0, 1]");

  struct Draw {
    FluctuationRecord record;
    double lln_gap = 0.0;
    bool mismatch = false;
  };
  const StationarySampler sampler(config.a, config.a, config.n);
  const auto draws = run_replicas(config.replicas, config.workers, [&](std::size_t i) {
    Stream rng = Stream::for_replica(config.seed, i);
    const DenisovSample s = sampler(rng);
    Draw d;
    d.record = fluctuation_field(s, config.a, config.times);
    d.lln_gap = lln_sup_gap(s, config.a);
    d.mismatch = tau_star(s.occupations()) != s.tau_star;
    return d;
  });

  CoexistenceReport rep;
  rep.config = config;
  const std::size_t count = draws.size();
  const std::size_t k = config.times.size();
  std::vector<double> u(count);
  std::vector<std::vector<double>> w(k, std::vector<double>(count));
  std::size_t lln_ok = 0;
  rep.records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    u[i] = draws[i].record.u_hat;
    for (std::size_t j = 0; j < k; ++j) w[j][i] = draws[i].record.W[j];
    if (draws[i].lln_gap <= 0.05) ++lln_ok;
    if (draws[i].mismatch) ++rep.tau_star_mismatches;
    rep.records.push_back(draws[i].record);
  }
  rep.lln_fraction = static_cast<double>(lln_ok) / static_cast<double>(count);
  rep.ks_uniform = ks_statistic(u, Uniform01{});
  for (std::size_t j = 0; j < k; ++j) {
    const double t = config.times[j];
    TimeStatistics ts;
    ts.t = t;
    ts.mean = sample_mean(w[j]);
    ts.variance = sample_variance(w[j]);
    ts.limit_variance = limit_covariance(config.a, t, t);
    ts.ks_normal = ks_statistic(w[j], Normal{limit_marginal_sigma(config.a, t)});
    ts.corr_with_u = t > 0.0 ? sample_correlation(u, w[j]) : 0.0;
    rep.per_time.push_back(ts);
  }
  rep.covariance.resize(k * k);
  rep.limit_cov.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      rep.covariance[i * k + j] = sample_covariance(w[i], w[j]);
      rep.limit_cov[i * k + j] = limit_covariance(config.a, config.times[i], config.times[j]);
    }
  }
  for (std::size_t n : config.ladder) {
    rep.ladder.push_back(tightness_rung(config.a, n, config.ladder_replicas, config.seed, config.workers));
  }
  return rep;
}

}  // namespace coexline

#endif  // COEXLINE_STATS_HPP
