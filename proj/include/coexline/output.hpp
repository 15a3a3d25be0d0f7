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

#ifndef COEXLINE_OUTPUT_HPP
#define COEXLINE_OUTPUT_HPP

// File formats written by the command-line tool. CSV numbers use 12
// significant digits; configurations are 0/1 strings with site 1 leftmost.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coexline/denisov.hpp"
#include "coexline/dynamics.hpp"
#include "coexline/parallel.hpp"
#include "coexline/stats.hpp"
#include "coexline/verify.hpp"

namespace coexline {

using Json = nlohmann::ordered_json;

inline Json to_json(const Check& c) {
  return Json{{"check", c.check},   {"n", c.n},         {"a", c.a},
              {"b", c.b},           {"metric", c.metric}, {"value", c.value},
              {"tolerance", c.tolerance}, {"pass", c.pass}};
}

inline Json summary_json(const Check& c) {
  return Json{{"test", c.check}, {"statistic", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}};
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

inline std::string occupation_string(const DenisovSample& s) {
  std::string bits(s.n, '0');
  for (std::size_t j = 1; j <= s.n; ++j) bits[j - 1] = s.S_primed.increment(j) ? '1' : '0';
  return bits;
}

/// Header: n,seed,replica,T_n,tau_star,occupations
inline void write_samples_csv(std::ostream& os, double a, double b, std::size_t n,
                              std::size_t replicas, std::uint64_t seed, std::size_t workers) {
  const StationarySampler sampler(a, b, n);
  const auto rows = run_replicas(replicas, workers, [&](std::size_t i) {
    Stream rng = Stream::for_replica(seed, i);
    const DenisovSample s = sampler(rng);
    std::ostringstream line;
    line << n << ',' << seed << ',' << i << ',' << s.t_n << ',' << s.tau_star << ','
         << occupation_string(s) << '\n';
    return line.str();
  });
  os << "n,seed,replica,T_n,tau_star,occupations\n";
  for (const auto& r : rows) os << r;
}

inline void write_samples_json(std::ostream& os, double a, double b, std::size_t n,
                               std::size_t replicas, std::uint64_t seed, std::size_t workers) {
  const StationarySampler sampler(a, b, n);
  const auto rows = run_replicas(replicas, workers, [&](std::size_t i) {
    Stream rng = Stream::for_replica(seed, i);
    const DenisovSample s = sampler(rng);
    return Json{{"n", n}, {"seed", seed}, {"replica", i}, {"T_n", s.t_n},
                {"tau_star", s.tau_star}, {"occupations", occupation_string(s)}};
  });
  Json arr = Json::array();
  for (auto& r : rows) arr.push_back(r);
  os << arr.dump(2) << '\n';
}

inline std::string time_label(double t) {
  std::ostringstream s;
  s << t;
  return s.str();
}

/// Header: u_hat,W_<t1>,...,W_<tk>
inline void write_fluct_csv(std::ostream& os, const CoexistenceReport& rep) {
  os << "u_hat";
  for (double t : rep.config.times) os << ",W_" << time_label(t);
  os << '\n' << std::setprecision(12);
  for (const auto& r : rep.records) {
    os << r.u_hat;
    for (double w : r.W) os << ',' << w;
    os << '\n';
  }
}

/// Pass/fail checks of a coexistence run against the limit laws.
inline std::vector<Check> fluct_checks(const CoexistenceReport& rep) {
  const auto& c = rep.config;
  std::vector<Check> out;
  auto add = [&](std::string name, double value, double tol) {
    out.push_back(make_check(std::move(name), c.n, c.a, c.a, "statistic", value, tol));
  };
  add("ks_tau_star_over_n_uniform", rep.ks_uniform, 0.02);
  const std::size_t k = c.times.size();
  for (const auto& ts : rep.per_time) {
    if (ts.t <= 0.0) continue;
    const std::string at = "_t" + time_label(ts.t);
    add("abs_mean_W" + at, std::abs(ts.mean), 0.01);
    add("rel_var_error_W" + at, std::abs(ts.variance / ts.limit_variance - 1.0), 0.05);
    add("ks_W_normal" + at, ts.ks_normal, 0.02);
    add("abs_corr_u_W" + at, std::abs(ts.corr_with_u), 0.03);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      add("abs_cov_error_W_t" + time_label(c.times[i]) + "_t" + time_label(c.times[j]),
          std::abs(rep.covariance[i * k + j] - rep.limit_cov[i * k + j]), 0.01);
    }
  }
  out.push_back({"lln_sup_gap_fraction", c.n, c.a, c.a, "fraction_within_0.05", rep.lln_fraction,
                 0.95, rep.lln_fraction >= 0.95});
  add("tau_star_recomputation_mismatches", static_cast<double>(rep.tau_star_mismatches), 0.0);
  if (rep.ladder.size() >= 2) {
    const auto& first = rep.ladder.front();
    const auto& last = rep.ladder.back();
    out.push_back({"tightness_median_gap", last.n, c.a, c.a, "median_gap_largest_n",
                   last.median_gap, first.median_gap + 2.0,
                   last.median_gap <= first.median_gap + 2.0});
  }
  return out;
}

inline Json fluct_summary(const CoexistenceReport& rep) {
  Json j;
  j["n"] = rep.config.n;
  j["a"] = rep.config.a;
  j["replicas"] = rep.config.replicas;
  j["seed"] = rep.config.seed;
  Json ladder = Json::array();
  for (const auto& r : rep.ladder) {
    ladder.push_back({{"n", r.n}, {"median_gap", r.median_gap}, {"q90_gap", r.q90_gap}});
  }
  j["ladder"] = ladder;
  Json tests = Json::array();
  for (const auto& c : fluct_checks(rep)) tests.push_back(summary_json(c));
  j["tests"] = tests;
  return j;
}

/// Header: site,mean,stderr
inline void write_dynamics_csv(std::ostream& os, const TimeAverageReport& rep) {
  os << "site,mean,stderr\n" << std::setprecision(12);
  for (std::size_t k = 0; k < rep.mean_occupation.size(); ++k) {
    os << k + 1 << ',' << rep.mean_occupation[k] << ',' << rep.standard_errors[k] << '\n';
  }
}

}  // namespace coexline

#endif  // COEXLINE_OUTPUT_HPP
