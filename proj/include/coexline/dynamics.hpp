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

#ifndef COEXLINE_DYNAMICS_HPP
#define COEXLINE_DYNAMICS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coexline/error.hpp"
#include "coexline/rng.hpp"

namespace coexline {

struct SimConfig {
  std::size_t n = 1;
  double alpha = 0.5;
  double beta = 0.5;
  double horizon = 1e5;
  /// Defaults to horizon / 10.
  std::optional<double> burn_in;
  std::size_t batches = 32;
  std::uint64_t seed = 0;

  double effective_burn_in() const { return burn_in.value_or(horizon / 10.0); }
};

struct TimeAverageReport {
  std::vector<double> mean_occupation;
  std::vector<double> standard_errors;
  double total_sim_time = 0.0;
  double measured_time = 0.0;
  std::uint64_t event_count = 0;
  std::uint64_t illegal_events = 0;
};

enum class EventType { entry, exit, hop };

/// Called as (time, type, site) for every event; site is 1-based, and for a
/// hop it is the site the particle leaves.
using EventTrace = std::function<void(double, EventType, std::size_t)>;

namespace detail {

inline void validate(const SimConfig& c) {
  require_domain(c.n >= 1, "simulate: n must be at least 1");
  require_domain(c.alpha >= 0.0 && c.beta >= 0.0, "simulate: rates must be non-negative");
  const double burn = c.effective_burn_in();
  require_domain(burn >= 0.0 && c.horizon > burn, "simulate: need horizon > burn_in >= 0");
  require_domain(c.batches >= 20, "simulate: at least 20 batches are required");
}

}  // namespace detail

/// Direct Gillespie simulation of the open TASEP started from the empty
/// lattice; returns time-weighted occupations over (burn_in, horizon] with
/// batch-means standard errors.
inline TimeAverageReport simulate(const SimConfig& config, Stream& rng,
                                  const EventTrace& trace = {}) {
  detail::validate(config);
  const std::size_t n = config.n;
  const double start = config.effective_burn_in();
  const double stop = config.horizon;
  const std::size_t batches = config.batches;
  const double width = (stop - start) / static_cast<double>(batches);

  std::vector<std::uint8_t> tau(n, 0);
  std::vector<double> last_change(n, 0.0);
  std::vector<double> occupied_time(batches * n, 0.0);

  // Bonds (k, k+1) with a particle at k and a hole at k+1, kept as a dense set.
  std::vector<std::size_t> bonds;
  std::vector<long> bond_slot(n, -1);
  auto refresh_bond = [&](long k) {
    if (k < 0 || static_cast<std::size_t>(k) + 1 >= n) return;
    const auto uk = static_cast<std::size_t>(k);
    const bool active = tau[uk] == 1 && tau[uk + 1] == 0;
    if (active && bond_slot[uk] < 0) {
      bond_slot[uk] = static_cast<long>(bonds.size());
      bonds.push_back(uk);
    } else if (!active && bond_slot[uk] >= 0) {
      const auto slot = static_cast<std::size_t>(bond_slot[uk]);
      bonds[slot] = bonds.back();
      bond_slot[bonds[slot]] = static_cast<long>(slot);
      bonds.pop_back();
      bond_slot[uk] = -1;
    }
  };

  // Adds tau[k] * |[from, to] within (start, stop]| to the right batches.
  auto integrate = [&](std::size_t k, double from, double to) {
    if (tau[k] == 0) return;
    from = std::max(from, start);
    to = std::min(to, stop);
    while (from < to) {
      auto b = static_cast<std::size_t>((from - start) / width);
      if (b >= batches) b = batches - 1;
      const double edge = b + 1 == batches ? stop : start + width * static_cast<double>(b + 1);
      const double end = std::min(to, edge);
      occupied_time[b * n + k] += end - from;
      from = end;
    }
  };

  auto flip = [&](std::size_t k, double t) {
    integrate(k, last_change[k], t);
    last_change[k] = t;
    tau[k] ^= 1U;
  };

  TimeAverageReport report;
  double t = 0.0;
  for (;;) {
    const double entry = tau[0] == 0 ? config.alpha : 0.0;
    const double exit = tau[n - 1] == 1 ? config.beta : 0.0;
    const double total = entry + exit + static_cast<double>(bonds.size());
    if (total <= 0.0) break;
    t += rng.exponential(total);
    if (t > stop) break;
    const double u = rng.uniform() * total;
    ++report.event_count;
    if (u < entry) {
      if (tau[0] != 0) ++report.illegal_events;
      flip(0, t);
      refresh_bond(0);
      if (trace) trace(t, EventType::entry, 1);
    } else if (u < entry + exit) {
      if (tau[n - 1] != 1) ++report.illegal_events;
      flip(n - 1, t);
      refresh_bond(static_cast<long>(n) - 2);
      if (trace) trace(t, EventType::exit, n);
    } else {
      auto idx = static_cast<std::size_t>(u - entry - exit);
      if (idx >= bonds.size()) idx = bonds.size() - 1;
      const std::size_t k = bonds[idx];
      if (tau[k] != 1 || tau[k + 1] != 0) ++report.illegal_events;
      flip(k, t);
      flip(k + 1, t);
      refresh_bond(static_cast<long>(k) - 1);
      refresh_bond(static_cast<long>(k));
      refresh_bond(static_cast<long>(k) + 1);
      if (trace) trace(t, EventType::hop, k + 1);
    }
  }
  for (std::size_t k = 0; k < n; ++k) integrate(k, last_change[k], stop);

  report.total_sim_time = stop;
  report.measured_time = stop - start;
  report.mean_occupation.assign(n, 0.0);
  report.standard_errors.assign(n, 0.0);
  const auto nb = static_cast<double>(batches);
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t b = 0; b < batches; ++b) {
      const double m = occupied_time[b * n + k] / width;
      sum += m;
      sum_sq += m * m;
    }
    const double mean = sum / nb;
    const double var = std::max(0.0, (sum_sq - nb * mean * mean) / (nb - 1.0));
    report.mean_occupation[k] = mean;
    report.standard_errors[k] = std::sqrt(var / nb);
  }
  return report;
}

}  // namespace coexline

#endif  // COEXLINE_DYNAMICS_HPP
