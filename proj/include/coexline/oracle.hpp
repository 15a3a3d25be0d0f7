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

#ifndef COEXLINE_ORACLE_HPP
#define COEXLINE_ORACLE_HPP

// Brute-force ground truth for small systems. Every routine is a template on
// the scalar type so the same code runs in double precision and, when GMP is
// available, in exact rationals (see oracle_rational.hpp).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "coexline/error.hpp"
#include "coexline/walks.hpp"

namespace coexline::oracle {

/// Configuration spaces. Indices are little-endian: site 1 is the lowest
/// binary bit (or lowest base-3 digit, storing w + 1 for w in {-1, 0, 1}).
enum class Alphabet {
  binary,          // {0,1}^n
  ternary,         // {-1,0,1}^n
  binary_pair,     // {0,1}^n x {0,1}^n, index = first | second << n
  binary_ternary,  // {0,1}^n x {-1,0,1}^n, index = first + 2^n * ternary
  binary_shock,    // {0,1}^n x {0..n}, index = first + 2^n * shock
};

struct Support {
  std::size_t n = 0;
  Alphabet alphabet = Alphabet::binary;

  std::size_t size() const {
    const std::size_t two = std::size_t{1} << n;
    std::size_t three = 1;
    for (std::size_t i = 0; i < n; ++i) three *= 3;
    switch (alphabet) {
      case Alphabet::binary: return two;
      case Alphabet::ternary: return three;
      case Alphabet::binary_pair: return two * two;
      case Alphabet::binary_ternary: return two * three;
      case Alphabet::binary_shock: return two * (n + 1);
    }
    return 0;
  }

  friend bool operator==(const Support&, const Support&) = default;
};

template <class Scalar = double>
struct DiscreteDistribution {
  Support support;
  std::vector<Scalar> prob;

  Scalar total() const {
    Scalar s(0);
    for (const auto& p : prob) s += p;
    return s;
  }
};

/// Enumeration caps (configurations grow as 2^n, 3^n or 4^n).
inline constexpr std::size_t kMaxTwoLineN = 10;
inline constexpr std::size_t kMaxTernaryN = 10;
inline constexpr std::size_t kMaxBayesN = 8;
inline constexpr std::size_t kMaxCtmcN = 12;

namespace detail {

inline void require_cap(std::size_t n, std::size_t cap, const char* who) {
  if (n > cap) {
    throw ResourceError(std::string(who) + ": n = " + std::to_string(n) +
                        " exceeds the enumeration cap of " + std::to_string(cap));
  }
}

template <class Scalar>
Scalar ipow(const Scalar& x, long e) {
  Scalar result(1);
  Scalar base(x);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

template <class Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : Scalar(x);
}

inline std::size_t pow3(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= 3;
  return r;
}

inline void decode_ternary(std::size_t index, std::size_t n, std::vector<int>& out) {
  out.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = static_cast<int>(index % 3) - 1;
    index /= 3;
  }
}

inline std::size_t encode_ternary(const std::vector<int>& w) {
  std::size_t index = 0;
  for (std::size_t j = w.size(); j-- > 0;) index = index * 3 + static_cast<std::size_t>(w[j] + 1);
  return index;
}

/// Non-negative exponents (e_a, e_b) of a weight a^{e_a} b^{e_b} times a scalar prefactor.
template <class Scalar>
struct PowerWeight {
  long e_a = 0;
  long e_b = 0;
  Scalar factor = Scalar(1);
};

/// Evaluates and normalizes a family of power weights. In double precision,
/// switches to log space when n |log ab| > 500 so that no power overflows.
template <class Scalar>
void normalize_power_weights(const std::vector<PowerWeight<Scalar>>& w, const Scalar& a,
                             const Scalar& b, std::size_t n, std::vector<Scalar>& prob,
                             Scalar& normalizer, double& log_normalizer) {
  prob.resize(w.size());
  bool log_mode = false;
  if constexpr (std::is_floating_point_v<Scalar>) {
    log_mode = static_cast<double>(n) * std::abs(std::log(a * b)) > 500.0;
  }
  if (!log_mode) {
    long max_ea = 0, max_eb = 0;
    for (const auto& x : w) {
      max_ea = std::max(max_ea, x.e_a);
      max_eb = std::max(max_eb, x.e_b);
    }
    std::vector<Scalar> pa(static_cast<std::size_t>(max_ea) + 1), pb(static_cast<std::size_t>(max_eb) + 1);
    pa[0] = Scalar(1);
    pb[0] = Scalar(1);
    for (std::size_t k = 1; k < pa.size(); ++k) pa[k] = pa[k - 1] * a;
    for (std::size_t k = 1; k < pb.size(); ++k) pb[k] = pb[k - 1] * b;
    Scalar total(0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      prob[i] = w[i].factor * pa[static_cast<std::size_t>(w[i].e_a)] * pb[static_cast<std::size_t>(w[i].e_b)];
      total += prob[i];
    }
    for (auto& p : prob) p /= total;
    normalizer = total;
    if constexpr (std::is_floating_point_v<Scalar>) {
      log_normalizer = std::log(total);
    } else {
      log_normalizer = std::log(total.get_d());
    }
    return;
  }
  if constexpr (std::is_floating_point_v<Scalar>) {
    const double la = std::log(a), lb = std::log(b);
    std::vector<double> lw(w.size());
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < w.size(); ++i) {
      lw[i] = static_cast<double>(w[i].e_a) * la + static_cast<double>(w[i].e_b) * lb +
              std::log(w[i].factor);
      top = std::max(top, lw[i]);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      prob[i] = std::exp(lw[i] - top);
      total += prob[i];
    }
    for (auto& p : prob) p /= total;
    log_normalizer = top + std::log(total);
    normalizer = std::exp(log_normalizer);
  }
}

}  // namespace detail

/// Result of an enumeration that also reports its normalizing constant.
template <class Scalar = double>
struct Enumerated {
  DiscreteDistribution<Scalar> dist;
  Scalar normalizer = Scalar(0);
  double log_normalizer = 0.0;
};

/// Two-line measure on {0,1}^n x {0,1}^n with weight
/// b^{s_n^(1) - s_n^(2)} / (ab)^{min_j (s_j^(1) - s_j^(2))} against the uniform law.
template <class Scalar = double>
Enumerated<Scalar> enumerate_two_line_full(const Scalar& a, const Scalar& b, std::size_t n) {
  coexline::detail::require_domain(a > Scalar(0) && b > Scalar(0),
                                   "enumerate_two_line: a and b must be positive");
  detail::require_cap(n, kMaxTwoLineN, "enumerate_two_line");
  const std::size_t two = std::size_t{1} << n;
  std::vector<detail::PowerWeight<Scalar>> w(two * two);
  for (std::size_t x = 0; x < two; ++x) {
    for (std::size_t y = 0; y < two; ++y) {
      long gap = 0, lowest = 0;
      for (std::size_t j = 0; j < n; ++j) {
        gap += static_cast<long>((x >> j) & 1U) - static_cast<long>((y >> j) & 1U);
        lowest = std::min(lowest, gap);
      }
      // b^{gap} (ab)^{-lowest} = a^{-lowest} b^{gap - lowest}
      w[x | (y << n)] = {-lowest, gap - lowest, Scalar(1)};
    }
  }
  Enumerated<Scalar> out;
  out.dist.support = {n, Alphabet::binary_pair};
  detail::normalize_power_weights(w, a, b, n, out.dist.prob, out.normalizer, out.log_normalizer);
  return out;
}

template <class Scalar = double>
DiscreteDistribution<Scalar> enumerate_two_line(const Scalar& a, const Scalar& b, std::size_t n) {
  return enumerate_two_line_full(a, b, n).dist;
}

/// Law of the first line (projection pi).
template <class Scalar>
DiscreteDistribution<Scalar> marginal_first(const DiscreteDistribution<Scalar>& pair) {
  if (pair.support.alphabet != Alphabet::binary_pair) {
    throw LengthError("marginal_first: expects a distribution over pairs of binary strings");
  }
  const std::size_t n = pair.support.n;
  const std::size_t two = std::size_t{1} << n;
  DiscreteDistribution<Scalar> out{{n, Alphabet::binary}, std::vector<Scalar>(two, Scalar(0))};
  for (std::size_t i = 0; i < pair.prob.size(); ++i) out.prob[i & (two - 1)] += pair.prob[i];
  return out;
}

/// Push-forward under (w1, w2) -> (w1, w1 - w2).
template <class Scalar>
DiscreteDistribution<Scalar> pushforward_phi(const DiscreteDistribution<Scalar>& pair) {
  if (pair.support.alphabet != Alphabet::binary_pair) {
    throw LengthError("pushforward_phi: expects a distribution over pairs of binary strings");
  }
  const std::size_t n = pair.support.n;
  const std::size_t two = std::size_t{1} << n;
  Support target{n, Alphabet::binary_ternary};
  DiscreteDistribution<Scalar> out{target, std::vector<Scalar>(target.size(), Scalar(0))};
  std::vector<int> diff(n);
  for (std::size_t i = 0; i < pair.prob.size(); ++i) {
    const std::size_t x = i & (two - 1), y = i >> n;
    for (std::size_t j = 0; j < n; ++j) {
      diff[j] = static_cast<int>((x >> j) & 1U) - static_cast<int>((y >> j) & 1U);
    }
    out.prob[x + two * detail::encode_ternary(diff)] += pair.prob[i];
  }
  return out;
}

/// Exit rate and outgoing moves of the open TASEP generator, as a callback
/// f(target, rate) for each transition out of configuration x.
template <class Scalar, class F>
void for_each_transition(std::size_t x, std::size_t n, const Scalar& alpha, const Scalar& beta,
                         F&& f) {
  if (((x >> 0) & 1U) == 0) f(x | 1U, alpha);
  if (((x >> (n - 1)) & 1U) == 1) f(x & ~(std::size_t{1} << (n - 1)), beta);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (((x >> k) & 1U) == 1 && ((x >> (k + 1)) & 1U) == 0) {
      f(x ^ (std::size_t{3} << k), Scalar(1));
    }
  }
}

/// max_y |(pi Q)_y| for the open TASEP generator.
template <class Scalar>
Scalar stationarity_residual(const DiscreteDistribution<Scalar>& pi, const Scalar& alpha,
                             const Scalar& beta) {
  if (pi.support.alphabet != Alphabet::binary) {
    throw LengthError("stationarity_residual: expects a distribution over {0,1}^n");
  }
  const std::size_t n = pi.support.n;
  std::vector<Scalar> flow(pi.prob.size(), Scalar(0));
  for (std::size_t x = 0; x < pi.prob.size(); ++x) {
    for_each_transition(x, n, alpha, beta, [&](std::size_t y, const Scalar& rate) {
      flow[y] += pi.prob[x] * rate;
      flow[x] -= pi.prob[x] * rate;
    });
  }
  Scalar worst(0);
  for (const auto& v : flow) worst = std::max(worst, detail::abs_value(v));
  return worst;
}

/// Stationary law of the open TASEP by a dense solve of pi Q = 0, sum pi = 1.
inline DiscreteDistribution<double> ctmc_stationary(double alpha, double beta, std::size_t n) {
  coexline::detail::require_domain(alpha > 0.0 && beta > 0.0,
                                   "ctmc_stationary: rates must be positive");
  coexline::detail::require_domain(n >= 1, "ctmc_stationary: n must be at least 1");
  detail::require_cap(n, kMaxCtmcN, "ctmc_stationary");
  const auto size = static_cast<Eigen::Index>(std::size_t{1} << n);
  // Row y of Q^T holds the balance equation for state y.
  Eigen::MatrixXd qt = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index x = 0; x < size; ++x) {
    for_each_transition(static_cast<std::size_t>(x), n, alpha, beta,
                        [&](std::size_t y, double rate) {
                          qt(static_cast<Eigen::Index>(y), x) += rate;
                          qt(x, x) -= rate;
                        });
  }
  qt.row(size - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs(size - 1) = 1.0;
  const Eigen::VectorXd solution = qt.partialPivLu().solve(rhs);

  DiscreteDistribution<double> pi{{n, Alphabet::binary},
                                  std::vector<double>(solution.data(), solution.data() + size)};
  const double residual = stationarity_residual(pi, alpha, beta);
  if (!(residual <= 1e-12) || std::abs(pi.total() - 1.0) > 1e-12) {
    throw SolverError("ctmc_stationary: residual " + std::to_string(residual) +
                      " exceeds 1e-12");
  }
  return pi;
}

/// Weighted walk law on {-1,0,1}^n: nu_1^n(w) b^{s_n} / (ab)^{min_j s_j}, with
/// its normalizing constant C_{n,a,b}.
template <class Scalar = double>
Enumerated<Scalar> enumerate_prw_full(const Scalar& a, const Scalar& b, std::size_t n) {
  coexline::detail::require_domain(a > Scalar(0) && b > Scalar(0),
                                   "enumerate_prw: a and b must be positive");
  detail::require_cap(n, kMaxTernaryN, "enumerate_prw");
  const std::size_t size = detail::pow3(n);
  const Scalar quarter = Scalar(1) / Scalar(4);
  const Scalar half = Scalar(1) / Scalar(2);
  std::vector<detail::PowerWeight<Scalar>> w(size);
  std::vector<int> path;
  for (std::size_t i = 0; i < size; ++i) {
    detail::decode_ternary(i, n, path);
    long s = 0, lowest = 0;
    Scalar nu(1);
    for (int step : path) {
      s += step;
      lowest = std::min(lowest, s);
      nu *= step == 0 ? half : quarter;
    }
    w[i] = {-lowest, s - lowest, nu};
  }
  Enumerated<Scalar> out;
  out.dist.support = {n, Alphabet::ternary};
  detail::normalize_power_weights(w, a, b, n, out.dist.prob, out.normalizer, out.log_normalizer);
  return out;
}

template <class Scalar = double>
DiscreteDistribution<Scalar> enumerate_prw(const Scalar& a, const Scalar& b, std::size_t n) {
  return enumerate_prw_full(a, b, n).dist;
}

/// Smallest index achieving the minimum of the path.
inline std::size_t first_min_index(const LatticePath& path) {
  const auto values = path.values();
  return static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
}

/// Survival probabilities p_0..p_n of the nu_a walk by the height recursion,
/// evaluated in Scalar arithmetic.
template <class Scalar>
std::vector<Scalar> survival_probabilities(const Scalar& a, std::size_t n) {
  const Scalar d = (a + Scalar(1)) * (a + Scalar(1));
  const Scalar up = a * a / d, zero = Scalar(2) * a / d, down = Scalar(1) / d;
  // q[h] = probability of surviving r steps from height h, h = 0..n (q = 1 above).
  std::vector<Scalar> q(n + 2, Scalar(1)), next(n + 2, Scalar(1));
  std::vector<Scalar> p(n + 1);
  p[0] = Scalar(1);
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t h = 0; h <= n; ++h) {
      Scalar v = zero * q[h] + up * q[h + 1];
      if (h > 0) v += down * q[h - 1];
      next[h] = v;
    }
    std::swap(q, next);
    p[r] = q[0];
  }
  return p;
}

/// The walk law written through its first-minimum decomposition:
/// (a/4) w_a^{t-1} nu_a(w<-) w_b^{n-t} nu_b(w->) / C for t > 0 and
/// w_b^n nu_b(w) / C for t = 0, with C assembled from survival probabilities.
template <class Scalar = double>
Enumerated<Scalar> denisov_exact_law_full(const Scalar& a, const Scalar& b, std::size_t n) {
  coexline::detail::require_domain(a > Scalar(0) && b > Scalar(0),
                                   "denisov_exact_law: a and b must be positive");
  coexline::detail::require_domain(n >= 1, "denisov_exact_law: n must be at least 1");
  detail::require_cap(n, kMaxTernaryN, "denisov_exact_law");

  auto nu_of = [](const Scalar& x) {
    const Scalar d = (x + Scalar(1)) * (x + Scalar(1));
    return std::vector<Scalar>{Scalar(1) / d, Scalar(2) * x / d, x * x / d};  // -1, 0, +1
  };
  const auto nu_a = nu_of(a), nu_b = nu_of(b);
  const Scalar w_a = (a + Scalar(1)) * (a + Scalar(1)) / (Scalar(4) * a);
  const Scalar w_b = (b + Scalar(1)) * (b + Scalar(1)) / (Scalar(4) * b);
  const auto p_a = survival_probabilities(a, n);
  const auto p_b = survival_probabilities(b, n);
  const Scalar a_quarter = a / Scalar(4);

  Scalar c = detail::ipow(w_b, static_cast<long>(n)) * p_b[n];
  for (std::size_t m = 1; m <= n; ++m) {
    c += a_quarter * detail::ipow(w_a, static_cast<long>(m - 1)) * p_a[m - 1] *
         detail::ipow(w_b, static_cast<long>(n - m)) * p_b[n - m];
  }

  const std::size_t size = detail::pow3(n);
  Enumerated<Scalar> out;
  out.dist.support = {n, Alphabet::ternary};
  out.dist.prob.assign(size, Scalar(0));
  std::vector<int> w;
  std::vector<int> values(n + 1);
  for (std::size_t i = 0; i < size; ++i) {
    detail::decode_ternary(i, n, w);
    values[0] = 0;
    for (std::size_t j = 0; j < n; ++j) values[j + 1] = values[j] + w[j];
    const std::size_t t = first_min_index(LatticePath(values, LatticePath::unchecked));
    Scalar weight(1);
    if (t == 0) {
      weight = detail::ipow(w_b, static_cast<long>(n));
      for (int step : w) weight *= nu_b[static_cast<std::size_t>(step + 1)];
    } else {
      weight = a_quarter * detail::ipow(w_a, static_cast<long>(t - 1)) *
               detail::ipow(w_b, static_cast<long>(n - t));
      // left block, reversed and negated: (-w_{t-1}, ..., -w_1)
      for (std::size_t j = 1; j < t; ++j) weight *= nu_a[static_cast<std::size_t>(-w[j - 1] + 1)];
      for (std::size_t j = t + 1; j <= n; ++j) weight *= nu_b[static_cast<std::size_t>(w[j - 1] + 1)];
    }
    out.dist.prob[i] = weight / c;
  }
  out.normalizer = c;
  if constexpr (std::is_floating_point_v<Scalar>) {
    out.log_normalizer = std::log(c);
  } else {
    out.log_normalizer = std::log(c.get_d());
  }
  return out;
}

template <class Scalar = double>
DiscreteDistribution<Scalar> denisov_exact_law(const Scalar& a, const Scalar& b, std::size_t n) {
  return denisov_exact_law_full(a, b, n).dist;
}

/// q(w' | w): 1 for (1,1) and (0,-1), 1/2 for (1,0) and (0,0), else 0.
template <class Scalar = double>
Scalar coupling_kernel(int primed, int step) {
  if ((primed == 1 && step == 1) || (primed == 0 && step == -1)) return Scalar(1);
  if ((primed == 1 || primed == 0) && step == 0) return Scalar(1) / Scalar(2);
  return Scalar(0);
}

/// max over (w', w) of |P~_TL(w', w) - P_RW(w) prod_j q(w'_j | w_j)|.
template <class Scalar = double>
Scalar bayes_check(const Scalar& a, const Scalar& b, std::size_t n) {
  detail::require_cap(n, kMaxBayesN, "bayes_check");
  const auto tilde = pushforward_phi(enumerate_two_line(a, b, n));
  const auto prw = enumerate_prw(a, b, n);
  const std::size_t two = std::size_t{1} << n;
  std::vector<int> w;
  Scalar worst(0);
  for (std::size_t t = 0; t < prw.prob.size(); ++t) {
    detail::decode_ternary(t, n, w);
    for (std::size_t x = 0; x < two; ++x) {
      Scalar rhs = prw.prob[t];
      for (std::size_t j = 0; j < n && rhs != Scalar(0); ++j) {
        rhs *= coupling_kernel<Scalar>(static_cast<int>((x >> j) & 1U), w[j]);
      }
      worst = std::max(worst, detail::abs_value(Scalar(tilde.prob[x + two * t] - rhs)));
    }
  }
  return worst;
}

/// Exact law of (occupations, first minimizer of s_j - j/2) under the stationary measure.
template <class Scalar>
DiscreteDistribution<Scalar> attach_shock_location(const DiscreteDistribution<Scalar>& occupations) {
  if (occupations.support.alphabet != Alphabet::binary) {
    throw LengthError("attach_shock_location: expects a distribution over {0,1}^n");
  }
  const std::size_t n = occupations.support.n;
  const std::size_t two = std::size_t{1} << n;
  Support target{n, Alphabet::binary_shock};
  DiscreteDistribution<Scalar> out{target, std::vector<Scalar>(target.size(), Scalar(0))};
  for (std::size_t x = 0; x < two; ++x) {
    long s = 0, best_value = 0;
    std::size_t best = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      s += static_cast<long>((x >> (j - 1)) & 1U);
      if (2 * s - static_cast<long>(j) < best_value) {
        best_value = 2 * s - static_cast<long>(j);
        best = j;
      }
    }
    out.prob[x + two * best] = occupations.prob[x];
  }
  return out;
}

/// Total variation distance, (1/2) sum |p - q|.
template <class Scalar>
Scalar tv_distance(const DiscreteDistribution<Scalar>& p, const DiscreteDistribution<Scalar>& q) {
  if (!(p.support == q.support) || p.prob.size() != q.prob.size()) {
    throw LengthError("tv_distance: distributions live on different supports");
  }
  Scalar sum(0);
  for (std::size_t i = 0; i < p.prob.size(); ++i) sum += detail::abs_value(Scalar(p.prob[i] - q.prob[i]));
  return sum / Scalar(2);
}

}  // namespace coexline::oracle

#endif  // COEXLINE_ORACLE_HPP
