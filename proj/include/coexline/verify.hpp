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

#ifndef COEXLINE_VERIFY_HPP
#define COEXLINE_VERIFY_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "coexline/denisov.hpp"
#include "coexline/oracle.hpp"
#include "coexline/walks.hpp"

namespace coexline {

/// One pass/fail line of an identity or statistical check.
struct Check {
  std::string check;
  std::size_t n = 0;
  double a = 0.0;
  double b = 0.0;
  std::string metric;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline Check make_check(std::string name, std::size_t n, double a, double b, std::string metric,
                        double value, double tolerance) {
  // NaN never passes.
  const bool pass = value <= tolerance;
  return {std::move(name), n, a, b, std::move(metric), value, tolerance, pass};
}

/// C_{n,a,b} from the minimum-location law (survival tables, log space).
inline double normalizer_from_tn_law(double a, double b, std::size_t n) {
  const auto left = survival_table(a, n);
  const auto right = survival_table(b, n);
  return std::exp(tn_law(a, b, n, left, right).log_C);
}

/// Small-n identities in double precision:
///  - stationary law of the generator == first-line marginal of the two-line measure
///  - two-line measure through (w1, w1 - w2) == weighted walk law times the coupling kernel
///  - weighted walk law == its first-minimum decomposition
///  - both routes to the normalizing constant agree
///  - n = 1 closed forms.
inline std::vector<Check> verify_identities(double a, double b, std::size_t n) {
  detail::require_domain(a > 0.0 && b > 0.0, "verify: a and b must be positive");
  detail::require_domain(n >= 1 && n <= oracle::kMaxBayesN, "verify: n must lie in [1, 8]");
  std::vector<Check> out;

  const auto two_line = oracle::enumerate_two_line(a, b, n);
  const auto marginal = oracle::marginal_first(two_line);
  const auto pi = oracle::ctmc_stationary(1.0 / (1.0 + a), 1.0 / (1.0 + b), n);
  out.push_back(make_check("two_line_marginal_vs_ctmc", n, a, b, "tv",
                           oracle::tv_distance(marginal, pi), 1e-10));

  out.push_back(make_check("two_line_bayes_factorization", n, a, b, "max_abs_error",
                           oracle::bayes_check(a, b, n), 1e-12));

  const auto prw = oracle::enumerate_prw_full(a, b, n);
  const auto decomposed = oracle::denisov_exact_law_full(a, b, n);
  out.push_back(make_check("walk_law_vs_min_decomposition", n, a, b, "tv",
                           oracle::tv_distance(prw.dist, decomposed.dist), 1e-10));

  const double c_walk = prw.normalizer;
  const double c_law = normalizer_from_tn_law(a, b, n);
  out.push_back(make_check("normalizer_two_routes", n, a, b, "relative_error",
                           std::abs(c_law - c_walk) / std::abs(c_walk), 1e-10));

  if (n == 1) {
    out.push_back(make_check("closed_form_normalizer_n1", n, a, b, "abs_error",
                             std::abs(c_law - (a + b + 2.0) / 4.0), 1e-12));
    out.push_back(make_check("closed_form_occupation_n1", n, a, b, "abs_error",
                             std::abs(marginal.prob[1] - (1.0 + b) / (a + b + 2.0)), 1e-12));
  }
  return out;
}

}  // namespace coexline

#endif  // COEXLINE_VERIFY_HPP
