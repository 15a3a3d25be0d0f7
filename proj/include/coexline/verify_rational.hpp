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

#ifndef COEXLINE_VERIFY_RATIONAL_HPP
#define COEXLINE_VERIFY_RATIONAL_HPP

#include <cstddef>
#include <vector>

#include "coexline/oracle_rational.hpp"
#include "coexline/verify.hpp"

namespace coexline {

/// Exact-rational audit of the same identities. Instead of solving the
/// generator, the two-line marginal is plugged into pi Q and the residual must
/// vanish exactly; every other comparison is an exact equality, reported as
/// the (exact) discrepancy converted to double.
inline std::vector<Check> verify_identities_exact(const oracle::Rational& a,
                                                  const oracle::Rational& b, std::size_t n) {
  using oracle::Rational;
  detail::require_domain(a > 0 && b > 0, "verify: a and b must be positive");
  detail::require_domain(n >= 1 && n <= oracle::kMaxBayesN, "verify: n must lie in [1, 8]");
  const double ad = a.get_d(), bd = b.get_d();
  std::vector<Check> out;

  const auto marginal = oracle::marginal_first(oracle::enumerate_two_line<Rational>(a, b, n));
  const Rational alpha = Rational(1) / (Rational(1) + a);
  const Rational beta = Rational(1) / (Rational(1) + b);
  const Rational residual = oracle::stationarity_residual<Rational>(marginal, alpha, beta);
  out.push_back(make_check("two_line_marginal_stationarity_exact", n, ad, bd, "residual",
                           residual.get_d(), 0.0));

  out.push_back(make_check("two_line_bayes_factorization_exact", n, ad, bd, "max_abs_error",
                           oracle::bayes_check<Rational>(a, b, n).get_d(), 0.0));

  const auto prw = oracle::enumerate_prw_full<Rational>(a, b, n);
  const auto decomposed = oracle::denisov_exact_law_full<Rational>(a, b, n);
  out.push_back(make_check("walk_law_vs_min_decomposition_exact", n, ad, bd, "tv",
                           oracle::tv_distance(prw.dist, decomposed.dist).get_d(), 0.0));

  const Rational gap = prw.normalizer - decomposed.normalizer;
  out.push_back(make_check("normalizer_two_routes_exact", n, ad, bd, "abs_error",
                           oracle::detail::abs_value(gap).get_d(), 0.0));

  if (n == 1) {
    const Rational c_closed = (a + b + 2) / 4;
    const Rational occ_closed = (1 + b) / (a + b + 2);
    out.push_back(make_check("closed_form_normalizer_n1_exact", n, ad, bd, "abs_error",
                             oracle::detail::abs_value(Rational(prw.normalizer - c_closed)).get_d(), 0.0));
    out.push_back(make_check("closed_form_occupation_n1_exact", n, ad, bd, "abs_error",
                             oracle::detail::abs_value(Rational(marginal.prob[1] - occ_closed)).get_d(), 0.0));
  }
  return out;
}

}  // namespace coexline

#endif  // COEXLINE_VERIFY_RATIONAL_HPP
