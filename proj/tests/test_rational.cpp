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

#include <gtest/gtest.h>

#include <coexline/oracle_rational.hpp>
#include <coexline/verify_rational.hpp>

namespace {

namespace oracle = coexline::oracle;
using oracle::Rational;

TEST(ParseRational, Forms) {
  EXPECT_EQ(oracle::parse_rational("3"), Rational(3));
  EXPECT_EQ(oracle::parse_rational("-2"), Rational(-2));
  EXPECT_EQ(oracle::parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(oracle::parse_rational("1.5"), Rational(3, 2));
  EXPECT_EQ(oracle::parse_rational("0.5e-1"), Rational(1, 20));
  EXPECT_EQ(oracle::parse_rational("2E2"), Rational(200));
  EXPECT_EQ(oracle::parse_rational("6/4"), Rational(3, 2));
  EXPECT_THROW(oracle::parse_rational(""), coexline::DomainError);
  EXPECT_THROW(oracle::parse_rational("abc"), coexline::DomainError);
  EXPECT_THROW(oracle::parse_rational("1e"), coexline::DomainError);
}

TEST(ExactOracle, SingleSiteWeights) {
  const auto two = oracle::enumerate_two_line_full<Rational>(Rational(3), Rational(3), 1);
  EXPECT_EQ(two.normalizer, Rational(8));
  EXPECT_EQ(two.dist.prob[1], Rational(3, 8));
  const auto prw = oracle::enumerate_prw_full<Rational>(Rational(3), Rational(3), 1);
  EXPECT_EQ(prw.normalizer, Rational(2));
  EXPECT_EQ(prw.dist.prob[1], Rational(1, 4));
}

TEST(ExactOracle, SurvivalProbabilities) {
  const auto p = oracle::survival_probabilities<Rational>(Rational(3), 2);
  EXPECT_EQ(p[1], Rational(15, 16));
  EXPECT_EQ(p[2], Rational(117, 128));
}

TEST(ExactOracle, IdentitiesVanish) {
  for (auto [a, b] : {std::pair{"2", "2"}, {"3", "3"}, {"3", "1.5"}, {"0.5", "2"}}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& c : coexline::verify_identities_exact(oracle::parse_rational(a),
                                                              oracle::parse_rational(b), n)) {
        EXPECT_TRUE(c.pass) << c.check << " n=" << n;
        EXPECT_EQ(c.value, 0.0);
      }
    }
  }
}

}  // namespace
