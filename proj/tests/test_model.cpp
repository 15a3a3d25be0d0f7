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

#include <coexline/model.hpp>
#include <coexline/rng.hpp>

#include <stdexcept>
#include <vector>

namespace {

using coexline::BoundaryRates;
using coexline::OccupationVector;
using coexline::Sign;

OccupationVector random_occupations(coexline::Stream& rng, std::size_t n) {
  std::vector<std::uint8_t> tau(n);
  for (auto& t : tau) t = static_cast<std::uint8_t>(rng.coin());
  return OccupationVector(std::move(tau));
}

TEST(Kappa, HandEvaluations) {
  EXPECT_DOUBLE_EQ(coexline::kappa_pm(0.25, 0, 0, Sign::plus), 3.0);
  EXPECT_DOUBLE_EQ(coexline::kappa_pm(0.25, 0, 0, Sign::minus), 0.0);
  EXPECT_DOUBLE_EQ(coexline::kappa_pm(0.5, 0, 0, Sign::plus), 1.0);
}

TEST(Kappa, RejectsBadArguments) {
  EXPECT_THROW(coexline::kappa_pm(0.0, 0, 0, Sign::plus), coexline::DomainError);
  EXPECT_THROW(coexline::kappa_pm(-1.0, 0, 0, Sign::plus), coexline::DomainError);
  EXPECT_THROW(coexline::kappa_pm(0.5, 0, 1.0, Sign::plus), coexline::DomainError);
}

TEST(Kappa, OrderingAndZeroRoot) {
  for (double x = 0.05; x < 2.0; x += 0.05) {
    for (double y = 0.0; y < 2.0; y += 0.1) {
      for (double q : {0.0, 0.3, 0.9}) {
        const double plus = coexline::kappa_pm(x, y, q, Sign::plus);
        const double minus = coexline::kappa_pm(x, y, q, Sign::minus);
        EXPECT_GE(plus, minus);
        if (y == 0.0) {
          EXPECT_EQ(plus * minus, 0.0);
        } else {
          EXPECT_GT(plus, 0.0);
        }
      }
    }
  }
}

TEST(RepParams, FromRates) {
  auto r = coexline::rep_from_rates({0.25, 0.25});
  EXPECT_DOUBLE_EQ(r.a, 3.0);
  EXPECT_DOUBLE_EQ(r.b, 3.0);
  r = coexline::rep_from_rates({0.5, 0.5});
  EXPECT_DOUBLE_EQ(r.a, 1.0);
  EXPECT_DOUBLE_EQ(r.b, 1.0);
  r = coexline::rep_from_rates({0.25, 0.5});
  EXPECT_DOUBLE_EQ(r.a, 3.0);
  EXPECT_DOUBLE_EQ(r.b, 1.0);
  EXPECT_DOUBLE_EQ(r.alpha(), 0.25);
  EXPECT_DOUBLE_EQ(r.beta(), 0.5);
}

TEST(RepParams, RejectsOutsideUnitInterval) {
  EXPECT_THROW(coexline::rep_from_rates({0.0, 0.5}), coexline::DomainError);
  EXPECT_THROW(coexline::rep_from_rates({0.5, 1.0}), coexline::DomainError);
  BoundaryRates asep{0.5, 0.5, 0.1, 0.0, 0.0};
  EXPECT_THROW(coexline::rep_from_rates(asep), coexline::DomainError);
}

TEST(RepParams, AgreesWithKappaOnGrid) {
  for (double alpha = 0.01; alpha < 0.99; alpha += 0.01) {
    for (double beta = 0.01; beta < 0.99; beta += 0.07) {
      const auto r = coexline::rep_from_rates({alpha, beta});
      EXPECT_NEAR(r.a, coexline::kappa_pm(alpha, 0, 0, Sign::plus), 1e-12);
      EXPECT_NEAR(r.b, coexline::kappa_pm(beta, 0, 0, Sign::plus), 1e-12);
    }
  }
}

TEST(Occupation, Validation) {
  EXPECT_THROW(OccupationVector({0, 2}), coexline::DomainError);
  EXPECT_THROW(OccupationVector(std::vector<std::uint8_t>{}), coexline::LengthError);
}

TEST(Height, Examples) {
  const OccupationVector tau{1, 0, 1};
  EXPECT_EQ(coexline::height(tau, 3), 2);
  EXPECT_EQ(coexline::height(tau, 0), 0);
  EXPECT_EQ(coexline::height(OccupationVector{0, 0, 0, 0}, 4), 0);
  EXPECT_THROW(coexline::height(tau, 4), std::out_of_range);
}

TEST(Height, NondecreasingUnitSteps) {
  coexline::Stream rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto tau = random_occupations(rng, 1 + rng.next_u64() % 40);
    for (std::size_t j = 1; j <= tau.size(); ++j) {
      const long d = coexline::height(tau, j) - coexline::height(tau, j - 1);
      EXPECT_TRUE(d == 0 || d == 1);
    }
  }
}

TEST(TauStar, Examples) {
  EXPECT_EQ(coexline::tau_star(OccupationVector{1, 1, 1}), 0U);
  EXPECT_EQ(coexline::tau_star(OccupationVector{0, 0, 1, 1}), 2U);
  EXPECT_EQ(coexline::tau_star(OccupationVector{0, 1, 0, 1}), 1U);
}

TEST(TauStar, IsFirstMinimizer) {
  coexline::Stream rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto tau = random_occupations(rng, 1 + rng.next_u64() % 60);
    const std::size_t t = coexline::tau_star(tau);
    const long best = 2 * coexline::height(tau, t) - static_cast<long>(t);
    for (std::size_t j = 0; j <= tau.size(); ++j) {
      const long v = 2 * coexline::height(tau, j) - static_cast<long>(j);
      if (j < t) {
        EXPECT_GT(v, best);
      } else {
        EXPECT_GE(v, best);
      }
    }
  }
}

}  // namespace
