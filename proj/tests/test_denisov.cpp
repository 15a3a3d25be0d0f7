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

#include <coexline/denisov.hpp>
#include <coexline/oracle.hpp>

#include <cmath>
#include <vector>

namespace {

using coexline::LatticePath;
using coexline::Stream;

std::size_t occupation_index(const coexline::DenisovSample& s) {
  std::size_t x = 0;
  for (std::size_t j = 1; j <= s.n; ++j) x |= static_cast<std::size_t>(s.S_primed.increment(j)) << (j - 1);
  return x;
}

TEST(TnLaw, SingleSite) {
  const auto t = coexline::survival_table(3, 1);
  const auto law = coexline::tn_law(3, 3, 1, t, t);
  EXPECT_NEAR(std::exp(law.log_C), 2.0, 1e-14);
  EXPECT_NEAR(law.pmf[0], 5.0 / 8, 1e-14);
  EXPECT_NEAR(law.pmf[1], 3.0 / 8, 1e-14);
}

TEST(TnLaw, NormalizedAndPositive) {
  for (auto [a, b] : {std::pair{3.0, 3.0}, {0.5, 2.0}, {2.0, 0.5}, {1.0, 1.0}}) {
    const auto left = coexline::survival_table(a, 500);
    const auto right = coexline::survival_table(b, 500);
    for (std::size_t n : {1U, 2U, 17U, 500U}) {
      const auto law = coexline::tn_law(a, b, n, left, right);
      double sum = 0;
      for (double p : law.pmf) {
        EXPECT_GT(p, 0.0);
        sum += p;
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
      EXPECT_DOUBLE_EQ(law.cdf.back(), 1.0);
    }
  }
}

TEST(TnLaw, Preconditions) {
  const auto t = coexline::survival_table(3, 5);
  EXPECT_THROW(coexline::tn_law(0, 3, 2, t, t), coexline::DomainError);
  EXPECT_THROW(coexline::tn_law(3, 3, 6, t, t), coexline::DomainError);
  EXPECT_THROW(coexline::tn_law(2, 3, 2, t, t), coexline::DomainError);
}

TEST(TnLaw, NormalizerAsymptotics) {
  const double a = 3;
  const std::size_t n = 4000;
  const auto t = coexline::survival_table(a, n);
  const auto law = coexline::tn_law(a, a, n, t, t);
  const double log_ref = std::log(a / 4) + std::log(static_cast<double>(n)) +
                         (n - 1) * std::log(coexline::weight_w(a)) + 2 * std::log(1 - 1 / (a * a));
  EXPECT_NEAR(std::exp(law.log_C - log_ref), 1.0, 0.02);
}

TEST(SampleTn, SingleSiteFrequency) {
  const auto t = coexline::survival_table(3, 1);
  const auto law = coexline::tn_law(3, 3, 1, t, t);
  Stream rng(31);
  std::size_t ones = 0;
  const std::size_t draws = 1000000;
  for (std::size_t i = 0; i < draws; ++i) ones += coexline::sample_tn(law, rng);
  EXPECT_NEAR(static_cast<double>(ones) / draws, 3.0 / 8, 0.002);
}

TEST(SampleTn, Degenerate) {
  const auto law = coexline::min_location_law_from_pmf({0, 0, 1, 0});
  Stream rng(1);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(coexline::sample_tn(law, rng), 2U);
}

TEST(SampleTn, SymmetricMean) {
  const std::size_t n = 2000;
  const auto t = coexline::survival_table(3, n);
  const auto law = coexline::tn_law(3, 3, n, t, t);
  Stream rng(32);
  double sum = 0;
  const std::size_t draws = 100000;
  for (std::size_t i = 0; i < draws; ++i) sum += static_cast<double>(coexline::sample_tn(law, rng)) / n;
  EXPECT_NEAR(sum / draws, 0.5, 0.01);
}

TEST(Concat, FigureExample) {
  const LatticePath left(std::vector<int>{0, 1, 2, 1, 1});
  const LatticePath right(std::vector<int>{0, 1, 1, 0, 1, 1, 1, 2, 3, 4});
  const auto s = coexline::concat(left, right, 14, 5);
  ASSERT_EQ(s.steps(), 14U);
  EXPECT_EQ(s[5], -2);
  EXPECT_EQ(s[14], 2);
  EXPECT_EQ(s[8], -2);
  EXPECT_EQ(s.increment(5), -1);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_GT(s[j], s[5]);
}

TEST(Concat, EdgeBlocks) {
  const LatticePath right(std::vector<int>{0, 1, 1, 2});
  EXPECT_EQ(coexline::concat(LatticePath(), right, 3, 0).increments(), right.increments());
  const LatticePath zeros(std::vector<int>{0, 0, 0, 0});
  const auto s = coexline::concat(zeros, LatticePath(), 4, 4);
  EXPECT_EQ(std::vector<int>(s.values().begin(), s.values().end()),
            (std::vector<int>{0, 0, 0, 0, -1}));
}

TEST(Concat, LengthMismatch) {
  const LatticePath right(std::vector<int>{0, 1, 1});
  EXPECT_THROW(coexline::concat(LatticePath(), right, 3, 0), coexline::LengthError);
  EXPECT_THROW(coexline::concat(LatticePath(std::vector<int>{0, 1}), right, 3, 1), coexline::LengthError);
  EXPECT_THROW(coexline::concat_primed(LatticePath(), right, 4, 1), coexline::LengthError);
}

TEST(ConcatPrimed, Examples) {
  const auto s = coexline::concat_primed(LatticePath(), LatticePath(std::vector<int>{0, 1}), 2, 1);
  EXPECT_EQ(std::vector<int>(s.values().begin(), s.values().end()), (std::vector<int>{0, 0, 1}));
  const LatticePath r(std::vector<int>{0, 0, 1});
  EXPECT_EQ(coexline::concat_primed(LatticePath(), r, 2, 0).increments(), r.increments());
}

TEST(ConcatPrimed, IncrementsStayBinary) {
  Stream rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.next_u64() % 30;
    const std::size_t m = rng.next_u64() % (n + 1);
    std::vector<int> l(m == 0 ? 0 : m - 1), r(n - m);
    for (auto& d : l) d = -rng.coin();
    for (auto& d : r) d = rng.coin();
    const auto s = coexline::concat_primed(LatticePath::from_increments(l),
                                           LatticePath::from_increments(r), n, m);
    for (std::size_t j = 1; j <= n; ++j) ASSERT_TRUE(s.increment(j) == 0 || s.increment(j) == 1);
    if (m >= 1) {
      ASSERT_EQ(s.increment(m), 0);
    }
  }
}

TEST(TnPrime, Examples) {
  EXPECT_EQ(coexline::tn_prime(LatticePath::from_increments({1, 1, 1})), 0U);
  EXPECT_EQ(coexline::tn_prime(LatticePath::from_increments({0, 0, 1, 1})), 2U);
}

TEST(TnPrime, AgreesWithTauStar) {
  Stream rng(8);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<int> inc(20);
    std::vector<std::uint8_t> tau(20);
    for (std::size_t j = 0; j < 20; ++j) {
      inc[j] = rng.coin();
      tau[j] = static_cast<std::uint8_t>(inc[j]);
    }
    ASSERT_EQ(coexline::tn_prime(LatticePath::from_increments(inc)),
              coexline::tau_star(coexline::OccupationVector(tau)));
  }
}

TEST(SampleStationary, SingleSite) {
  Stream rng(41);
  const std::size_t draws = 100000;
  std::size_t sym = 0, asym = 0;
  const coexline::StationarySampler s33(3, 3, 1), s31(3, 1, 1);
  for (std::size_t i = 0; i < draws; ++i) {
    sym += s33(rng).occupations()[0];
    asym += s31(rng).occupations()[0];
  }
  EXPECT_NEAR(static_cast<double>(sym) / draws, 0.5, 0.005);
  EXPECT_NEAR(static_cast<double>(asym) / draws, 1.0 / 3, 0.005);
}

TEST(SampleStationary, MatchesGeneratorAtSixSites) {
  const std::size_t n = 6, draws = 1000000;
  const auto pi = coexline::oracle::ctmc_stationary(1.0 / 3, 1.0 / 3, n);
  coexline::oracle::DiscreteDistribution<double> emp{pi.support, std::vector<double>(pi.prob.size())};
  const coexline::StationarySampler sampler(2, 2, n);
  Stream rng(42);
  for (std::size_t i = 0; i < draws; ++i) emp.prob[occupation_index(sampler(rng))] += 1.0 / draws;
  EXPECT_LE(coexline::oracle::tv_distance(emp, pi), 0.01);
}

TEST(SampleStationary, StructuralInvariants) {
  Stream rng(43);
  for (auto [a, b] : {std::pair{3.0, 3.0}, {0.5, 0.5}, {0.5, 2.0}, {1.0, 1.0}, {4.0, 0.7}}) {
    for (std::size_t n : {1U, 2U, 7U, 150U}) {
      const coexline::StationarySampler sampler(a, b, n);
      for (int i = 0; i < 300; ++i) {
        const auto s = sampler(rng);
        ASSERT_NO_THROW(coexline::verify_sample(s));
        ASSERT_EQ(s.t_n, coexline::oracle::first_min_index(s.S));
        ASSERT_EQ(s.tau_star, coexline::tau_star(s.occupations()));
      }
    }
  }
}

TEST(VerifySample, DetectsCorruption) {
  Stream rng(44);
  auto s = coexline::sample_stationary(3, 3, 10, rng);
  s.tau_star = (s.tau_star + 1) % 11;
  EXPECT_THROW(coexline::verify_sample(s), std::logic_error);
}

// Joint law of (occupations, shock location) from the construction against
// the exact two-line measure pushed through the first minimizer.
TEST(SampleStationary, JointShockLawAtFourSites) {
  const std::size_t n = 4, draws = 1000000;
  const auto exact = coexline::oracle::attach_shock_location(
      coexline::oracle::marginal_first(coexline::oracle::enumerate_two_line(3.0, 3.0, n)));
  coexline::oracle::DiscreteDistribution<double> emp{exact.support, std::vector<double>(exact.prob.size())};
  const coexline::StationarySampler sampler(3, 3, n);
  Stream rng(45);
  for (std::size_t i = 0; i < draws; ++i) {
    const auto s = sampler(rng);
    emp.prob[occupation_index(s) + (std::size_t{1} << n) * s.tau_star] += 1.0 / draws;
  }
  EXPECT_LE(coexline::oracle::tv_distance(emp, exact), 0.01);
}

}  // namespace
