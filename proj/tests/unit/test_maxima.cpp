// Copyright 2026 The evtlab Authors.
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

#include <cmath>
#include <vector>

#include "evtlab/distribution.hpp"
#include "evtlab/error.hpp"
#include "evtlab/maxima.hpp"
#include "evtlab/random.hpp"
#include "evtlab/stats.hpp"

namespace evt {
namespace {

TEST(MaxCdf, SpecExamples) {
  EXPECT_DOUBLE_EQ(max_cdf(MaxLaw(uniform(), 3), 0.5), 0.125);
  EXPECT_DOUBLE_EQ(max_cdf(MaxLaw(geometric(0.5), 2), 0.0), 0.25);
  for (const auto& d : {normal(), pareto(2.0), geometric(0.3)}) {
    for (double x : {-1.0, 0.0, 1.5, 4.0}) {
      EXPECT_EQ(max_cdf(MaxLaw(d, 1), x), d.cdf(x)) << d.spec();
    }
  }
}

TEST(MaxCdf, UniformIsExactlyAPower) {
  for (int n = 1; n <= 10; ++n) {
    const MaxLaw law(uniform(), n);
    for (int i = 0; i <= 100; ++i) {
      const double x = i / 100.0;
      ASSERT_NEAR(max_cdf(law, x), std::pow(x, n), 1e-15);
    }
  }
}

TEST(MaxCdf, LargeNUsesTheSurvivalFunction) {
  // F(x)^n with F(x) = 1 - 1e-12 and n = 1e12 is e^{-1} up to O(1e-12).
  const MaxLaw law(exponential(), 1000000000000);
  const double x = 12.0 * std::log(10.0);
  EXPECT_NEAR(max_cdf(law, x), std::exp(-1.0), 1e-9);
}

TEST(MaxCdf, MonotoneInXAndN) {
  for (const auto& d : {uniform(), exponential(), pareto(2.0), normal()}) {
    for (double x : {0.3, 1.2, 2.5}) {
      double prev = 1.0;
      for (int n : {1, 2, 5, 10, 100, 1000}) {
        const double v = max_cdf(MaxLaw(d, n), x);
        if (d.cdf(x) < 1.0) ASSERT_LE(v, prev) << d.spec();
        prev = v;
      }
    }
    double prev = 0.0;
    for (int i = -100; i <= 100; ++i) {
      const double v = max_cdf(MaxLaw(d, 7), i / 10.0);
      ASSERT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(MaxCdf, NanAndBadN) {
  EXPECT_THROW(max_cdf(MaxLaw(uniform(), 2), std::nan("")), Error);
  EXPECT_THROW(MaxLaw(uniform(), 0), Error);
}

TEST(ExponentialRep, SpecExamples) {
  EXPECT_NEAR(max_from_exponential(uniform(), 10, 1.0), std::exp(-0.1), 1e-15);
  for (double omega : {0.01, 0.7, 3.0, 25.0}) {
    const double expected = -std::log(-std::expm1(-omega / 50.0));
    EXPECT_NEAR(max_from_exponential(exponential(), 50, omega), expected,
                1e-12 * expected)
        << omega;
  }
}

TEST(ExponentialRep, RejectsNonPositiveOmega) {
  EXPECT_THROW(max_from_exponential(uniform(), 3, 0.0), Error);
  EXPECT_THROW(max_from_exponential(uniform(), 3, -1.0), Error);
}

TEST(DirectSampler, IsTheMaximumOfTheDraws) {
  for (int n : {1, 4, 17}) {
    RandomStream a(77), b(77);
    const MaxLaw law(normal(), n);
    for (int rep = 0; rep < 200; ++rep) {
      double best = -HUGE_VAL;
      for (int i = 0; i < n; ++i) best = std::max(best, normal().quantile(b.uniform()));
      ASSERT_EQ(sample_max_direct(law, a), best);
    }
  }
}

TEST(DirectSampler, SingleDrawIsABaseDraw) {
  RandomStream a(8), b(8);
  const MaxLaw law(pareto(2.0), 1);
  for (int i = 0; i < 100; ++i) {
    ASSERT_EQ(sample_max_direct(law, a), pareto(2.0).quantile(b.uniform()));
  }
}

TEST(DirectSampler, UniformMaxOfTenMatchesPowerLaw) {
  RandomStream rng(10);
  const MaxLaw law(uniform(), 10);
  std::vector<double> xs(100000);
  for (auto& x : xs) x = sample_max_direct(law, rng);
  const auto ks =
      ks_one_sample(xs, [](double x) { return std::pow(std::clamp(x, 0.0, 1.0), 10); }, 0.01);
  EXPECT_TRUE(ks.pass) << ks.statistic;
}

TEST(ExponentialSampler, MatchesTheMaxLaw) {
  for (const auto& d : {uniform(), exponential(), pareto(2.0), normal()}) {
    RandomStream rng(20);
    const MaxLaw law(d, 100);
    std::vector<double> xs(100000);
    for (auto& x : xs) x = sample_max_exponential_rep(law, rng);
    const auto ks =
        ks_one_sample(xs, [&](double x) { return max_cdf(law, x); }, 0.01);
    EXPECT_TRUE(ks.pass) << d.spec() << " " << ks.statistic;
  }
}

TEST(SamplerEquivalence, UniformBaseNineOfTenSeeds) {
  const MaxLaw law(uniform(), 10);
  int passes = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomStream direct(seed, 0), rep(seed, 1);
    std::vector<double> a(10000), b(10000);
    for (auto& x : a) x = sample_max_direct(law, direct);
    for (auto& x : b) x = sample_max_exponential_rep(law, rep);
    passes += ks_two_sample(a, b, 0.01).pass ? 1 : 0;
  }
  EXPECT_GE(passes, 9);
}

TEST(MonotoneFn, DeclaredDirectionIsChecked) {
  const MonotoneFn up([](double x) { return x * x * x; },
                      Monotonicity::kNondecreasing);
  EXPECT_NO_THROW(check_monotone(up, -5.0, 5.0));
  const MonotoneFn down([](double x) { return -x; },
                        Monotonicity::kNonincreasing);
  EXPECT_NO_THROW(check_monotone(down, -5.0, 5.0));
  const MonotoneFn liar([](double x) { return std::sin(x); },
                        Monotonicity::kNondecreasing);
  try {
    check_monotone(liar, 0.0, 10.0);
    ADD_FAILURE() << "sin passed a monotonicity check";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kContract);
  }
  const MonotoneFn undeclared([](double x) { return -x; },
                              Monotonicity::kUndeclared);
  EXPECT_THROW(check_monotone(undeclared, 0.0, 1.0), Error);
}

TEST(MonotoneFn, OneMinusFormFallsBack) {
  const MonotoneFn plain([](double x) { return 2.0 * x; },
                         Monotonicity::kNondecreasing);
  EXPECT_FALSE(plain.has_one_minus_form());
  EXPECT_DOUBLE_EQ(plain.at_one_minus(0.25), 1.5);
}

TEST(FloorReciprocal, InvertsReciprocalsOfIntegers) {
  for (std::int64_t n = 1; n <= 200000; ++n) {
    ASSERT_EQ(floor_reciprocal(1.0 / static_cast<double>(n)), n) << n;
  }
  for (std::int64_t n : {1000003LL, 123456789LL, 4503599627370495LL}) {
    EXPECT_EQ(floor_reciprocal(1.0 / static_cast<double>(n)), n);
  }
}

TEST(FloorReciprocal, SandwichHolds) {
  RandomStream rng(31);
  for (int i = 0; i < 100000; ++i) {
    const double eps = std::pow(10.0, -9.0 * rng.uniform());
    const std::int64_t m = floor_reciprocal(eps);
    const long double e = eps;
    ASSERT_LT(1.0L / (m + 1), e * (1.0L + 1e-15L)) << eps;
    ASSERT_LE(e, (1.0L / m) * (1.0L + 1e-15L)) << eps;
  }
  EXPECT_THROW(floor_reciprocal(0.0), Error);
  EXPECT_THROW(floor_reciprocal(1.5), Error);
}

MonotoneFn scaled_gap(std::int64_t n) {
  const double nd = static_cast<double>(n);
  return MonotoneFn([nd](double t) { return nd * (1.0 - t); },
                    Monotonicity::kNonincreasing,
                    [nd](double d) { return nd * d; });
}

TEST(HnEval, IdentityLinearForm) {
  const MonotoneFn id([](double t) { return t; }, Monotonicity::kNondecreasing);
  for (std::int64_t n : {2, 10, 1000, 1000000}) {
    for (double x : {0.5, 1.0, 1.9}) {
      EXPECT_EQ(h_n_eval(id, uniform(), n, x, HnForm::kLinear),
                1.0 - x / static_cast<double>(n));
    }
  }
}

TEST(HnEval, ScaledGapExpForm) {
  const double v = h_n_eval(scaled_gap(1000000), uniform(), 1000000, 2.0,
                            HnForm::kExp);
  EXPECT_NEAR(v, 2.0, 2e-6);
  // |n(1 - e^{-x/n}) - x| <= x^2/(2n) at every n.
  for (std::int64_t n : {10, 100, 1000, 100000}) {
    const double h = h_n_eval(scaled_gap(n), uniform(), n, 2.0, HnForm::kExp);
    EXPECT_LE(std::fabs(h - 2.0), 4.0 / (2.0 * n) * (1 + 1e-9));
  }
}

TEST(HnEval, ScaledGapLinearFormCancels) {
  // n * fl(x/n) is x up to one rounding.
  for (std::int64_t n : {3, 7, 49, 1000, 999983, 1000000000}) {
    for (double x : {0.1, 1.0, 2.0, 2.5}) {
      EXPECT_NEAR(h_n_eval(scaled_gap(n), uniform(), n, x, HnForm::kLinear), x,
                  2.0 * x * DBL_EPSILON);
      EXPECT_NEAR(h_n_eval(scaled_gap(n), uniform(), n, x, HnForm::kEpsilon), x,
                  2.0 * x * DBL_EPSILON);
    }
  }
}

TEST(HnEval, ExpAndLinearFormsApproachEachOther) {
  const auto g = [](std::int64_t n) { return scaled_gap(n); };
  double prev_gap = HUGE_VAL;
  for (std::int64_t n : {1000, 1000000}) {
    double gap = 0.0;
    for (double x : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      gap = std::max(gap, std::fabs(h_n_eval(g(n), uniform(), n, x, HnForm::kExp) -
                                    h_n_eval(g(n), uniform(), n, x, HnForm::kLinear)));
    }
    EXPECT_LT(gap, prev_gap);
    prev_gap = gap;
  }
  EXPECT_LT(prev_gap, 1e-5);
}

TEST(HnEval, DomainErrorsNameTheForm) {
  const MonotoneFn id([](double t) { return t; }, Monotonicity::kNondecreasing);
  try {
    h_n_eval(id, uniform(), 10, 10.0, HnForm::kLinear);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
    EXPECT_NE(std::string(e.what()).find("linear_form"), std::string::npos);
  }
  try {
    h_n_eval(id, uniform(), 10, 12.0, HnForm::kEpsilon);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("epsilon_form"), std::string::npos);
  }
  EXPECT_THROW(h_n_eval(id, uniform(), 10, 0.0, HnForm::kExp), Error);
  EXPECT_THROW(h_n_eval(id, uniform(), 10, -1.0, HnForm::kExp), Error);
}

TEST(HnEval, FreeEpsilonUsesFloorOfReciprocal) {
  std::int64_t seen = 0;
  const NormalizerBuilder builder = [&](std::int64_t m) {
    seen = m;
    return scaled_gap(m);
  };
  const double v = h_epsilon_eval(builder, uniform(), 0.3, 1.5);
  EXPECT_EQ(seen, 3);
  EXPECT_NEAR(v, 3.0 * 0.45, 1e-15);
  h_epsilon_eval(builder, uniform(), 1.0 / 7.0, 1.0);
  EXPECT_EQ(seen, 7);
}

TEST(HnForm, Names) {
  EXPECT_EQ(to_string(HnForm::kExp), "exp_form");
  EXPECT_EQ(parse_hn_form("linear"), HnForm::kLinear);
  EXPECT_EQ(parse_hn_form("epsilon_form"), HnForm::kEpsilon);
  EXPECT_THROW(parse_hn_form("cubic"), Error);
}

}  // namespace
}  // namespace evt
