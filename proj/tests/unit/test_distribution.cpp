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
#include <limits>
#include <vector>

#include "evtlab/distribution.hpp"
#include "evtlab/error.hpp"
#include "evtlab/random.hpp"
#include "evtlab/stats.hpp"
#include "oracles.hpp"

namespace evt {
namespace {

std::vector<Distribution> continuous_families() {
  return {uniform(), uniform(-2.0, 5.0), exponential(),  exponential(3.5),
          pareto(2.0), pareto(0.7, 3.0), normal(),       normal(1.5, 0.25)};
}

std::vector<Distribution> all_families() {
  auto out = continuous_families();
  out.push_back(geometric(0.5));
  out.push_back(geometric(0.1));
  out.push_back(geometric(0.93));
  out.push_back(degenerate(2.5));
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no evt::Error thrown";
  return ErrorKind::kNotFound;
}

TEST(Quantile, SpecExamples) {
  EXPECT_DOUBLE_EQ(uniform().quantile(0.3), 0.3);
  EXPECT_NEAR(exponential().quantile(1.0 - std::exp(-2.0)), 2.0, 1e-14);
  EXPECT_EQ(geometric(0.5).quantile(7.0 / 8.0), 3.0);
}

TEST(Quantile, GeometricMatchesSupportScan) {
  for (double p : {0.5, 0.2, 0.75}) {
    const Distribution g = geometric(p);
    for (double s : {0.9, 0.5, 0.3, 1.0 / 7.0, 0.01, 1e-5}) {
      EXPECT_EQ(g.tail_quantile(s),
                static_cast<double>(oracle::geometric_tail_quantile_scan(p, s)))
          << "p=" << p << " s=" << s;
    }
  }
}

TEST(Quantile, RejectsEndpointsAndNaN) {
  const Distribution d = normal();
  for (double u : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    EXPECT_EQ(kind_of([&] { d.quantile(u); }), ErrorKind::kDomain) << u;
    EXPECT_EQ(kind_of([&] { d.tail_quantile(u); }), ErrorKind::kDomain) << u;
  }
}

TEST(Quantile, GaloisInequalitiesOnRandomLevels) {
  RandomStream rng(11);
  for (const auto& d : all_families()) {
    const bool continuous = d.kind() == DistKind::kContinuous;
    // cdf(q(u)) >= u can miss by rounding in the last place of a
    // continuous cdf; the atoms of discrete laws leave no such slack.
    const double slack = continuous ? 1e-12 : 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double u = rng.uniform();
      const double q = d.quantile(u);
      ASSERT_GE(d.cdf(q), u - slack) << d.spec() << " u=" << u;
      const double scale = std::max(1.0, std::fabs(q));
      ASSERT_LE(d.cdf(q - 1e-9 * scale), u + 1e-12) << d.spec() << " u=" << u;
    }
  }
}

TEST(Quantile, NondecreasingOnSortedGrid) {
  for (const auto& d : all_families()) {
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 1; i < 2000; ++i) {
      const double q = d.quantile(i / 2000.0);
      ASSERT_GE(q, prev) << d.spec();
      prev = q;
    }
  }
}

TEST(Quantile, ContinuousRoundTrip) {
  RandomStream rng(12);
  for (const auto& d : continuous_families()) {
    for (int i = 0; i < 1000; ++i) {
      const double u = rng.uniform();
      ASSERT_NEAR(d.cdf(d.quantile(u)), u, 1e-10) << d.spec();
    }
  }
}

TEST(Quantile, TailFormAgreesWithComplement) {
  for (const auto& d : continuous_families()) {
    for (double s : {0.9, 0.5, 0.1, 1e-3}) {
      const double a = d.tail_quantile(s);
      const double b = d.quantile(1.0 - s);
      EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::fabs(b))) << d.spec();
    }
  }
}

TEST(Quantile, TailFormKeepsDigitsNearTheTop) {
  // 1 - 1e-18 rounds to 1, so only the tail form can see this level.
  EXPECT_NEAR(exponential().tail_quantile(1e-18), 18.0 * std::log(10.0),
              1e-12);
  EXPECT_NEAR(pareto(2.0).tail_quantile(1e-18), 1e9, 1e-3);
  EXPECT_DOUBLE_EQ(uniform().upper_gap(1e-18), 1e-18);
}

TEST(Quantile, NormalUpperTailAgainstBisectionOracle) {
  for (double s : {1e-3, 1e-6, 1e-10}) {
    // Bisect on -(1 - F), which is nondecreasing and keeps the tail digits.
    const long double ref = oracle::bisect_quantile(
        [](long double x) { return -oracle::normal_cdf(-x); }, -s, 0.0L,
        10.0L, 1e-15L);
    EXPECT_NEAR(normal().tail_quantile(s), static_cast<double>(ref), 1e-6);
  }
}

TEST(QuantileSpread, MatchesDifferenceAwayFromTheEdge) {
  for (const auto& d : continuous_families()) {
    const double a = 0.2, b = 0.4;
    EXPECT_NEAR(d.quantile_spread(a, b),
                d.tail_quantile(a) - d.tail_quantile(b), 1e-12) << d.spec();
  }
  EXPECT_DOUBLE_EQ(exponential(2.0).quantile_spread(1e-300, 2e-300),
                   std::log(2.0) / 2.0);
}

TEST(NumericQuantile, SpecExamples) {
  const auto ucdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_NEAR(numeric_quantile(ucdf, 0.7), 0.7, 1e-10);
  const auto ncdf = [](double x) { return normal().cdf(x); };
  EXPECT_NEAR(numeric_quantile(ncdf, 0.5), 0.0, 1e-10);
  const long double ref = oracle::bisect_quantile(
      oracle::normal_cdf, 0.975L, -10.0L, 10.0L, 1e-15L);
  EXPECT_NEAR(numeric_quantile(ncdf, 0.975), static_cast<double>(ref), 1e-9);
  EXPECT_NEAR(numeric_quantile(ncdf, 0.975), normal().quantile(0.975), 1e-9);
}

TEST(NumericQuantile, AgreesWithAnalyticQuantiles) {
  RandomStream rng(13);
  for (const auto& d : all_families()) {
    const BracketPolicy policy = BracketPolicy::for_support(d.support());
    const auto cdf = [&](double x) { return d.cdf(x); };
    for (int i = 0; i < 200; ++i) {
      const double u = 0.001 + 0.998 * rng.uniform();
      const double exact = d.quantile(u);
      ASSERT_NEAR(numeric_quantile(cdf, u, policy), exact,
                  1e-9 * std::max(1.0, std::fabs(exact)))
          << d.spec() << " u=" << u;
    }
  }
}

TEST(NumericQuantile, TakesTheRightEdgeOfAFlatStretch) {
  // cdf is 0.5 on [1, 2): inf{x : F(x) > 0.5} = 2.
  const auto cdf = [](double x) {
    if (x < 0.0) return 0.0;
    if (x < 1.0) return 0.5 * x;
    if (x < 2.0) return 0.5;
    return std::min(1.0, 0.5 + 0.5 * (x - 2.0));
  };
  EXPECT_NEAR(numeric_quantile(cdf, 0.5), 2.0, 1e-11);
  EXPECT_NEAR(numeric_quantile(cdf, 0.25), 0.5, 1e-11);
}

TEST(NumericQuantile, Errors) {
  const auto capped = [](double x) { return x < 0.0 ? 0.0 : 0.4; };
  EXPECT_EQ(kind_of([&] { numeric_quantile(capped, 0.5); }),
            ErrorKind::kBracketing);
  const auto decreasing = [](double x) { return 1.0 / (1.0 + std::exp(x)); };
  EXPECT_EQ(kind_of([&] { numeric_quantile(decreasing, 0.3); }),
            ErrorKind::kContract);
  const auto ucdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_EQ(kind_of([&] { numeric_quantile(ucdf, 1.0); }), ErrorKind::kDomain);
}

TEST(Custom, UsesNumericInversion) {
  // Logistic law, quantile log(u/(1-u)).
  const Distribution d = custom("logistic", DistKind::kContinuous, {},
                                [](double x) { return 1.0 / (1.0 + std::exp(-x)); });
  for (double u : {0.01, 0.3, 0.5, 0.9}) {
    EXPECT_NEAR(d.quantile(u), std::log(u / (1.0 - u)), 1e-9);
  }
  EXPECT_NEAR(d.tail_quantile(0.1), std::log(9.0), 1e-9);
}

TEST(Cdf, MonotoneAndRightContinuous) {
  for (const auto& d : all_families()) {
    double prev = 0.0;
    for (int i = -400; i <= 400; ++i) {
      const double x = i / 40.0;
      const double f = d.cdf(x);
      ASSERT_GE(f, prev) << d.spec() << " x=" << x;
      ASSERT_GE(f, 0.0);
      ASSERT_LE(f, 1.0);
      prev = f;
      ASSERT_NEAR(d.cdf(x + 1e-12), f, 1e-9) << d.spec() << " x=" << x;
    }
  }
}

TEST(Cdf, GeometricStepsAtIntegers) {
  const Distribution g = geometric(0.5);
  for (int t = 0; t < 10; ++t) {
    for (double off : {0.0, 0.25, 0.999}) {
      EXPECT_EQ(g.cdf(t + off), g.cdf(t));
    }
  }
  EXPECT_EQ(g.cdf(-0.5), 0.0);
  EXPECT_EQ(g.cdf(2.9), 0.875);
}

TEST(Sampling, UniformSamplesAreTheRawUniforms) {
  RandomStream a(2024), b(2024);
  const auto xs = sample_quantile_transform(uniform(), a, 1000);
  for (double x : xs) ASSERT_EQ(x, b.uniform());
}

TEST(Sampling, DegenerateIsConstant) {
  RandomStream rng(5);
  for (double x : sample_quantile_transform(degenerate(-1.25), rng, 100)) {
    ASSERT_EQ(x, -1.25);
  }
}

TEST(Sampling, ExponentialPassesKs) {
  RandomStream rng(6);
  const auto xs = sample_quantile_transform(exponential(), rng, 100000);
  const auto ks = ks_one_sample(
      xs, [](double x) { return exponential().cdf(x); }, 0.05);
  EXPECT_TRUE(ks.pass) << ks.statistic << " vs " << ks.threshold;
}

TEST(Sampling, ZeroCountIsADomainError) {
  RandomStream rng(1);
  EXPECT_EQ(kind_of([&] { sample_quantile_transform(normal(), rng, 0); }),
            ErrorKind::kDomain);
}

TEST(Parse, SpecStringsRoundTrip) {
  for (const auto& d : all_families()) {
    const Distribution back = parse_distribution(d.spec());
    EXPECT_EQ(back.spec(), d.spec());
    EXPECT_EQ(back.cdf(0.7), d.cdf(0.7));
  }
}

TEST(Parse, DefaultsAndExamples) {
  EXPECT_EQ(parse_distribution("uniform:").spec(), "uniform:a=0,b=1");
  EXPECT_EQ(parse_distribution("exponential:rate=1").spec(),
            "exponential:rate=1");
  EXPECT_EQ(parse_distribution("pareto:alpha=2").spec(),
            "pareto:alpha=2,scale=1");
  EXPECT_EQ(parse_distribution("geometric:p=0.5").spec(), "geometric:p=0.5");
}

TEST(Parse, Rejections) {
  for (const char* text :
       {"", "cauchy:", "pareto:", "pareto:alpha=", "pareto:alpha=x",
        "pareto:beta=2", "uniform:a=1,b=0", "geometric:p=1.5", "normal",
        "exponential:rate=-1", "uniform:a=0,a=1"}) {
    EXPECT_EQ(kind_of([&] { parse_distribution(text); }), ErrorKind::kDomain)
        << text;
  }
}

}  // namespace
}  // namespace evt
