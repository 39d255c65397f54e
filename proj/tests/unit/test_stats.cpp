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

#include <algorithm>
#include <cmath>
#include <vector>

#include "evtlab/distribution.hpp"
#include "evtlab/error.hpp"
#include "evtlab/random.hpp"
#include "evtlab/stats.hpp"

namespace evt {
namespace {

TEST(EmpiricalCdf, SpecExamples) {
  const EmpiricalCdf e({3.0, 1.0, 2.0});
  EXPECT_DOUBLE_EQ(e(2.0), 2.0 / 3.0);
  EXPECT_EQ(e(0.5), 0.0);
  EXPECT_EQ(e(10.0), 1.0);
  EXPECT_EQ(e.size(), 3u);
  EXPECT_TRUE(std::is_sorted(e.sorted_samples().begin(), e.sorted_samples().end()));
  EXPECT_THROW(EmpiricalCdf({}), Error);
}

TEST(EmpiricalCdf, MatchesBruteForceCount) {
  RandomStream rng(1);
  std::vector<double> xs(500);
  for (auto& x : xs) x = std::floor(20.0 * rng.uniform());  // many ties
  const EmpiricalCdf e(xs);
  for (int i = 0; i < 2000; ++i) {
    const double q = 22.0 * rng.uniform() - 1.0;
    const auto count = std::count_if(xs.begin(), xs.end(), [&](double x) { return x <= q; });
    ASSERT_DOUBLE_EQ(e(q), static_cast<double>(count) / xs.size());
  }
  // Right-continuous at the jumps.
  for (double t = 0.0; t < 20.0; t += 1.0) {
    EXPECT_EQ(e(t), e(t + 1e-9));
    EXPECT_LE(e(t - 1e-9), e(t));
  }
}

TEST(KsCritical, Table) {
  EXPECT_EQ(ks_critical_value(0.05), 1.358);
  EXPECT_EQ(ks_critical_value(0.01), 1.628);
  EXPECT_THROW(ks_critical_value(0.1), Error);
}

TEST(KsOneSample, StatisticAgainstBruteForce) {
  RandomStream rng(2);
  std::vector<double> xs(200);
  for (auto& x : xs) x = rng.uniform();
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  const double n = xs.size();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    d = std::max({d, (i + 1) / n - xs[i], xs[i] - i / n});
  }
  const auto r = ks_one_sample(xs, [](double x) { return std::clamp(x, 0.0, 1.0); }, 0.05);
  EXPECT_NEAR(r.statistic, d, 1e-15);
  EXPECT_EQ(r.n_effective, 200.0);
  EXPECT_NEAR(r.threshold, 1.358 / std::sqrt(200.0), 1e-15);
  EXPECT_EQ(r.pass, r.statistic < r.threshold);
}

TEST(KsOneSample, UniformAgainstExponentialFails) {
  RandomStream rng(3);
  std::vector<double> xs(10000);
  for (auto& x : xs) x = rng.uniform();
  const auto r = ks_one_sample(xs, [](double x) { return exponential().cdf(x); }, 0.05);
  EXPECT_GT(r.statistic, 0.3);
  EXPECT_FALSE(r.pass);
}

TEST(KsOneSample, ConstantSampleAgainstContinuousCdf) {
  const std::vector<double> xs(50, 0.0);
  const auto r = ks_one_sample(xs, [](double x) { return normal().cdf(x); }, 0.05);
  EXPECT_GE(r.statistic, 0.5);
}

TEST(KsOneSample, Invariances) {
  RandomStream rng(4);
  std::vector<double> xs(300);
  for (auto& x : xs) x = normal().quantile(rng.uniform());
  const auto cdf = [](double x) { return normal().cdf(x); };
  const double base = ks_one_sample(xs, cdf, 0.05).statistic;
  std::vector<double> shuffled = xs;
  std::reverse(shuffled.begin(), shuffled.end());
  std::rotate(shuffled.begin(), shuffled.begin() + 97, shuffled.end());
  EXPECT_EQ(ks_one_sample(shuffled, cdf, 0.05).statistic, base);
  // Push samples and cdf through t -> exp(t).
  std::vector<double> mapped = xs;
  for (auto& x : mapped) x = std::exp(x);
  const auto mapped_cdf = [](double y) { return y <= 0.0 ? 0.0 : normal().cdf(std::log(y)); };
  EXPECT_NEAR(ks_one_sample(mapped, mapped_cdf, 0.05).statistic, base, 1e-12);
}

TEST(KsOneSample, Calibration) {
  // At alpha = 0.05 about 95 of 100 seeds should pass.
  int passes = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomStream rng(seed);
    const auto xs = sample_quantile_transform(exponential(), rng, 100000);
    passes += ks_one_sample(xs, [](double x) { return exponential().cdf(x); }, 0.05).pass;
  }
  EXPECT_GE(passes, 88);  // binomial(100, 0.95) lower 0.1% tail
}

TEST(KsOneSample, Errors) {
  const std::vector<double> few(19, 0.5);
  EXPECT_THROW(ks_one_sample(few, [](double) { return 0.5; }, 0.05), Error);
  const std::vector<double> xs(30, 0.5);
  try {
    ks_one_sample(xs, [](double) { return 1.5; }, 0.05);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kContract);
  }
}

TEST(KsTwoSample, SpecExamples) {
  RandomStream rng(5);
  std::vector<double> a(100), b(80);
  for (auto& x : a) x = rng.uniform();
  for (auto& x : b) x = 2.0 + rng.uniform();
  const auto same = ks_two_sample(a, a, 0.05);
  EXPECT_EQ(same.statistic, 0.0);
  EXPECT_TRUE(same.pass);
  const auto apart = ks_two_sample(a, b, 0.05);
  EXPECT_EQ(apart.statistic, 1.0);
  EXPECT_FALSE(apart.pass);
  EXPECT_NEAR(apart.n_effective, 100.0 * 80.0 / 180.0, 1e-12);
  EXPECT_NEAR(apart.threshold, 1.358 / std::sqrt(100.0 * 80.0 / 180.0), 1e-15);
}

TEST(KsTwoSample, StatisticAgainstBruteForce) {
  RandomStream rng(6);
  std::vector<double> a(120), b(75);
  for (auto& x : a) x = std::floor(10 * rng.uniform());
  for (auto& x : b) x = std::floor(10 * rng.uniform() + 0.5);
  const EmpiricalCdf ea(a), eb(b);
  double d = 0.0;
  for (double x : a) d = std::max(d, std::fabs(ea(x) - eb(x)));
  for (double x : b) d = std::max(d, std::fabs(ea(x) - eb(x)));
  EXPECT_NEAR(ks_two_sample(a, b, 0.01).statistic, d, 1e-15);
}

TEST(KsTwoSample, Errors) {
  const std::vector<double> empty;
  const std::vector<double> some(30, 1.0);
  EXPECT_THROW(ks_two_sample(empty, some, 0.05), Error);
  EXPECT_THROW(ks_two_sample(some, empty, 0.05), Error);
}

}  // namespace
}  // namespace evt
