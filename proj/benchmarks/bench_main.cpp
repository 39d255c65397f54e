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

#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "evtlab/distribution.hpp"
#include "evtlab/geometric.hpp"
#include "evtlab/linear_evt.hpp"
#include "evtlab/maxima.hpp"
#include "evtlab/nonlinear_evt.hpp"
#include "evtlab/random.hpp"
#include "evtlab/report.hpp"
#include "evtlab/stats.hpp"

namespace {

void BM_Uniform(benchmark::State& state) {
  evt::RandomStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(rng.uniform());
}
BENCHMARK(BM_Uniform);

void BM_NormalQuantile(benchmark::State& state) {
  const auto d = evt::normal();
  evt::RandomStream rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(d.quantile(rng.uniform()));
}
BENCHMARK(BM_NormalQuantile);

void BM_NumericQuantile(benchmark::State& state) {
  const auto d = evt::normal();
  const auto policy = evt::BracketPolicy::for_support(d.support());
  evt::RandomStream rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evt::numeric_quantile(
        [&](double x) { return d.cdf(x); }, rng.uniform(), policy));
  }
}
BENCHMARK(BM_NumericQuantile);

// Direct sampling is O(n) per draw; the exponential representation is O(1).
void BM_MaxDirect(benchmark::State& state) {
  const evt::MaxLaw law(evt::exponential(), state.range(0));
  evt::RandomStream rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(evt::sample_max_direct(law, rng));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxDirect)->RangeMultiplier(10)->Range(10, 100000)->Complexity();

void BM_MaxExponentialRep(benchmark::State& state) {
  const evt::MaxLaw law(evt::exponential(), state.range(0));
  evt::RandomStream rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evt::sample_max_exponential_rep(law, rng));
  }
}
BENCHMARK(BM_MaxExponentialRep)->RangeMultiplier(10)->Range(10, 100000);

void BM_DehaanTest(benchmark::State& state) {
  const auto d = evt::pareto(2.0);
  const auto eps = evt::geometric_grid(1e-2, 1e-6, 16);
  const auto uv = evt::default_uv_grid();
  for (auto _ : state) benchmark::DoNotOptimize(evt::dehaan_test(d, eps, uv));
}
BENCHMARK(BM_DehaanTest);

void BM_ConvergenceDiagnostic(benchmark::State& state) {
  const auto seq = evt::NormalizerSequence::construction(evt::normal(), evt::uniform());
  const auto x = evt::default_x_grid();
  const auto n = evt::integer_geometric_grid(1e2, 1e6, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evt::convergence_diagnostic(seq, x, n, evt::HnForm::kLinear));
  }
}
BENCHMARK(BM_ConvergenceDiagnostic);

void BM_OscillationScan(benchmark::State& state) {
  const evt::GeometricParams half(0.5);
  std::vector<std::int64_t> n(static_cast<std::size_t>(state.range(0)));
  std::iota(n.begin(), n.end(), std::int64_t{1000});
  for (auto _ : state) benchmark::DoNotOptimize(evt::oscillation_scan(half, 0, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OscillationScan)->Arg(1000)->Arg(100000);

void BM_FracLogSearch(benchmark::State& state) {
  const double theta = 1.0 / std::log(2.0);
  const auto horizon = evt::sufficient_search_horizon(theta, 0.40, 0.45);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evt::frac_log_search(theta, 0.40, 0.45, horizon));
  }
}
BENCHMARK(BM_FracLogSearch);

void BM_KsOneSample(benchmark::State& state) {
  const auto d = evt::exponential();
  evt::RandomStream rng(6);
  const auto xs = evt::sample_quantile_transform(d, rng, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evt::ks_one_sample(xs, [&](double x) { return d.cdf(x); }, 0.01));
  }
}
BENCHMARK(BM_KsOneSample)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
