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

#include "evtlab/nonlinear_evt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "evtlab/error.hpp"

namespace evt {
namespace {

bool is_standard_uniform(const Distribution& base) {
  return base.has_upper_gap() && base.support().lower == 0.0 &&
         base.support().upper == 1.0;
}

double tail_mass(HnForm form, std::int64_t n, double x) {
  const double nd = static_cast<double>(n);
  return form == HnForm::kExp ? -std::expm1(-x / nd) : x / nd;
}

}  // namespace

MonotoneFn build_g_n(const Distribution& target, std::int64_t n) {
  if (n < 1) fail(ErrorKind::kDomain, "build_g_n needs n >= 1");
  const double nd = static_cast<double>(n);
  auto fn = [target, nd](double x) {
    if (std::isnan(x) || !(x < 1.0)) {
      std::ostringstream os;
      os << "g_n(x) = G^<-(e^{-n(1 - x)}) needs x < 1, got " << x;
      fail(ErrorKind::kDomain, os.str());
    }
    return target.quantile_at_exp(nd * (1.0 - x));
  };
  auto at_one_minus = [target, nd](double d) {
    if (std::isnan(d) || !(d > 0.0)) {
      fail(ErrorKind::kDomain, "g_n(1 - d) needs d > 0");
    }
    return target.quantile_at_exp(nd * d);
  };
  return MonotoneFn(std::move(fn), Monotonicity::kNondecreasing,
                    std::move(at_one_minus));
}

MonotoneFn build_g_n_general(const Distribution& target,
                             const Distribution& base, std::int64_t n) {
  if (base.kind() == DistKind::kDiscrete) {
    fail(ErrorKind::kUnsupportedBase,
         base.spec() + " is discrete; G^<-(e^{-n(1 - F(x))}) needs a "
                       "continuous base");
  }
  if (is_standard_uniform(base)) return build_g_n(target, n);
  if (n < 1) fail(ErrorKind::kDomain, "build_g_n_general needs n >= 1");
  const double nd = static_cast<double>(n);
  auto fn = [target, base, nd](double x) {
    const double tail = base.survival(x);
    if (!(tail > 0.0)) {
      std::ostringstream os;
      os << "g_n(x) needs F(x) < 1, got x = " << x << " for " << base.spec();
      fail(ErrorKind::kDomain, os.str());
    }
    return target.quantile_at_exp(nd * tail);
  };
  return MonotoneFn(std::move(fn), Monotonicity::kNondecreasing);
}

MonotoneFn affine_normalizer(const NormingConstants& constants) {
  if (!(constants.a_n != 0.0)) {
    fail(ErrorKind::kDegenerateNormalization, "affine normalizer with a_n = 0");
  }
  const double a = constants.a_n;
  const double b = constants.b_n;
  return MonotoneFn([a, b](double t) { return (t - b) / a; },
                    a < 0.0 ? Monotonicity::kNonincreasing
                            : Monotonicity::kNondecreasing);
}

NormalizerSequence::NormalizerSequence(std::optional<Distribution> target,
                                       Distribution base,
                                       NormalizerBuilder builder)
    : target_(std::move(target)),
      base_(std::move(base)),
      builder_(std::move(builder)) {
  if (!builder_) fail(ErrorKind::kDomain, "normalizer sequence needs a builder");
}

NormalizerSequence NormalizerSequence::construction(Distribution target,
                                                    Distribution base) {
  if (base.kind() == DistKind::kDiscrete) {
    fail(ErrorKind::kUnsupportedBase,
         base.spec() + " is discrete; the quantile construction needs a "
                       "continuous base");
  }
  NormalizerBuilder builder = [target, base](std::int64_t n) {
    return build_g_n_general(target, base, n);
  };
  return NormalizerSequence(target, base, std::move(builder));
}

NormalizerSequence NormalizerSequence::affine(Distribution base) {
  NormalizerBuilder builder = [base](std::int64_t n) {
    return affine_normalizer(norming_constants(base, n));
  };
  return NormalizerSequence(std::nullopt, base, std::move(builder));
}

bool nondegeneracy_check(std::span<const std::pair<double, double>> values,
                         double tol) {
  if (values.size() < 2) {
    fail(ErrorKind::kDomain, "nondegeneracy check needs at least two points");
  }
  if (std::isnan(tol) || tol < 0.0) {
    fail(ErrorKind::kDomain, "nondegeneracy check needs tol >= 0");
  }
  const bool distinct_x =
      std::any_of(values.begin(), values.end(), [&](const auto& point) {
        return point.first != values.front().first;
      });
  if (!distinct_x) {
    fail(ErrorKind::kDomain, "nondegeneracy check needs two distinct x");
  }
  double lo = values.front().second;
  double hi = lo;
  for (const auto& [x, h] : values) {
    if (std::isnan(h)) fail(ErrorKind::kDomain, "nondegeneracy check: NaN h");
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  return hi - lo > tol;
}

std::vector<double> default_x_grid() {
  return geometric_grid(1.0 / 16.0, 16.0, 32);
}

ConvergenceReport convergence_diagnostic(
    const NormalizerSequence& normalizer, std::span<const double> x_grid,
    std::span<const std::int64_t> n_grid, HnForm form, double tol) {
  if (x_grid.size() < 2) {
    fail(ErrorKind::kDomain, "convergence diagnostic needs two or more x");
  }
  if (n_grid.size() < 2) {
    fail(ErrorKind::kDomain, "convergence diagnostic needs two or more n");
  }
  if (!(tol > 0.0)) fail(ErrorKind::kDomain, "tol must be > 0");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1 || (i > 0 && n_grid[i] <= n_grid[i - 1])) {
      fail(ErrorKind::kDomain, "n grid must be positive and increasing");
    }
  }
  const auto [x_min, x_max] = std::minmax_element(x_grid.begin(), x_grid.end());

  const Distribution& base = normalizer.base();
  std::vector<std::vector<double>> table(x_grid.size());
  for (std::int64_t n : n_grid) {
    const MonotoneFn g = normalizer(n);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
      table[i].push_back(h_n_eval(g, base, n, x_grid[i], form));
    }
    const double lo = base.tail_quantile(tail_mass(form, n, *x_max));
    const double hi = base.tail_quantile(tail_mass(form, n, *x_min));
    check_monotone(g, lo, hi);
  }

  ConvergenceReport report;
  report.scale_name = "n";
  report.key_names = {"x"};
  report.value_name = "h";
  for (std::int64_t n : n_grid) report.scales.push_back(static_cast<double>(n));
  report.tol = tol;
  report.window = kCauchyWindow;
  report.converged = true;
  std::vector<std::pair<double, double>> limits;
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    ConvergenceSeries series;
    series.key = {x_grid[i]};
    series.values = std::move(table[i]);
    series.converged = cauchy_tail(series.values, kCauchyWindow, tol);
    series.limit = series.values.back();
    report.converged = report.converged && series.converged;
    limits.emplace_back(x_grid[i], series.limit);
    report.series.push_back(std::move(series));
  }
  report.nondegenerate = nondegeneracy_check(limits, tol);
  return report;
}

}  // namespace evt
