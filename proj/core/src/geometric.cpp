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

#include "evtlab/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "evtlab/error.hpp"

namespace evt {
namespace {

constexpr long double kIntegerSnap = 1e-9L;
constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

// 1/p as an exact integer base when p is (to double precision) a unit
// fraction; 0 otherwise.
std::int64_t integer_base(double p) {
  const double inv = 1.0 / p;
  const double rounded = std::round(inv);
  if (rounded < 2.0 || rounded > 1e9) return 0;
  if (std::fabs(inv - rounded) > 1e-12 * rounded) return 0;
  return static_cast<std::int64_t>(rounded);
}

// Sign of n - base^m, exact. A power past the int64 range compares greater.
int compare_with_power(std::int64_t n, std::int64_t base, std::int64_t m) {
  if (m < 0) return 1;
  std::int64_t power = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    if (power > kInt64Max / base) return -1;
    power *= base;
  }
  return (n > power) - (n < power);
}

void check_unit_interval(double u, const char* what) {
  if (std::isnan(u) || !(u > 0.0) || !(u < 1.0)) {
    std::ostringstream os;
    os << what << " must lie in (0, 1), got " << u;
    fail(ErrorKind::kDomain, os.str());
  }
}

}  // namespace

GeometricParams::GeometricParams(double p) : p_(p) {
  check_unit_interval(p, "geometric p");
  theta_ = -1.0 / std::log(p);
}

double geom_cdf(const GeometricParams& params, double t) {
  if (std::isnan(t)) fail(ErrorKind::kDomain, "geom_cdf: NaN argument");
  if (t < 0.0) return 0.0;
  return 1.0 - std::pow(params.p(), std::floor(t) + 1.0);
}

double geom_survival(const GeometricParams& params, double t) {
  if (std::isnan(t)) fail(ErrorKind::kDomain, "geom_survival: NaN argument");
  if (t < 0.0) return 1.0;
  return std::pow(params.p(), std::floor(t) + 1.0);
}

std::int64_t geom_quantile(const GeometricParams& params, double u) {
  check_unit_interval(u, "geom_quantile tail mass");
  const long double ratio = std::log(static_cast<long double>(u)) /
                            std::log(static_cast<long double>(params.p()));
  const long double nearest = std::round(ratio);
  if (std::fabs(ratio - nearest) < kIntegerSnap) {
    const auto m = static_cast<std::int64_t>(nearest);
    const long double power =
        std::pow(static_cast<long double>(params.p()), nearest);
    return static_cast<long double>(u) > power ? m - 1 : m;
  }
  return static_cast<std::int64_t>(std::floor(ratio));
}

std::int64_t floor_theta_log(const GeometricParams& params, std::int64_t n) {
  if (n < 1) fail(ErrorKind::kDomain, "floor_theta_log needs n >= 1");
  const long double value = -std::log(static_cast<long double>(n)) /
                            std::log(static_cast<long double>(params.p()));
  const long double nearest = std::round(value);
  if (std::fabs(value - nearest) < kIntegerSnap) {
    const auto m = static_cast<std::int64_t>(nearest);
    if (const std::int64_t base = integer_base(params.p()); base != 0) {
      return compare_with_power(n, base, m) >= 0 ? m : m - 1;
    }
  }
  return static_cast<std::int64_t>(std::floor(value));
}

double frac_theta_log(double theta, std::int64_t n) {
  if (n < 1) fail(ErrorKind::kDomain, "frac_theta_log needs n >= 1");
  const long double value =
      static_cast<long double>(theta) * std::log(static_cast<long double>(n));
  return static_cast<double>(value - std::floor(value));
}

namespace {

void check_search_args(double theta, double x, double y) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    fail(ErrorKind::kDomain, "theta must be positive and finite");
  }
  if (!(x >= 0.0) || !(x < y) || !(y <= 1.0)) {
    std::ostringstream os;
    os << "need 0 <= x < y <= 1, got [" << x << ", " << y << "]";
    fail(ErrorKind::kDomain, os.str());
  }
}

}  // namespace

std::int64_t sufficient_search_horizon(double theta, double x, double y) {
  check_search_args(theta, x, y);
  const double growth = std::expm1((y - x) / theta);
  const double bound = theta * std::log(2.0 / growth) - x;
  const double q = std::max(0.0, std::ceil(bound));
  const double right_end = std::exp((q + y) / theta);
  if (!(right_end < 9.0e18)) return kInt64Max;
  return static_cast<std::int64_t>(std::ceil(right_end));
}

FracLogWitness frac_log_search(double theta, double x, double y,
                               std::int64_t n_max) {
  check_search_args(theta, x, y);
  if (n_max < 1) fail(ErrorKind::kDomain, "frac_log_search needs n_max >= 1");
  FracLogWitness witness;
  witness.sufficient_horizon = sufficient_search_horizon(theta, x, y);
  witness.horizon_short = n_max < witness.sufficient_horizon;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double fraction = frac_theta_log(theta, n);
    if (fraction >= x && fraction <= y) {
      witness.n = n;
      witness.fraction = fraction;
      return witness;
    }
  }
  std::ostringstream os;
  os << "no n <= " << n_max << " with frac(theta log n) in [" << x << ", "
     << y << "] for theta = " << theta << "; a horizon of "
     << witness.sufficient_horizon << " is sufficient";
  fail(ErrorKind::kNotFound, os.str());
}

double oscillation_limit(const GeometricParams& params, std::int64_t q,
                         double c) {
  return std::exp(
      -std::pow(params.p(), static_cast<double>(q) + 1.0 - c));
}

OscillationReport oscillation_scan(const GeometricParams& params,
                                   std::int64_t q,
                                   std::span<const std::int64_t> n_values,
                                   std::span<const double> cluster_cs) {
  if (n_values.empty()) fail(ErrorKind::kDomain, "oscillation_scan: no n");
  OscillationReport report;
  report.p = params.p();
  report.q = q;
  report.probe.reserve(n_values.size());
  std::int64_t previous = 0;
  for (std::int64_t n : n_values) {
    if (n <= previous) {
      fail(ErrorKind::kDomain,
           "oscillation_scan: n values must be positive and increasing");
    }
    previous = n;
    OscillationProbe probe;
    probe.n = n;
    probe.m = floor_theta_log(params, n) + q;
    if (probe.m >= 0) {
      const double tail =
          std::pow(params.p(), static_cast<double>(probe.m) + 1.0);
      probe.probability =
          std::exp(static_cast<double>(n) * std::log1p(-tail));
    }
    report.probe.push_back(probe);
  }
  const std::size_t start = report.probe.size() / 2;
  report.lim_inf_est = report.probe[start].probability;
  report.lim_sup_est = report.probe[start].probability;
  for (std::size_t i = start; i < report.probe.size(); ++i) {
    report.lim_inf_est = std::min(report.lim_inf_est,
                                  report.probe[i].probability);
    report.lim_sup_est = std::max(report.lim_sup_est,
                                  report.probe[i].probability);
  }
  for (double c : cluster_cs) {
    if (!(c >= 0.0) || !(c < 1.0)) {
      fail(ErrorKind::kDomain, "cluster point c must lie in [0, 1)");
    }
    report.cluster_points.push_back({c, oscillation_limit(params, q, c)});
  }
  return report;
}

Subsequence subsequence_generator(const GeometricParams& params, double c,
                                  std::span<const std::int64_t> k_range) {
  if (!(c >= 0.0) || !(c < 1.0)) {
    fail(ErrorKind::kDomain, "subsequence offset c must lie in [0, 1)");
  }
  if (k_range.empty()) fail(ErrorKind::kDomain, "subsequence: empty k range");
  const long double base = 1.0L / static_cast<long double>(params.p());
  Subsequence out;
  for (std::int64_t k : k_range) {
    const long double exponent = static_cast<long double>(k) + c;
    if (exponent < 0.0L) {
      fail(ErrorKind::kDomain, "subsequence: k + c must be nonnegative");
    }
    const long double value = std::pow(base, exponent);
    if (!(value < 9.0e18L)) {
      fail(ErrorKind::kDomain, "subsequence: n_k overflows int64");
    }
    const auto n = static_cast<std::int64_t>(std::llround(value));
    if (!out.n.empty() && n <= out.n.back()) {
      ++out.collisions;
      continue;
    }
    out.n.push_back(n);
  }
  return out;
}

}  // namespace evt
