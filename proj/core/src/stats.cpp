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

#include "evtlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "evtlab/error.hpp"

namespace evt {
namespace {

constexpr std::size_t kMinKsSample = 20;

}  // namespace

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples)
    : sorted_(std::move(samples)) {
  if (sorted_.empty()) fail(ErrorKind::kDomain, "empirical cdf: no samples");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double ks_critical_value(double alpha) {
  if (std::fabs(alpha - 0.05) < 1e-12) return 1.358;
  if (std::fabs(alpha - 0.01) < 1e-12) return 1.628;
  std::ostringstream os;
  os << "KS significance must be 0.05 or 0.01, got " << alpha;
  fail(ErrorKind::kDomain, os.str());
}

KsResult ks_one_sample(std::span<const double> samples, const ScalarFn& cdf,
                       double alpha) {
  if (samples.size() < kMinKsSample) {
    fail(ErrorKind::kDomain, "one-sample KS needs at least 20 samples");
  }
  const double critical = ks_critical_value(alpha);
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double statistic = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    if (std::isnan(f) || f < 0.0 || f > 1.0) {
      std::ostringstream os;
      os << "cdf(" << sorted[i] << ") = " << f << " is not a probability";
      fail(ErrorKind::kContract, os.str());
    }
    statistic = std::max({statistic, (static_cast<double>(i) + 1.0) / n - f,
                          f - static_cast<double>(i) / n});
  }
  KsResult result;
  result.statistic = statistic;
  result.n_effective = n;
  result.threshold = critical / std::sqrt(n);
  result.pass = statistic < result.threshold;
  return result;
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b,
                       double alpha) {
  if (a.empty() || b.empty()) {
    fail(ErrorKind::kDomain, "two-sample KS: empty input");
  }
  if (a.size() < kMinKsSample || b.size() < kMinKsSample) {
    fail(ErrorKind::kDomain, "two-sample KS needs at least 20 per sample");
  }
  const double critical = ks_critical_value(alpha);
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());

  double statistic = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < sa.size() && j < sb.size()) {
    const double v = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= v) ++i;
    while (j < sb.size() && sb[j] <= v) ++j;
    statistic = std::max(statistic, std::fabs(static_cast<double>(i) / na -
                                              static_cast<double>(j) / nb));
  }
  // Past the end of either sample the remaining gap only shrinks toward 0.

  KsResult result;
  result.statistic = statistic;
  result.n_effective = na * nb / (na + nb);
  result.threshold = critical / std::sqrt(result.n_effective);
  result.pass = statistic < result.threshold;
  return result;
}

}  // namespace evt
