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

#ifndef EVTLAB_STATS_HPP_
#define EVTLAB_STATS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "evtlab/distribution.hpp"

namespace evt {

/// Right-continuous step function x -> #{samples <= x} / N.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);

  double operator()(double x) const;
  std::size_t size() const noexcept { return sorted_.size(); }
  std::span<const double> sorted_samples() const noexcept { return sorted_; }

 private:
  std::vector<double> sorted_;
};

struct KsResult {
  double statistic = 0.0;
  double n_effective = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Asymptotic Kolmogorov critical value c(alpha): 1.358 at 0.05, 1.628 at
/// 0.01. Other levels are rejected with kDomain.
double ks_critical_value(double alpha);

/// sup |ECDF - cdf| over both one-sided gaps at every jump; threshold
/// c(alpha)/sqrt(N). Needs N >= 20.
KsResult ks_one_sample(std::span<const double> samples, const ScalarFn& cdf,
                       double alpha);

/// sup |ECDF_a - ECDF_b|; n_effective = N_a N_b / (N_a + N_b).
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b,
                       double alpha);

}  // namespace evt

#endif  // EVTLAB_STATS_HPP_
