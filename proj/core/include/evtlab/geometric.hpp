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

#ifndef EVTLAB_GEOMETRIC_HPP_
#define EVTLAB_GEOMETRIC_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace evt {

/// Parameters of the geometric law F(t) = 1 - p^{floor(t + 1)}, together with
/// theta = -1 / log p, the rate at which floor(theta log n) advances.
class GeometricParams {
 public:
  explicit GeometricParams(double p);

  double p() const noexcept { return p_; }
  double theta() const noexcept { return theta_; }

 private:
  double p_;
  double theta_;
};

double geom_cdf(const GeometricParams& params, double t);
/// p^{floor(t + 1)} for t >= 0, 1 below.
double geom_survival(const GeometricParams& params, double t);

/// F^<-(1 - u) = floor(log u / log p) for tail mass u in (0, 1).
///
/// When log u / log p lands within 1e-9 of an integer m the floor is decided
/// by comparing p^m against u in extended precision: u = p^m gives m (the
/// strict-inequality convention), u > p^m gives m - 1.
std::int64_t geom_quantile(const GeometricParams& params, double u);

/// floor(theta log n) for n >= 1, computed in extended precision with an
/// exact integer-power tie break when 1/p is an integer.
std::int64_t floor_theta_log(const GeometricParams& params, std::int64_t n);

/// Fractional part of theta log n in extended precision.
double frac_theta_log(double theta, std::int64_t n);

/// An n_max for which `frac_log_search` cannot fail. Take the first q >= 0
/// for which [e^{(q+x)/theta}, e^{(q+y)/theta}] is at least 2 long; it then
/// holds an integer n with q + x <= theta log n < q + y, and its right end
/// bounds that n. Saturates at INT64_MAX.
std::int64_t sufficient_search_horizon(double theta, double x, double y);

struct FracLogWitness {
  std::int64_t n = 0;
  double fraction = 0.0;
  std::int64_t sufficient_horizon = 0;
  /// The caller's n_max was below `sufficient_horizon`.
  bool horizon_short = false;
};

/// Smallest n <= n_max with frac(theta log n) in [x, y].
/// Throws kNotFound (message carries the sufficient horizon) if none exists.
FracLogWitness frac_log_search(double theta, double x, double y,
                               std::int64_t n_max);

struct OscillationProbe {
  std::int64_t n = 0;
  std::int64_t m = 0;  // floor(theta log n) + q
  double probability = 0.0;
};

struct ClusterPoint {
  double c = 0.0;
  double limit = 0.0;
};

struct OscillationReport {
  double p = 0.0;
  std::int64_t q = 0;
  std::vector<OscillationProbe> probe;
  double lim_inf_est = 0.0;
  double lim_sup_est = 0.0;
  std::vector<ClusterPoint> cluster_points;
};

/// The limit of P{M_n <= floor(theta log n) + q} along n with
/// frac(theta log n) -> c, namely exp(-p^{q + 1 - c}).
double oscillation_limit(const GeometricParams& params, std::int64_t q,
                         double c);

/// Evaluates P{M_n <= floor(theta log n) + q} = (1 - p^{m+1})^n on each n.
/// lim_inf_est / lim_sup_est are taken over the tail half of `n_values`.
OscillationReport oscillation_scan(const GeometricParams& params,
                                   std::int64_t q,
                                   std::span<const std::int64_t> n_values,
                                   std::span<const double> cluster_cs = {});

struct Subsequence {
  std::vector<std::int64_t> n;
  /// Number of k whose rounded n_k repeated the previous value and was
  /// dropped.
  std::size_t collisions = 0;
};

/// n_k = round(e^{(k + c)/theta}) = round(p^{-(k + c)}) for each k, so that
/// frac(theta log n_k) -> c and n_{k+1}/n_k -> 1/p.
Subsequence subsequence_generator(const GeometricParams& params, double c,
                                  std::span<const std::int64_t> k_range);

}  // namespace evt

#endif  // EVTLAB_GEOMETRIC_HPP_
