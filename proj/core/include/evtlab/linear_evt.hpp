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

#ifndef EVTLAB_LINEAR_EVT_HPP_
#define EVTLAB_LINEAR_EVT_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "evtlab/distribution.hpp"
#include "evtlab/report.hpp"

namespace evt {

/// Below this |rho| k_rho switches from the closed form to a three-term
/// series in rho.
inline constexpr double kRhoSeriesBand = 1e-6;

/// k_rho(u) = (u^rho - 1)/rho, and log u at rho = 0. Continuous in rho.
double k_rho(double rho, double u);

/// Inverse of k_rho on its range: (1 + rho y)^{1/rho}, e^y at rho = 0.
/// Returns 0 below the range and +inf above it.
double k_rho_inverse(double rho, double y);

/// [F^<-(1 - eps u) - F^<-(1 - eps)] / [F^<-(1 - eps v) - F^<-(1 - eps)].
/// Throws kDegenerateTail when the denominator vanishes.
double dehaan_ratio(const Distribution& dist, double u, double v, double eps);

struct UvPair {
  double u = 0.0;
  double v = 0.0;
};

/// Ordered pairs u != v drawn from {1/4, 1/2, 2, 3, 4}.
std::vector<UvPair> default_uv_grid();

/// Evaluates dehaan_ratio over `eps_grid` for each (u, v) and applies the
/// Cauchy criterion to the last kCauchyWindow values. Needs a strictly
/// decreasing eps grid of at least four points.
ConvergenceReport dehaan_test(const Distribution& dist,
                              std::span<const double> eps_grid,
                              std::span<const UvPair> uv_grid,
                              double tol = 1e-3);

struct RhoEstimate {
  double rho = 0.0;
  double w = 2.0;
  std::vector<std::pair<double, double>> per_scale;  // (eps, rho_hat)
  double spread = 0.0;
};

/// rho_hat(eps) = log(r(eps w) / r(eps)) / log w with
/// r(eps) = F^<-(1 - eps) - F^<-(1 - 2 eps). `rho` is the value at the
/// smallest eps; `spread` is max - min over the last kCauchyWindow scales.
RhoEstimate estimate_rho(const Distribution& dist,
                         std::span<const double> eps_grid, double w = 2.0);

struct NormingConstants {
  std::int64_t n = 0;
  double a_n = 0.0;
  double b_n = 0.0;
};

/// b_n = F^<-(1 - 1/n), a_n = F^<-(1 - 2/n) - b_n (so a_n <= 0).
/// Throws kDegenerateNormalization when a_n == 0.
NormingConstants norming_constants(const Distribution& dist, std::int64_t n);

/// Distribution function of k_rho(omega)/k_rho(2), omega standard
/// exponential: 1 - exp(-k_rho^{-1}(x k_rho(2))).
double limit_cdf(double rho, double x);

enum class ExtremeType { kFrechet, kGumbel, kWeibull };

std::string_view to_string(ExtremeType type);

struct TypeClass {
  ExtremeType type = ExtremeType::kGumbel;
  double rho = 0.0;
};

/// rho < -tol is Frechet, |rho| <= tol Gumbel, rho > tol Weibull.
TypeClass classify_type(double rho, double tol = 1e-2);

}  // namespace evt

#endif  // EVTLAB_LINEAR_EVT_HPP_
