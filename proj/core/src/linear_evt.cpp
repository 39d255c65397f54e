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

#include "evtlab/linear_evt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "evtlab/error.hpp"

namespace evt {

double k_rho(double rho, double u) {
  if (std::isnan(rho) || std::isnan(u) || !(u > 0.0) || !std::isfinite(u)) {
    std::ostringstream os;
    os << "k_rho needs u > 0, got u = " << u;
    fail(ErrorKind::kDomain, os.str());
  }
  const double log_u = std::log(u);
  if (std::fabs(rho) < kRhoSeriesBand) {
    // (u^rho - 1)/rho = L + rho L^2/2 + rho^2 L^3/6 + O(rho^3 L^4)
    return log_u * (1.0 + rho * log_u * (0.5 + rho * log_u / 6.0));
  }
  const double z = rho * log_u;
  if (std::fabs(z) < 0.5) return std::expm1(z) / rho;
  return (std::pow(u, rho) - 1.0) / rho;
}

double k_rho_inverse(double rho, double y) {
  if (std::isnan(rho) || std::isnan(y)) {
    fail(ErrorKind::kDomain, "k_rho_inverse: NaN argument");
  }
  if (rho == 0.0) return std::exp(y);
  const double z = rho * y;
  if (!(z > -1.0)) {
    return rho > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::exp(std::log1p(z) / rho);
}

double dehaan_ratio(const Distribution& dist, double u, double v, double eps) {
  if (!(u > 0.0) || !(v > 0.0) || v == 1.0 || !(eps > 0.0) ||
      !(eps * u < 1.0) || !(eps * v < 1.0) || !(eps < 1.0)) {
    std::ostringstream os;
    os << "dehaan_ratio needs u, v > 0, v != 1 and eps u, eps v, eps in "
          "(0, 1); got u = "
       << u << ", v = " << v << ", eps = " << eps;
    fail(ErrorKind::kDomain, os.str());
  }
  const double numerator = dist.quantile_spread(eps * u, eps);
  const double denominator = dist.quantile_spread(eps * v, eps);
  if (denominator == 0.0) {
    std::ostringstream os;
    os << dist.spec() << ": F^<-(1 - eps v) == F^<-(1 - eps) at u = " << u
       << ", v = " << v << ", eps = " << eps;
    fail(ErrorKind::kDegenerateTail, os.str());
  }
  return numerator / denominator;
}

std::vector<UvPair> default_uv_grid() {
  constexpr double kPoints[] = {0.25, 0.5, 2.0, 3.0, 4.0};
  std::vector<UvPair> grid;
  for (double u : kPoints) {
    for (double v : kPoints) {
      if (u != v) grid.push_back({u, v});
    }
  }
  return grid;
}

namespace {

void check_decreasing_grid(std::span<const double> eps_grid,
                           std::size_t min_points) {
  if (eps_grid.size() < min_points) {
    std::ostringstream os;
    os << "eps grid needs at least " << min_points << " points";
    fail(ErrorKind::kDomain, os.str());
  }
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0) || !(eps_grid[i] < 1.0)) {
      fail(ErrorKind::kDomain, "eps grid values must lie in (0, 1)");
    }
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1])) {
      fail(ErrorKind::kDomain, "eps grid must be strictly decreasing");
    }
  }
}

}  // namespace

ConvergenceReport dehaan_test(const Distribution& dist,
                              std::span<const double> eps_grid,
                              std::span<const UvPair> uv_grid, double tol) {
  check_decreasing_grid(eps_grid, 4);
  if (uv_grid.empty()) fail(ErrorKind::kDomain, "dehaan_test: empty uv grid");
  if (!(tol > 0.0)) fail(ErrorKind::kDomain, "dehaan_test: tol must be > 0");

  ConvergenceReport report;
  report.scale_name = "eps";
  report.key_names = {"u", "v"};
  report.value_name = "ratio";
  report.scales.assign(eps_grid.begin(), eps_grid.end());
  report.tol = tol;
  report.window = kCauchyWindow;
  report.converged = true;
  for (const UvPair& uv : uv_grid) {
    ConvergenceSeries series;
    series.key = {uv.u, uv.v};
    series.values.reserve(eps_grid.size());
    for (double eps : eps_grid) {
      series.values.push_back(dehaan_ratio(dist, uv.u, uv.v, eps));
    }
    series.converged = cauchy_tail(series.values, kCauchyWindow, tol);
    series.limit = series.values.back();
    report.converged = report.converged && series.converged;
    report.series.push_back(std::move(series));
  }
  return report;
}

RhoEstimate estimate_rho(const Distribution& dist,
                         std::span<const double> eps_grid, double w) {
  if (!(w > 1.0) || !std::isfinite(w)) {
    fail(ErrorKind::kDomain, "estimate_rho needs w > 1");
  }
  check_decreasing_grid(eps_grid, 1);
  if (!(2.0 * eps_grid.front() * w < 1.0)) {
    fail(ErrorKind::kDomain, "estimate_rho needs 2 eps w < 1 on the grid");
  }

  const auto scale_fn = [&](double eps) {
    const double r = dist.quantile_spread(eps, 2.0 * eps);
    if (r == 0.0) {
      std::ostringstream os;
      os << dist.spec() << ": r(eps) = F^<-(1 - eps) - F^<-(1 - 2 eps) "
         << "vanishes at eps = " << eps;
      fail(ErrorKind::kDegenerateTail, os.str());
    }
    return r;
  };

  RhoEstimate estimate;
  estimate.w = w;
  const double log_w = std::log(w);
  int sign = 0;
  for (double eps : eps_grid) {
    const double r = scale_fn(eps);
    const double r_w = scale_fn(eps * w);
    for (double value : {r, r_w}) {
      const int s = value > 0.0 ? 1 : -1;
      if (sign != 0 && s != sign) {
        std::ostringstream os;
        os << dist.spec() << ": scale function changes sign near eps = "
           << eps;
        fail(ErrorKind::kInconsistentTail, os.str());
      }
      sign = s;
    }
    estimate.per_scale.emplace_back(eps, std::log(r_w / r) / log_w);
  }
  estimate.rho = estimate.per_scale.back().second;
  const std::size_t k = std::min(kCauchyWindow, estimate.per_scale.size());
  double lo = estimate.rho;
  double hi = estimate.rho;
  for (std::size_t i = estimate.per_scale.size() - k;
       i < estimate.per_scale.size(); ++i) {
    lo = std::min(lo, estimate.per_scale[i].second);
    hi = std::max(hi, estimate.per_scale[i].second);
  }
  estimate.spread = hi - lo;
  return estimate;
}

NormingConstants norming_constants(const Distribution& dist, std::int64_t n) {
  if (n < 3) fail(ErrorKind::kDomain, "norming constants need n >= 3");
  const double nd = static_cast<double>(n);
  NormingConstants constants;
  constants.n = n;
  constants.b_n = dist.tail_quantile(1.0 / nd);
  constants.a_n = dist.quantile_spread(2.0 / nd, 1.0 / nd);
  if (constants.a_n == 0.0) {
    std::ostringstream os;
    os << dist.spec() << ": a_n = F^<-(1 - 2/n) - F^<-(1 - 1/n) = 0 at n = "
       << n << " (flat upper quantile)";
    fail(ErrorKind::kDegenerateNormalization, os.str());
  }
  if (constants.a_n > 0.0) {
    fail(ErrorKind::kContract, dist.spec() + ": quantile is not monotone");
  }
  return constants;
}

double limit_cdf(double rho, double x) {
  if (std::isnan(rho) || std::isnan(x)) {
    fail(ErrorKind::kDomain, "limit_cdf: NaN argument");
  }
  const double t = k_rho_inverse(rho, x * k_rho(rho, 2.0));
  if (t <= 0.0) return 0.0;
  if (std::isinf(t)) return 1.0;
  return -std::expm1(-t);
}

std::string_view to_string(ExtremeType type) {
  switch (type) {
    case ExtremeType::kFrechet:
      return "frechet";
    case ExtremeType::kGumbel:
      return "gumbel";
    case ExtremeType::kWeibull:
      return "weibull";
  }
  return "unknown";
}

TypeClass classify_type(double rho, double tol) {
  if (std::isnan(rho) || std::isnan(tol) || tol < 0.0) {
    fail(ErrorKind::kDomain, "classify_type needs a real rho and tol >= 0");
  }
  TypeClass out;
  out.rho = rho;
  if (rho < -tol) {
    out.type = ExtremeType::kFrechet;
  } else if (rho > tol) {
    out.type = ExtremeType::kWeibull;
  } else {
    out.type = ExtremeType::kGumbel;
  }
  return out;
}

}  // namespace evt
