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

#ifndef EVTLAB_REPORT_HPP_
#define EVTLAB_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evt {

/// Number of trailing grid points that must agree for a Cauchy verdict.
inline constexpr std::size_t kCauchyWindow = 3;

/// True when the last min(window, size) values lie within `tol` of each
/// other.
bool cauchy_tail(std::span<const double> values, std::size_t window,
                 double tol);

/// One probed function value tracked across scales, e.g. the de Haan ratio
/// at (u, v) or h_n at x.
struct ConvergenceSeries {
  std::vector<double> key;
  std::vector<double> values;  // one per scale
  bool converged = false;
  double limit = 0.0;  // value at the finest scale
};

struct ConvergenceReport {
  std::string scale_name;              // "eps" or "n"
  std::vector<std::string> key_names;  // {"u", "v"} or {"x"}
  std::string value_name;              // "ratio" or "h"
  std::vector<double> scales;
  std::vector<ConvergenceSeries> series;
  double tol = 0.0;
  std::size_t window = kCauchyWindow;
  bool converged = false;
  std::optional<bool> nondegenerate;

  bool verdict() const { return converged && nondegenerate.value_or(true); }
};

/// `count` points from start to stop with constant ratio; endpoints exact.
std::vector<double> geometric_grid(double start, double stop,
                                   std::size_t count);
std::vector<double> linear_grid(double start, double stop, std::size_t count);
/// geometric_grid rounded to integers with repeats removed.
std::vector<std::int64_t> integer_geometric_grid(double start, double stop,
                                                 std::size_t count);

}  // namespace evt

#endif  // EVTLAB_REPORT_HPP_
