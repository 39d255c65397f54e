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

#include "evtlab/report.hpp"

#include <algorithm>
#include <cmath>

#include "evtlab/error.hpp"

namespace evt {

bool cauchy_tail(std::span<const double> values, std::size_t window,
                 double tol) {
  if (values.empty()) fail(ErrorKind::kDomain, "cauchy_tail: no values");
  const std::size_t k = std::min(window, values.size());
  const auto tail = values.last(k);
  for (double v : tail) {
    if (!std::isfinite(v)) return false;
  }
  const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
  return *hi - *lo <= tol;
}

std::vector<double> geometric_grid(double start, double stop,
                                   std::size_t count) {
  if (!(start > 0.0) || !(stop > 0.0) || !std::isfinite(start) ||
      !std::isfinite(stop)) {
    fail(ErrorKind::kDomain, "geometric grid needs positive finite endpoints");
  }
  if (count == 0) fail(ErrorKind::kDomain, "grid needs at least one point");
  if (count == 1) return {start};
  std::vector<double> grid(count);
  const double log_start = std::log(start);
  const double step = (std::log(stop) - log_start) / (count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::exp(log_start + step * i);
  }
  grid.front() = start;
  grid.back() = stop;
  return grid;
}

std::vector<double> linear_grid(double start, double stop, std::size_t count) {
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    fail(ErrorKind::kDomain, "linear grid needs finite endpoints");
  }
  if (count == 0) fail(ErrorKind::kDomain, "grid needs at least one point");
  if (count == 1) return {start};
  std::vector<double> grid(count);
  const double step = (stop - start) / (count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + step * i;
  grid.back() = stop;
  return grid;
}

std::vector<std::int64_t> integer_geometric_grid(double start, double stop,
                                                 std::size_t count) {
  std::vector<std::int64_t> out;
  for (double value : geometric_grid(start, stop, count)) {
    const auto n = static_cast<std::int64_t>(std::llround(value));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

}  // namespace evt
