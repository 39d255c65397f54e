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

#ifndef EVTLAB_TOOLS_CLI_RANGES_HPP_
#define EVTLAB_TOOLS_CLI_RANGES_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

namespace evt::cli {

enum class Spacing { kGeometric, kLinear };

Spacing parse_spacing(std::string_view text);
std::string_view to_string(Spacing spacing);

inline constexpr std::size_t kDefaultRangeCount = 16;

/// Parses a real number; throws kDomain naming `what` on failure.
double parse_real(std::string_view text, std::string_view what);
std::int64_t parse_integer(std::string_view text, std::string_view what);

/// Range syntax: `start:stop[:count]`, a comma list `a,b,c`, or a single
/// value. Ranges use `spacing` and default to kDefaultRangeCount points.
std::vector<double> parse_real_range(std::string_view text, Spacing spacing,
                                     std::string_view what);
/// Same syntax; geometric ranges are rounded and deduplicated. Values may be
/// written in exponent form (`1e6`) but must be integral.
std::vector<std::int64_t> parse_integer_range(std::string_view text,
                                              Spacing spacing,
                                              std::string_view what);

}  // namespace evt::cli

#endif  // EVTLAB_TOOLS_CLI_RANGES_HPP_
