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

#include "ranges.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <system_error>

#include "evtlab/error.hpp"
#include "evtlab/report.hpp"

namespace evt::cli {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return parts;
}

[[noreturn]] void bad_value(std::string_view what, std::string_view text,
                            std::string_view why) {
  fail(ErrorKind::kDomain, std::string(what) + ": " + std::string(why) +
                               " in '" + std::string(text) + "'");
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  const std::int64_t count = parse_integer(text, what);
  if (count < 2) bad_value(what, text, "range count must be >= 2");
  return static_cast<std::size_t>(count);
}

struct RangeParts {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = kDefaultRangeCount;
};

// Returns false for comma lists and single values.
bool parse_range_parts(std::string_view text, std::string_view what,
                       RangeParts& parts) {
  if (text.find(':') == std::string_view::npos) return false;
  const auto fields = split(text, ':');
  if (fields.size() > 3) bad_value(what, text, "expected start:stop[:count]");
  parts.start = parse_real(fields[0], what);
  parts.stop = parse_real(fields[1], what);
  if (fields.size() == 3) parts.count = parse_count(fields[2], what);
  return true;
}

}  // namespace

Spacing parse_spacing(std::string_view text) {
  if (text == "geometric") return Spacing::kGeometric;
  if (text == "linear") return Spacing::kLinear;
  fail(ErrorKind::kDomain,
       "spacing must be 'geometric' or 'linear', got '" + std::string(text) +
           "'");
}

std::string_view to_string(Spacing spacing) {
  return spacing == Spacing::kGeometric ? "geometric" : "linear";
}

double parse_real(std::string_view text, std::string_view what) {
  // from_chars rejects a leading '+'; accept it for symmetry with '-'.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    bad_value(what, text, "not a number");
  }
  if (std::isnan(value)) bad_value(what, text, "NaN is not allowed");
  return value;
}

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  const double value = parse_real(text, what);
  if (!std::isfinite(value) || value != std::floor(value)) {
    bad_value(what, text, "not an integer");
  }
  // 2^63 itself is not representable as int64.
  if (std::fabs(value) >= 9223372036854775808.0) {
    bad_value(what, text, "integer out of range");
  }
  return static_cast<std::int64_t>(value);
}

std::vector<double> parse_real_range(std::string_view text, Spacing spacing,
                                     std::string_view what) {
  RangeParts parts;
  if (!parse_range_parts(text, what, parts)) {
    std::vector<double> values;
    for (const auto field : split(text, ',')) {
      values.push_back(parse_real(field, what));
    }
    return values;
  }
  if (spacing == Spacing::kGeometric) {
    if (!(parts.start > 0.0 && parts.stop > 0.0)) {
      bad_value(what, text, "geometric range needs positive endpoints");
    }
    return geometric_grid(parts.start, parts.stop, parts.count);
  }
  return linear_grid(parts.start, parts.stop, parts.count);
}

std::vector<std::int64_t> parse_integer_range(std::string_view text,
                                              Spacing spacing,
                                              std::string_view what) {
  RangeParts parts;
  if (!parse_range_parts(text, what, parts)) {
    std::vector<std::int64_t> values;
    for (const auto field : split(text, ',')) {
      values.push_back(parse_integer(field, what));
    }
    return values;
  }
  if (parts.start != std::floor(parts.start) ||
      parts.stop != std::floor(parts.stop)) {
    bad_value(what, text, "range endpoints must be integers");
  }
  if (spacing == Spacing::kGeometric) {
    if (!(parts.start >= 1.0 && parts.stop >= 1.0)) {
      bad_value(what, text, "geometric range needs endpoints >= 1");
    }
    return integer_geometric_grid(parts.start, parts.stop, parts.count);
  }
  std::vector<std::int64_t> values;
  for (const double x : linear_grid(parts.start, parts.stop, parts.count)) {
    const auto v = static_cast<std::int64_t>(std::llround(x));
    if (values.empty() || values.back() != v) values.push_back(v);
  }
  return values;
}

}  // namespace evt::cli
