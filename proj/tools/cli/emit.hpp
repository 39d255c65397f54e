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

#ifndef EVTLAB_TOOLS_CLI_EMIT_HPP_
#define EVTLAB_TOOLS_CLI_EMIT_HPP_

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace evt::cli {

using Json = nlohmann::ordered_json;

enum class Format { kCsv, kJson };

Format parse_format(std::string_view text);
std::string_view to_string(Format format);

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// What a subcommand produces. The JSON form is `config` followed by the
/// members of `body`; the CSV form is `config` and `notes` as `#` comment
/// lines followed by `table`.
struct Report {
  Json config = Json::object();
  Json body = Json::object();
  Json notes = Json::object();
  Table table;
};

/// Raised when the output file cannot be written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Doubles at 17 significant digits, so they read back exactly.
std::string format_cell(const Cell& cell);

std::string render(const Report& report, Format format);

/// Writes the rendered report to `path`, or to `out` when path is "-".
/// The file is written in one piece after rendering has finished.
void emit(const Report& report, Format format, const std::string& path,
          std::ostream& out);

/// Table rows as an array of objects keyed by column name.
Json table_records(const Table& table);

}  // namespace evt::cli

#endif  // EVTLAB_TOOLS_CLI_EMIT_HPP_
