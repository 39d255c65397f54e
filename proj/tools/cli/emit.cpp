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

#include "emit.hpp"

#include <cstdio>
#include <fstream>

#include "evtlab/error.hpp"

namespace evt::cli {
namespace {

Json cell_json(const Cell& cell) {
  return std::visit([](const auto& v) { return Json(v); }, cell);
}

std::string render_csv(const Report& report) {
  std::string text = "# config=" + report.config.dump() + "\n";
  if (!report.notes.empty()) {
    text += "# summary=" + report.notes.dump() + "\n";
  }
  for (std::size_t i = 0; i < report.table.columns.size(); ++i) {
    if (i > 0) text += ',';
    text += report.table.columns[i];
  }
  text += '\n';
  for (const auto& row : report.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) text += ',';
      text += format_cell(row[i]);
    }
    text += '\n';
  }
  return text;
}

std::string render_json(const Report& report) {
  Json doc = Json::object();
  doc["config"] = report.config;
  for (const auto& [key, value] : report.body.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  fail(ErrorKind::kDomain,
       "format must be 'csv' or 'json', got '" + std::string(text) + "'");
}

std::string_view to_string(Format format) {
  return format == Format::kCsv ? "csv" : "json";
}

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(cell));
  return buf;
}

std::string render(const Report& report, Format format) {
  return format == Format::kCsv ? render_csv(report) : render_json(report);
}

void emit(const Report& report, Format format, const std::string& path,
          std::ostream& out) {
  const std::string text = render(report, format);
  if (path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open '" + path + "' for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.close();
  if (!file) throw OutputError("failed writing '" + path + "'");
}

Json table_records(const Table& table) {
  Json records = Json::array();
  for (const auto& row : table.rows) {
    Json record = Json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      record[table.columns[i]] = cell_json(row[i]);
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace evt::cli
