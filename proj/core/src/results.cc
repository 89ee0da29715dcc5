// Copyright 2026 The ldpcpd Authors.
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

#include "ldpcpd/results.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ldpcpd/error.h"
#include "ldpcpd/version.h"

namespace ldpcpd {
namespace {

std::string FormatNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double ParseNumber(std::string_view s) {
  if (s == "nan") return NAN;
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw DataError("csv: cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> SplitLine(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::size_t ResultTable::Column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw DomainError("result table: no column '" + std::string(name) + "'");
}

double ResultTable::At(std::size_t row, std::string_view column) const {
  return rows.at(row).at(Column(column));
}

ResultFormat ParseResultFormat(std::string_view name) {
  if (name == "csv") return ResultFormat::kCsv;
  if (name == "json") return ResultFormat::kJson;
  throw DomainError("unknown result format '" + std::string(name) + "'");
}

std::string FormatCsv(const ResultTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += FormatNumber(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string FormatJson(const ResultTable& table) {
  nlohmann::ordered_json doc;
  doc["library"] = "ldpcpd";
  doc["version"] = kVersion;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.metadata) meta[k] = v;
  doc["metadata"] = meta;
  doc["columns"] = table.columns;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      if (std::isfinite(row[i])) {
        rec[table.columns[i]] = row[i];
      } else {
        rec[table.columns[i]] = nullptr;
      }
    }
    records.push_back(std::move(rec));
  }
  doc["records"] = records;
  return doc.dump(2) + "\n";
}

ResultTable ParseCsv(std::string_view text) {
  ResultTable table;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto cells = SplitLine(line);
    if (header) {
      for (auto c : cells) table.columns.emplace_back(c);
      header = false;
      continue;
    }
    if (cells.size() != table.columns.size()) {
      throw DataError("csv: row width differs from header");
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (auto c : cells) row.push_back(ParseNumber(c));
    table.rows.push_back(std::move(row));
  }
  if (header) throw DataError("csv: missing header row");
  return table;
}

void WriteResults(const ResultTable& table, const std::filesystem::path& path,
                  ResultFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << (format == ResultFormat::kCsv ? FormatCsv(table) : FormatJson(table));
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace ldpcpd
