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

// Plot-ready result tables and their CSV / JSON serialization.

#ifndef LDPCPD_RESULTS_H_
#define LDPCPD_RESULTS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ldpcpd {

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  // Ordered key/value echo of the producing configuration.
  std::vector<std::pair<std::string, std::string>> metadata;

  // Index of a named column; throws DomainError if absent.
  std::size_t Column(std::string_view name) const;
  double At(std::size_t row, std::string_view column) const;
};

enum class ResultFormat { kCsv, kJson };

ResultFormat ParseResultFormat(std::string_view name);

// Numbers are written in shortest round-trip form; non-finite values as
// "inf", "-inf", "nan" in CSV and null in JSON.
std::string FormatCsv(const ResultTable& table);
std::string FormatJson(const ResultTable& table);

// Parses FormatCsv output back into columns and rows (metadata is not
// carried by CSV).
ResultTable ParseCsv(std::string_view text);

// Throws Error naming the path on I/O failure.
void WriteResults(const ResultTable& table, const std::filesystem::path& path,
                  ResultFormat format);

}  // namespace ldpcpd

#endif  // LDPCPD_RESULTS_H_
