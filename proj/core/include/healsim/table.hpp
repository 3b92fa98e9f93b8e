// Copyright 2026 The HealSim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tabular output. CSV is byte-deterministic: '.' decimal point, no
// thousands separators, LF line endings, shortest round-trip numbers.

#ifndef HEALSIM_TABLE_HPP_
#define HEALSIM_TABLE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace healsim::io {

/// Shortest decimal that round-trips; "nan", "inf", "-inf" for non-finite.
std::string format_number(double value);

using Value = std::variant<double, std::int64_t, std::uint64_t, bool, std::string>;

class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<Value>& row(std::size_t i) const { return rows_[i]; }

  /// Throws if the row width differs from the header.
  void add_row(std::vector<Value> row);

  /// Booleans render as 0/1; strings containing ',', '"' or newlines are
  /// quoted.
  std::string to_csv() const;
  /// Array of objects, one per row; non-finite numbers become null.
  nlohmann::json to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Value>> rows_;
};

/// Numeric CSV with a mandatory header. Columns are matched by name, in any
/// order; extra columns are rejected. Throws ParseError on malformed input.
std::vector<std::vector<double>> read_numeric_csv(
    std::string_view text, const std::vector<std::string>& columns);

/// Row-major matrix, one line per grid row j in increasing order.
std::string matrix_csv(const std::vector<double>& values, int nx, int ny);

}  // namespace healsim::io

#endif  // HEALSIM_TABLE_HPP_
