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

#include "healsim/table.hpp"

#include <charconv>
#include <cmath>

#include "healsim/error.hpp"

namespace healsim::io {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Value> row) {
  if (row.size() != columns_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "row has " + std::to_string(row.size()) + " cells, table has " +
                    std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string render(const Value& v) {
  struct Visitor {
    std::string operator()(double d) const { return format_number(d); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(std::uint64_t u) const { return std::to_string(u); }
    std::string operator()(bool b) const { return b ? "1" : "0"; }
    std::string operator()(const std::string& s) const { return quote(s); }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::json to_json_value(const Value& v) {
  struct Visitor {
    nlohmann::json operator()(double d) const {
      return std::isfinite(d) ? nlohmann::json(d) : nlohmann::json(nullptr);
    }
    nlohmann::json operator()(std::int64_t i) const { return i; }
    nlohmann::json operator()(std::uint64_t u) const { return u; }
    nlohmann::json operator()(bool b) const { return b; }
    nlohmann::json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ',';
    out += quote(columns_[c]);
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += render(row[c]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json Table::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[columns_[c]] = to_json_value(row[c]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<std::vector<double>> read_numeric_csv(
    std::string_view text, const std::vector<std::string>& columns) {
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> order;  // file column -> requested column
  int line_no = 0;
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (trim(line).empty()) continue;

    const auto fields = split_fields(line);
    if (header) {
      header = false;
      std::vector<bool> seen(columns.size(), false);
      int col = 1;
      for (const auto f : fields) {
        const auto name = trim(f);
        std::size_t k = 0;
        while (k < columns.size() && columns[k] != name) ++k;
        if (k == columns.size()) {
          throw ParseError("unexpected column '" + std::string(name) + "'", line_no, col);
        }
        if (seen[k]) {
          throw ParseError("duplicate column '" + std::string(name) + "'", line_no, col);
        }
        seen[k] = true;
        order.push_back(k);
        col += static_cast<int>(f.size()) + 1;
      }
      for (std::size_t k = 0; k < columns.size(); ++k) {
        if (!seen[k]) throw ParseError("missing column '" + columns[k] + "'", line_no, 1);
      }
      continue;
    }
    if (fields.size() != order.size()) {
      throw ParseError("expected " + std::to_string(order.size()) + " fields, found " +
                           std::to_string(fields.size()),
                       line_no, 1);
    }
    std::vector<double> row(columns.size());
    int col = 1;
    for (std::size_t f = 0; f < fields.size(); ++f) {
      const auto cell = trim(fields[f]);
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw ParseError("not a number: '" + std::string(cell) + "'", line_no, col);
      }
      row[order[f]] = v;
      col += static_cast<int>(fields[f].size()) + 1;
    }
    rows.push_back(std::move(row));
  }
  if (header) throw ParseError("missing header", 1, 1);
  return rows;
}

std::string matrix_csv(const std::vector<double>& values, int nx, int ny) {
  std::string out;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (i) out += ',';
      out += format_number(values[static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) +
                                  static_cast<std::size_t>(i)]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace healsim::io
