// Copyright 2026 The zeno-screen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZENO_REPORT_HPP
#define ZENO_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace zeno::report {

/// Rectangular table of finite numbers with a mandatory header.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<double> row);

  [[nodiscard]] const std::vector<std::string>& header() const { return header_; }
  [[nodiscard]] const std::vector<std::vector<double>>& rows() const { return rows_; }
  [[nodiscard]] std::size_t num_columns() const { return header_.size(); }
  [[nodiscard]] std::size_t num_rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t column_index(const std::string& name) const;
  [[nodiscard]] std::vector<double> column(const std::string& name) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

/// 12 significant digits, locale-independent.
[[nodiscard]] std::string format_number(double v);

/// Comma separated, LF line endings, header first.
[[nodiscard]] std::string to_csv(const CsvTable& table);

struct SvgOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 720;
  int height = 480;
};

/// Line chart of every column against column 0.
[[nodiscard]] std::string to_svg(const CsvTable& table, const SvgOptions& opts = {});

/// Writes `contents` to `path` in binary mode; throws std::runtime_error on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace zeno::report

#endif  // ZENO_REPORT_HPP
