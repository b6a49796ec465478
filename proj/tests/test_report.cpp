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

#include "zeno/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "gtest/gtest.h"

using namespace zeno::report;

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(12716), "12716");
  EXPECT_EQ(format_number(1e-15), "1e-15");
}

TEST(CsvTable, Validation) {
  EXPECT_THROW(CsvTable({}), std::invalid_argument);
  EXPECT_THROW(CsvTable({"a,b"}), std::invalid_argument);
  CsvTable t({"x", "y"});
  EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
  EXPECT_THROW(t.add_row({1.0, std::nan("")}), std::invalid_argument);
  EXPECT_THROW(t.add_row({1.0, std::numeric_limits<double>::infinity()}),
               std::invalid_argument);
  EXPECT_THROW((void)t.column("z"), std::out_of_range);
}

TEST(CsvTable, SerializesWithLfEndings) {
  CsvTable t({"t", "F"});
  t.add_row({0.0, 1.0});
  t.add_row({0.5, 0.25});
  EXPECT_EQ(to_csv(t), "t,F\n0,1\n0.5,0.25\n");
  EXPECT_EQ(t.column("F"), (std::vector<double>{1.0, 0.25}));
}

TEST(Svg, OnePolylinePerSeriesAndDeterministic) {
  CsvTable t({"t", "a", "b"});
  for (int i = 0; i < 5; ++i) t.add_row({0.1 * i, 1.0 - 0.1 * i, 0.5});
  const std::string svg = to_svg(t, {"title <1>", "t", "F"});
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("title &lt;1&gt;"), std::string::npos);
  std::size_t lines = 0;
  for (std::size_t p = svg.find("<polyline"); p != std::string::npos;
       p = svg.find("<polyline", p + 1)) {
    ++lines;
  }
  EXPECT_EQ(lines, 2u);
  EXPECT_EQ(svg, to_svg(t, {"title <1>", "t", "F"}));
}

TEST(Svg, EmptyTableStillRenders) {
  const std::string svg = to_svg(CsvTable({"t"}));
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(WriteFile, RoundTripsBytes) {
  const auto path = std::filesystem::temp_directory_path() / "zeno_report_test.csv";
  write_file(path, "a\nb\n");
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "a\nb\n");
  std::filesystem::remove(path);
  EXPECT_ANY_THROW(write_file("/nonexistent-dir/x.csv", "x"));
}
