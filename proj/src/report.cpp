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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zeno::report {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw std::invalid_argument("CsvTable needs a header");
  for (const auto& h : header_) {
    if (h.empty() || h.find_first_of(",\n\r\"") != std::string::npos) {
      throw std::invalid_argument("invalid CSV column name '" + h + "'");
    }
  }
}

void CsvTable::add_row(std::vector<double> row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("CsvTable row width does not match header");
  }
  for (double v : row) {
    if (!std::isfinite(v)) throw std::invalid_argument("CsvTable cells must be finite");
  }
  rows_.push_back(std::move(row));
}

std::size_t CsvTable::column_index(const std::string& name) const {
  const auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end()) throw std::out_of_range("no column named " + name);
  return static_cast<std::size_t>(it - header_.begin());
}

std::vector<double> CsvTable::column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[c]);
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return buf.data();
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.num_columns(); ++i) {
    if (i > 0) out += ',';
    out += table.header()[i];
  }
  out += '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.2f", v);
  return buf.data();
}

constexpr std::array<const char*, 8> kPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string to_svg(const CsvTable& table, const SvgOptions& opts) {
  const double left = 70, right = 170, top = 40, bottom = 55;
  const double w = opts.width, h = opts.height;
  const double pw = w - left - right, ph = h - top - bottom;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& r : table.rows()) {
    xmin = std::min(xmin, r[0]);
    xmax = std::max(xmax, r[0]);
    for (std::size_t c = 1; c < r.size(); ++c) {
      ymin = std::min(ymin, r[c]);
      ymax = std::max(ymax, r[c]);
    }
  }
  if (table.num_rows() == 0 || table.num_columns() < 2) {
    xmin = ymin = 0.0;
    xmax = ymax = 1.0;
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width
     << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width << ' '
     << opts.height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"15\">"
     << escape_xml(opts.title) << "</text>\n";
  os << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\""
     << fixed(pw) << "\" height=\"" << fixed(ph)
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    os << "<text x=\"" << fixed(sx(fx)) << "\" y=\"" << fixed(top + ph + 18)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << format_number(fx) << "</text>\n";
    os << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(sy(fy) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << format_number(fy) << "</text>\n";
  }
  os << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"" << fixed(h - 12)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << escape_xml(opts.x_label.empty() ? table.header()[0] : opts.x_label)
     << "</text>\n";
  os << "<text x=\"16\" y=\"" << fixed(top + ph / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        "transform=\"rotate(-90 16 "
     << fixed(top + ph / 2) << ")\">" << escape_xml(opts.y_label) << "</text>\n";

  for (std::size_t c = 1; c < table.num_columns(); ++c) {
    const char* colour = kPalette[(c - 1) % kPalette.size()];
    os << "<polyline fill=\"none\" stroke=\"" << colour
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t r = 0; r < table.num_rows(); ++r) {
      if (r > 0) os << ' ';
      os << fixed(sx(table.rows()[r][0])) << ',' << fixed(sy(table.rows()[r][c]));
    }
    os << "\"/>\n";
    const double ly = top + 14.0 * static_cast<double>(c);
    os << "<line x1=\"" << fixed(left + pw + 10) << "\" y1=\"" << fixed(ly - 4)
       << "\" x2=\"" << fixed(left + pw + 28) << "\" y2=\"" << fixed(ly - 4)
       << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << fixed(left + pw + 32) << "\" y=\"" << fixed(ly)
       << "\" font-family=\"sans-serif\" font-size=\"11\">"
       << escape_xml(table.header()[c]) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace zeno::report
