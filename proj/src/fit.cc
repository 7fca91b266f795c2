// Copyright 2026 The fedbco Authors.
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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fedbco/harness.h"

namespace fedbco {
namespace {

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

int ColumnIndex(const std::vector<std::string>& header,
                const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  throw std::runtime_error("no column '" + name + "' in CSV header");
}

double ToDouble(const std::string& s, bool& ok) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  ok = !s.empty() && end == s.c_str() + s.size() && std::isfinite(v);
  return v;
}

}  // namespace

FitResult FitLogLog(const std::vector<double>& xs,
                    const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("FitLogLog: x and y differ in length");
  }
  if (xs.size() < 2) throw std::invalid_argument("FitLogLog: need >= 2 points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  std::vector<double> lx(xs.size());
  std::vector<double> ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw std::invalid_argument("FitLogLog: x and y must be positive");
    }
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("FitLogLog: x values all equal");
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    sse += r * r;
  }
  // A flat response is fitted perfectly by a zero slope.
  fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - sse / syy) : 1.0;
  fit.n_points = static_cast<int>(xs.size());
  return fit;
}

GroupedFit FitCsv(std::istream& csv, const std::string& x_column,
                  const std::string& y_column,
                  const std::string& group_column) {
  std::string line;
  if (!std::getline(csv, line)) throw std::runtime_error("empty CSV");
  const std::vector<std::string> header = SplitCsvLine(line);
  const int xi = ColumnIndex(header, x_column);
  const int yi = ColumnIndex(header, y_column);
  const int gi = group_column.empty() ? -1 : ColumnIndex(header, group_column);
  int si = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "status") si = static_cast<int>(i);
  }

  GroupedFit out;
  // group -> x -> (sum y, count)
  std::map<std::string, std::map<double, std::pair<double, int>>> groups;
  int row_number = 1;
  while (std::getline(csv, line)) {
    ++row_number;
    if (line.empty()) continue;
    const std::vector<std::string> cells = SplitCsvLine(line);
    if (cells.size() != header.size()) {
      out.warnings.push_back("row " + std::to_string(row_number) +
                             ": wrong number of cells, skipped");
      continue;
    }
    if (si >= 0 && cells[si] != "ok" && cells[si] != "uncertified") continue;
    bool okx = false;
    bool oky = false;
    const double x = ToDouble(cells[xi], okx);
    const double y = ToDouble(cells[yi], oky);
    if (!okx || !oky || !(x > 0.0)) {
      out.warnings.push_back("row " + std::to_string(row_number) +
                             ": non-numeric or nonpositive x, skipped");
      continue;
    }
    if (!(y > 0.0)) {
      out.warnings.push_back("row " + std::to_string(row_number) + ": " +
                             y_column + " = " + cells[yi] +
                             " is not positive, excluded");
      continue;
    }
    auto& slot = groups[gi >= 0 ? cells[gi] : std::string()][x];
    slot.first += y;
    slot.second += 1;
  }

  for (const auto& [group, points] : groups) {
    if (points.size() < 3) {
      throw std::runtime_error("group '" + group + "' has " +
                               std::to_string(points.size()) +
                               " distinct x values; need >= 3");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [x, acc] : points) {
      xs.push_back(x);
      ys.push_back(acc.first / acc.second);
    }
    out.fits[group] = FitLogLog(xs, ys);
  }
  return out;
}

}  // namespace fedbco
