// Copyright 2026 The abclab Authors
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

#include "abclab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "abclab/errors.hpp"

namespace abclab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void append_header(std::string& out, std::size_t p, std::size_t d) {
  for (std::size_t i = 0; i < p; ++i) {
    out += "theta_" + std::to_string(i + 1) + ",";
  }
  for (std::size_t j = 0; j < d; ++j) {
    out += "s_" + std::to_string(j + 1) + ",";
  }
  out += "weight,distance";
}

void append_draw(std::string& out, const AcceptedDraw& dr) {
  for (double t : dr.theta) {
    out += format_double(t);
    out += ',';
  }
  for (double s : dr.summary) {
    out += format_double(s);
    out += ',';
  }
  out += format_double(dr.weight);
  out += ',';
  out += format_double(dr.distance);
}

}  // namespace

std::string draws_to_csv(const std::vector<AcceptedDraw>& draws) {
  if (draws.empty()) throw EmptyReport("no draws to serialise");
  std::string out;
  append_header(out, draws.front().theta.size(), draws.front().summary.size());
  out += '\n';
  for (const auto& dr : draws) {
    append_draw(out, dr);
    out += '\n';
  }
  return out;
}

std::string adjusted_draws_to_csv(const std::vector<AcceptedDraw>& original,
                                  const std::vector<AcceptedDraw>& adjusted) {
  if (original.size() != adjusted.size() || original.empty()) {
    throw DimensionMismatch("original vs adjusted draw count");
  }
  const std::size_t p = original.front().theta.size();
  std::string out;
  append_header(out, p, original.front().summary.size());
  for (std::size_t i = 0; i < p; ++i) {
    out += ",theta_adj_" + std::to_string(i + 1);
  }
  out += '\n';
  for (std::size_t k = 0; k < original.size(); ++k) {
    append_draw(out, original[k]);
    for (double t : adjusted[k].theta) {
      out += ',';
      out += format_double(t);
    }
    out += '\n';
  }
  return out;
}

std::vector<AcceptedDraw> draws_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty draws CSV");

  std::size_t p = 0, d = 0;
  {
    std::istringstream hs(line);
    std::string col;
    while (std::getline(hs, col, ',')) {
      if (col.rfind("theta_adj_", 0) == 0) continue;
      if (col.rfind("theta_", 0) == 0) ++p;
      else if (col.rfind("s_", 0) == 0) ++d;
      else if (col != "weight" && col != "distance") {
        throw IoError("unexpected draws CSV column '" + col + "'");
      }
    }
  }
  if (p == 0 || d == 0) throw IoError("draws CSV header lacks theta/s columns");

  std::vector<AcceptedDraw> draws;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t pos = 0;
        vals.push_back(std::stod(cell, &pos));
        if (pos != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw IoError("bad number '" + cell + "' at line " +
                      std::to_string(lineno));
      }
    }
    if (vals.size() < p + d + 2) {
      throw IoError("short row at line " + std::to_string(lineno));
    }
    AcceptedDraw dr;
    dr.theta.assign(vals.begin(), vals.begin() + static_cast<long>(p));
    dr.summary.assign(vals.begin() + static_cast<long>(p),
                      vals.begin() + static_cast<long>(p + d));
    dr.weight = vals[p + d];
    dr.distance = vals[p + d + 1];
    draws.push_back(std::move(dr));
  }
  if (draws.empty()) throw IoError("draws CSV has a header but no rows");
  return draws;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("short write to '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace abclab
