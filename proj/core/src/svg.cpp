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

#include "abclab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace abclab {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 690.0;
constexpr double kTop = 48.0;
constexpr double kBottom = 430.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;

  double transform(double v) const { return log ? std::log10(v) : v; }
  bool usable(double v) const { return !log || v > 0.0; }
};

std::vector<double> ticks_for(const Axis& ax) {
  std::vector<double> ticks;
  if (ax.log) {
    const int d0 = static_cast<int>(std::floor(ax.lo));
    const int d1 = static_cast<int>(std::ceil(ax.hi));
    for (int d = d0; d <= d1; ++d) ticks.push_back(std::pow(10.0, d));
    return ticks;
  }
  const double span = ax.hi - ax.lo;
  if (span <= 0.0) return {ax.lo};
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  const double first = std::ceil(ax.lo / step) * step;
  for (double t = first; t <= ax.hi + 1e-9 * span; t += step) ticks.push_back(t);
  return ticks;
}

}  // namespace

std::string render_line_chart(const SvgChart& chart) {
  Axis xa, ya;
  xa.log = chart.log_x;
  ya.log = chart.log_y;
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const auto& s : chart.series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (!xa.usable(x) || !ya.usable(y)) continue;
      xlo = std::min(xlo, xa.transform(x));
      xhi = std::max(xhi, xa.transform(x));
      ylo = std::min(ylo, ya.transform(y));
      yhi = std::max(yhi, ya.transform(y));
    }
  }
  if (!(xlo <= xhi)) {
    xlo = 0.0;
    xhi = 1.0;
  }
  if (!(ylo <= yhi)) {
    ylo = 0.0;
    yhi = 1.0;
  }
  if (xhi - xlo < 1e-12) {
    xlo -= 0.5;
    xhi += 0.5;
  }
  if (yhi - ylo < 1e-12) {
    ylo -= 0.5;
    yhi += 0.5;
  }
  const double ypad = 0.06 * (yhi - ylo);
  ylo -= ypad;
  yhi += ypad;
  xa.lo = xlo;
  xa.hi = xhi;
  ya.lo = ylo;
  ya.hi = yhi;

  auto px = [&](double v) {
    return kLeft + (xa.transform(v) - xa.lo) / (xa.hi - xa.lo) * (kRight - kLeft);
  };
  auto py = [&](double v) {
    return kBottom - (ya.transform(v) - ya.lo) / (ya.hi - ya.lo) * (kBottom - kTop);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) +
         "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) +
         " " + fmt(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt(kWidth / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" +
         chart.title + "</text>\n";

  // frame
  out += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
         fmt(kRight - kLeft) + "\" height=\"" + fmt(kBottom - kTop) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";

  for (double t : ticks_for(xa)) {
    const double x = px(t);
    if (x < kLeft - 0.5 || x > kRight + 0.5) continue;
    out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" +
           fmt(x) + "\" y2=\"" + fmt(kBottom + 5) + "\" stroke=\"#333333\"/>\n";
    out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(x) +
           "\" y2=\"" + fmt(kBottom) + "\" stroke=\"#eeeeee\"/>\n";
    out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kBottom + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           fmt_tick(t) + "</text>\n";
  }
  for (double t : ticks_for(ya)) {
    const double y = py(t);
    if (y < kTop - 0.5 || y > kBottom + 0.5) continue;
    out += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
           fmt(kLeft) + "\" y2=\"" + fmt(y) + "\" stroke=\"#333333\"/>\n";
    out += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
           fmt(kRight) + "\" y2=\"" + fmt(y) + "\" stroke=\"#eeeeee\"/>\n";
    out += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           fmt_tick(t) + "</text>\n";
  }
  out += "<text x=\"" + fmt((kLeft + kRight) / 2) + "\" y=\"" +
         fmt(kHeight - 10) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" +
         chart.x_label + "</text>\n";
  out += "<text x=\"18\" y=\"" + fmt((kTop + kBottom) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 " +
         fmt((kTop + kBottom) / 2) + ")\">" + chart.y_label + "</text>\n";

  std::size_t color = 0;
  double legend_y = kTop + 14.0;
  for (const auto& s : chart.series) {
    const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
    ++color;
    std::string pts;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (!xa.usable(x) || !ya.usable(y)) continue;
      pts += fmt(px(x)) + "," + fmt(py(y)) + " ";
    }
    if (!pts.empty()) {
      out += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
             "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        if (!xa.usable(x) || !ya.usable(y)) continue;
        out += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) +
               "\" r=\"2.5\" fill=\"" + stroke + "\"/>\n";
      }
    }
    out += "<rect x=\"" + fmt(kRight - 150) + "\" y=\"" + fmt(legend_y - 8) +
           "\" width=\"10\" height=\"10\" fill=\"" + stroke + "\"/>\n";
    out += "<text x=\"" + fmt(kRight - 136) + "\" y=\"" + fmt(legend_y + 1) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + s.label +
           "</text>\n";
    legend_y += 16.0;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace abclab
