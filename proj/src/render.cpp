// Copyright 2026 The Interfero Authors
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

#include "interfero/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "interfero/complementarity.hpp"
#include "interfero/errors.hpp"

namespace interfero {

namespace {

constexpr const char* kSumColor = "#000000";
constexpr const char* kCoherenceColor = "#ff7f0e";
constexpr const char* kPredictabilityColor = "#1f77b4";
constexpr const char* kNegativeColor = "red";

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  std::string s = buf;
  // "-0.00" and friends
  if (s.size() > 1 && s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string num(double v) { return fmt("%.2f", v); }

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double left, top, width, height;
  double x_min, x_max, y_max;

  double x(double a) const {
    const double span = x_max - x_min;
    return left + (span == 0.0 ? 0.0 : (a - x_min) / span) * width;
  }
  double y(double v) const { return top + height - (v / y_max) * height; }
};

std::string polyline(const Frame& f, const std::vector<CurvePoint>& pts,
                     double CurvePoint::*field, const char* color, double width,
                     const char* extra) {
  std::string s = "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                  "\" stroke-width=\"" + num(width) + "\"" + extra + " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += num(f.x(pts[i].angle)) + ',' + num(f.y(pts[i].*field));
  }
  return s + "\"/>\n";
}

std::string error_bars(const Frame& f, const std::vector<CurvePoint>& pts,
                       double CurvePoint::*mean, double CurvePoint::*sd, const char* color) {
  std::string d;
  for (const auto& p : pts) {
    const double x = f.x(p.angle);
    const double lo = f.y(p.*mean - p.*sd);
    const double hi = f.y(p.*mean + p.*sd);
    d += "M" + num(x) + ' ' + num(lo) + "V" + num(hi);
    d += "M" + num(x - 2.0) + ' ' + num(lo) + "H" + num(x + 2.0);
    d += "M" + num(x - 2.0) + ' ' + num(hi) + "H" + num(x + 2.0);
  }
  return "<path class=\"error-bar\" fill=\"none\" stroke=\"" + std::string(color) +
         "\" stroke-width=\"0.80\" d=\"" + d + "\"/>\n";
}

}  // namespace

CurveData curve_data(const std::vector<ResultRow>& rows, const ExperimentConfig& config) {
  const auto grid = config.angle_grid();
  const auto series = series_from_rows(rows, config.kind, grid);
  CurveData data;
  data.kind = config.kind;
  data.label = config.label;
  data.repetitions = series.size();
  const double m = static_cast<double>(series.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CurvePoint p;
    p.angle = grid[i];
    p.theory_c = series.front().theory_c[i];
    p.theory_p = series.front().theory_p[i];
    for (const auto& s : series) {
      p.mean_c += s.experimental_c[i] / m;
      p.mean_p += s.experimental_p[i] / m;
      p.mean_sum += (s.experimental_c[i] + s.experimental_p[i]) / m;
    }
    for (const auto& s : series) {
      const double c = s.experimental_c[i];
      const double q = s.experimental_p[i];
      p.std_c += (c - p.mean_c) * (c - p.mean_c) / m;
      p.std_p += (q - p.mean_p) * (q - p.mean_p) / m;
      p.std_sum += (c + q - p.mean_sum) * (c + q - p.mean_sum) / m;
    }
    p.std_c = std::sqrt(p.std_c);
    p.std_p = std::sqrt(p.std_p);
    p.std_sum = std::sqrt(p.std_sum);
    data.points.push_back(p);
  }
  return data;
}

CurveData curve_data(const ExperimentResult& result) {
  return curve_data(result.rows(), result.config);
}

std::string render_curves(const CurveData& data) {
  if (data.points.empty()) throw ValidationError("render_curves: no points");
  const double bound = static_cast<double>((std::size_t{1} << num_qubits(data.kind)) - 1);
  double top = bound;
  for (const auto& p : data.points) {
    top = std::max({top, p.mean_sum + p.std_sum, p.mean_c + p.std_c, p.mean_p + p.std_p});
  }
  const double y_max = std::ceil(top * 1.1 * 4.0) / 4.0;
  const Frame f{60.0, 40.0, 560.0, 330.0, data.points.front().angle, data.points.back().angle,
                y_max};

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
       "viewBox=\"0 0 640 420\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s += "<title>" + xml_escape(data.label) + " (" + to_string(data.kind) + ")</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"420\" fill=\"#ffffff\"/>\n";
  s += "<text x=\"320\" y=\"22\" text-anchor=\"middle\" font-size=\"13\">" +
       xml_escape(data.label) + " " + to_string(data.kind) + ", m = " +
       std::to_string(data.repetitions) + "</text>\n";

  // Axes and ticks.
  s += "<path fill=\"none\" stroke=\"#444444\" stroke-width=\"1.00\" d=\"M" + num(f.left) + ' ' +
       num(f.top) + "V" + num(f.top + f.height) + "H" + num(f.left + f.width) + "\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double a = f.x_min + (f.x_max - f.x_min) * k / 4.0;
    const double x = f.x(a);
    s += "<path stroke=\"#444444\" d=\"M" + num(x) + ' ' + num(f.top + f.height) + "v4\"/>\n";
    s += "<text x=\"" + num(x) + "\" y=\"" + num(f.top + f.height + 16.0) +
         "\" text-anchor=\"middle\">" + num(a) + "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double v = y_max * k / 4.0;
    const double y = f.y(v);
    s += "<path stroke=\"#444444\" d=\"M" + num(f.left - 4.0) + ' ' + num(y) + "h4\"/>\n";
    s += "<text x=\"" + num(f.left - 7.0) + "\" y=\"" + num(y + 4.0) +
         "\" text-anchor=\"end\">" + num(v) + "</text>\n";
  }
  s += "<text x=\"" + num(f.left + f.width / 2.0) + "\" y=\"" + num(f.top + f.height + 36.0) +
       "\" text-anchor=\"middle\">" +
       std::string(data.kind == ExperimentKind::Bmzi ? "alpha" : "phi") + " (rad), range [" +
       num(f.x_min) + ", " + num(f.x_max) + "]</text>\n";

  // Theory underneath.
  std::vector<CurvePoint> theory = data.points;
  for (auto& p : theory) p.mean_sum = p.theory_c + p.theory_p;
  const char* thin = " stroke-opacity=\"0.45\" class=\"theory\"";
  s += polyline(f, theory, &CurvePoint::mean_sum, kSumColor, 0.7, thin);
  s += polyline(f, theory, &CurvePoint::theory_c, kCoherenceColor, 0.7, thin);
  s += polyline(f, theory, &CurvePoint::theory_p, kPredictabilityColor, 0.7, thin);

  s += error_bars(f, data.points, &CurvePoint::mean_sum, &CurvePoint::std_sum, kSumColor);
  s += error_bars(f, data.points, &CurvePoint::mean_c, &CurvePoint::std_c, kCoherenceColor);
  s += error_bars(f, data.points, &CurvePoint::mean_p, &CurvePoint::std_p, kPredictabilityColor);
  s += polyline(f, data.points, &CurvePoint::mean_sum, kSumColor, 1.6, " class=\"mean\"");
  s += polyline(f, data.points, &CurvePoint::mean_c, kCoherenceColor, 1.6, " class=\"mean\"");
  s += polyline(f, data.points, &CurvePoint::mean_p, kPredictabilityColor, 1.6,
                " class=\"mean\"");

  // Legend.
  const std::pair<const char*, const char*> legend[] = {
      {kSumColor, "C + P"}, {kCoherenceColor, "C"}, {kPredictabilityColor, "P"}};
  double lx = f.left + 10.0;
  for (const auto& [color, name] : legend) {
    s += "<path stroke=\"" + std::string(color) + "\" stroke-width=\"2.00\" d=\"M" + num(lx) +
         ' ' + num(f.top + 10.0) + "h16\"/>\n";
    s += "<text x=\"" + num(lx + 20.0) + "\" y=\"" + num(f.top + 14.0) + "\">" + name +
         "</text>\n";
    lx += 70.0;
  }
  s += "</svg>\n";
  return s;
}

SummaryRow summary_row(const std::string& label, const MseReport& report) {
  SummaryRow row;
  row.label = label;
  row.mean = report.distribution.mean;
  row.std = report.distribution.std;
  row.corr = report.mean.corr;
  row.min = report.distribution.min;
  row.max = report.distribution.max;
  row.histogram = report.distribution.histogram;
  return row;
}

std::string sparkline_glyphs(const std::array<std::uint64_t, kHistogramBins>& histogram) {
  static constexpr const char* kLevels[] = {" ", "▁", "▂", "▃", "▄", "▅", "▆", "▇", "█"};
  const std::uint64_t peak = *std::max_element(histogram.begin(), histogram.end());
  std::string out;
  for (auto c : histogram) {
    std::size_t level = 0;
    if (c > 0 && peak > 0) level = static_cast<std::size_t>((8 * c + peak - 1) / peak);
    out += kLevels[level];
  }
  return out;
}

std::string marker_line(const SummaryRow& row) {
  std::string line(kHistogramBins, ' ');
  auto put = [&](double v, char mark) {
    char& slot = line[histogram_bin(v)];
    slot = slot == ' ' ? mark : '*';
  };
  put(row.min, '<');
  put(row.mean, 'o');
  put(row.max, '>');
  return line;
}

SparklineTable render_sparkline_table(const std::vector<SummaryRow>& rows) {
  if (rows.empty()) throw ValidationError("sparkline table needs at least one row");

  SparklineTable out;
  bool any_negative = false;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %8s %8s %9s %8s  %-60s %6s\n", "label", "mean", "std",
                "corr", "min", "MSE histogram [0, 1]", "max");
  out.text += buf;
  for (const auto& r : rows) {
    const bool negative = r.corr < 0.0;
    any_negative = any_negative || negative;
    std::snprintf(buf, sizeof buf, "%-10s %8s %8s %8s%c %8s  ", r.label.c_str(),
                  fmt("%.3f", r.mean).c_str(), fmt("%.3f", r.std).c_str(),
                  fmt("%.3f", r.corr).c_str(), negative ? '!' : ' ', fmt("%.3f", r.min).c_str());
    out.text += buf;
    out.text += sparkline_glyphs(r.histogram);
    std::snprintf(buf, sizeof buf, " %6s\n", fmt("%.2f", r.max).c_str());
    out.text += buf;
    out.text += std::string(49, ' ') + marker_line(r) + '\n';
  }
  if (any_negative) out.text += "! negative correlation\n";

  // SVG variant.
  constexpr double kRowH = 24.0;
  constexpr double kSparkX = 330.0;
  constexpr double kSparkW = 120.0;
  constexpr double kSparkH = 16.0;
  const double height = kRowH * static_cast<double>(rows.size() + 1) + 8.0;
  std::string& s = out.svg;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"" + num(height) +
       "\" viewBox=\"0 0 520 " + num(height) +
       "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"520\" height=\"" + num(height) + "\" fill=\"#ffffff\"/>\n";
  const std::pair<double, const char*> header[] = {{10, "label"}, {90, "mean"}, {150, "std"},
                                                   {210, "corr"},  {270, "min"}, {330, "MSE histogram"},
                                                   {465, "max"}};
  for (const auto& [x, name] : header) {
    s += "<text x=\"" + num(x) + "\" y=\"18.00\" font-weight=\"bold\">" + name + "</text>\n";
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    const double base = kRowH * static_cast<double>(k + 1) + 18.0;
    auto cell = [&](double x, const std::string& text, const char* fill) {
      s += "<text x=\"" + num(x) + "\" y=\"" + num(base) + "\"" +
           (fill ? std::string(" fill=\"") + fill + "\"" : std::string()) + ">" +
           xml_escape(text) + "</text>\n";
    };
    cell(10, r.label, nullptr);
    cell(90, fmt("%.3f", r.mean), nullptr);
    cell(150, fmt("%.3f", r.std), nullptr);
    cell(210, fmt("%.3f", r.corr), r.corr < 0.0 ? kNegativeColor : nullptr);
    cell(270, fmt("%.3f", r.min), nullptr);
    cell(465, fmt("%.2f", r.max), nullptr);

    // Histogram normalized to its tallest bin; min and max dots sit on the
    // baseline, the mean dot on the curve at the height of its own bin.
    const double y0 = base;
    const double peak = static_cast<double>(*std::max_element(r.histogram.begin(), r.histogram.end()));
    s += "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"0.80\" points=\"";
    for (std::size_t b = 0; b < kHistogramBins; ++b) {
      const double x = kSparkX + kSparkW * static_cast<double>(b) / (kHistogramBins - 1);
      const double h = peak > 0 ? static_cast<double>(r.histogram[b]) / peak : 0.0;
      if (b) s += ' ';
      s += num(x) + ',' + num(y0 - kSparkH * h);
    }
    s += "\"/>\n";
    auto dot = [&](double v, double level, const char* cls) {
      const double x = kSparkX + kSparkW * std::clamp(v, 0.0, 1.0);
      s += "<circle class=\"" + std::string(cls) + "\" cx=\"" + num(x) + "\" cy=\"" +
           num(y0 - kSparkH * level) + "\" r=\"1.80\" fill=\"#000000\"/>\n";
    };
    dot(r.min, 0.0, "min");
    dot(r.max, 0.0, "max");
    dot(r.mean, peak > 0 ? static_cast<double>(r.histogram[histogram_bin(r.mean)]) / peak : 0.0,
        "mean");
  }
  s += "</svg>\n";
  return out;
}

}  // namespace interfero
