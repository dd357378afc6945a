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

#include "interfero/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "interfero/errors.hpp"

namespace interfero {

namespace {

void require_pair(std::span<const double> a, std::span<const double> b) {
  if (a.empty()) throw ValidationError("MSE needs at least one angle");
  if (a.size() != b.size()) {
    throw ValidationError("deviation arrays differ in length (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  }
}

std::vector<double> difference(const std::vector<double>& theory,
                               const std::vector<double>& measured) {
  std::vector<double> d(theory.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = theory[i] - measured[i];
  return d;
}

}  // namespace

void MetricSeries::validate() const {
  const std::size_t n = angles.size();
  if (n == 0) throw ValidationError("metric series is empty");
  if (experimental_c.size() != n || experimental_p.size() != n || theory_c.size() != n ||
      theory_p.size() != n) {
    throw ValidationError("metric series arrays differ in length");
  }
}

std::vector<double> MetricSeries::deviation_c() const {
  validate();
  return difference(theory_c, experimental_c);
}

std::vector<double> MetricSeries::deviation_p() const {
  validate();
  return difference(theory_p, experimental_p);
}

double mean_square(std::span<const double> dev) {
  if (dev.empty()) throw ValidationError("MSE needs at least one angle");
  double s = 0.0;
  for (double x : dev) s += x * x;
  return s / static_cast<double>(dev.size());
}

double mse(std::span<const double> dev_c, std::span<const double> dev_p) {
  require_pair(dev_c, dev_p);
  double s = 0.0;
  for (std::size_t i = 0; i < dev_c.size(); ++i) {
    const double d = dev_c[i] + dev_p[i];
    s += d * d;
  }
  return s / static_cast<double>(dev_c.size());
}

double corr_term(std::span<const double> dev_c, std::span<const double> dev_p) {
  require_pair(dev_c, dev_p);
  double s = 0.0;
  for (std::size_t i = 0; i < dev_c.size(); ++i) s += dev_c[i] * dev_p[i];
  return 2.0 * s / static_cast<double>(dev_c.size());
}

double corr_term(const MetricSeries& series) {
  return corr_term(series.deviation_c(), series.deviation_p());
}

MseDecomposition decompose(const MetricSeries& series) {
  const auto dc = series.deviation_c();
  const auto dp = series.deviation_p();
  return {mse(dc, dp), mean_square(dc), mean_square(dp), corr_term(dc, dp)};
}

std::size_t histogram_bin(double value) {
  if (!(value > 0.0)) return 0;
  const double scaled = std::floor(value * static_cast<double>(kHistogramBins));
  return std::min(static_cast<std::size_t>(std::min(scaled, 1e9)), kHistogramBins - 1);
}

MseDistribution summarize(std::span<const double> values) {
  if (values.empty()) throw ValidationError("cannot summarize an empty MSE list");
  MseDistribution out;
  out.count = values.size();
  out.min = values.front();
  out.max = values.front();
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw ValidationError("MSE value is not finite");
    sum += v;
    out.min = std::min(out.min, v);
    out.max = std::max(out.max, v);
    ++out.histogram[histogram_bin(v)];
    if (v > 1.0) ++out.overflow;
  }
  const double m = static_cast<double>(values.size());
  out.mean = sum / m;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.std = std::sqrt(ss / m);
  // Keep min <= mean <= max under rounding.
  out.mean = std::clamp(out.mean, out.min, out.max);
  return out;
}

MseReport build_report(std::span<const MetricSeries> experiments) {
  if (experiments.empty()) throw ValidationError("MSE report needs at least one experiment");
  MseReport report;
  std::vector<double> sums;
  for (const auto& s : experiments) {
    report.per_experiment.push_back(decompose(s));
    sums.push_back(report.per_experiment.back().mse_sum);
  }
  const double m = static_cast<double>(experiments.size());
  for (const auto& d : report.per_experiment) {
    report.mean.mse_sum += d.mse_sum / m;
    report.mean.mse_c += d.mse_c / m;
    report.mean.mse_p += d.mse_p / m;
    report.mean.corr += d.corr / m;
  }
  report.distribution = summarize(sums);
  return report;
}

}  // namespace interfero
