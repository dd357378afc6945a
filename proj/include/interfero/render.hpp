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

// SVG and plain-text figures: mean curves with error bars, and the MSE
// histogram table with one sparkline per label.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "interfero/experiments.hpp"
#include "interfero/stats.hpp"

namespace interfero {

struct CurvePoint {
  double angle = 0.0;
  double mean_c = 0.0, std_c = 0.0;
  double mean_p = 0.0, std_p = 0.0;
  double mean_sum = 0.0, std_sum = 0.0;
  double theory_c = 0.0, theory_p = 0.0;
};

/// Per-angle mean and population std over repetitions, plus theory.
struct CurveData {
  ExperimentKind kind = ExperimentKind::Bmzi;
  std::string label;
  std::size_t repetitions = 0;
  std::vector<CurvePoint> points;
};

CurveData curve_data(const std::vector<ResultRow>& rows, const ExperimentConfig& config);
CurveData curve_data(const ExperimentResult& result);

/// C + P (black), C (orange), P (blue) mean curves with std error bars over
/// thin theory curves.
std::string render_curves(const CurveData& data);

struct SummaryRow {
  std::string label;
  double mean = 0.0;
  double std = 0.0;
  double corr = 0.0;  // mean corr term over repetitions
  double min = 0.0;
  double max = 0.0;
  std::array<std::uint64_t, kHistogramBins> histogram{};
};

SummaryRow summary_row(const std::string& label, const MseReport& report);

/// 60 glyphs from " ▁▂▃▄▅▆▇█"; the tallest bin gets the full block, empty
/// bins a space.
std::string sparkline_glyphs(const std::array<std::uint64_t, kHistogramBins>& histogram);

/// 60 columns with '<' at the min bin, 'o' at the mean bin and '>' at the max
/// bin; coinciding markers print as '*'.
std::string marker_line(const SummaryRow& row);

struct SparklineTable {
  std::string text;
  std::string svg;
};

/// Columns label, mean, std, corr, min, histogram, max. mean/std/corr/min
/// use 3 decimals and max uses 2. Negative corr is red in the SVG and followed
/// by '!' in the text. Throws ValidationError on an empty row list.
SparklineTable render_sparkline_table(const std::vector<SummaryRow>& rows);

}  // namespace interfero
