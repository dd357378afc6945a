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

// Deconstructed mean squared error.
//
// With per-angle deviations dC_i = C^_i - C_i and dP_i = P^_i - P_i (theory
// minus measurement),
//
//   MSE(C + P) = 1/n sum (dC_i + dP_i)^2 = MSE(C) + MSE(P) + corr,
//   corr       = 2/n sum dC_i dP_i.
//
// A small MSE(C + P) can hide large, anticorrelated MSE(C) and MSE(P); the
// corr term exposes that.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace interfero {

struct MetricSeries {
  std::vector<double> angles;
  std::vector<double> experimental_c;
  std::vector<double> experimental_p;
  std::vector<double> theory_c;
  std::vector<double> theory_p;

  std::size_t size() const { return angles.size(); }
  /// Throws ValidationError unless all arrays share a length n >= 1.
  void validate() const;

  std::vector<double> deviation_c() const;
  std::vector<double> deviation_p() const;
};

/// MSE of the summed deviations. Throws ValidationError on empty or
/// mismatched input.
double mse(std::span<const double> dev_c, std::span<const double> dev_p);

/// 1/n sum x_i^2.
double mean_square(std::span<const double> dev);

double corr_term(std::span<const double> dev_c, std::span<const double> dev_p);
double corr_term(const MetricSeries& series);

struct MseDecomposition {
  double mse_sum = 0.0;
  double mse_c = 0.0;
  double mse_p = 0.0;
  double corr = 0.0;

  /// mse_sum - (mse_c + mse_p + corr); zero up to rounding.
  double residual() const { return mse_sum - (mse_c + mse_p + corr); }
};

/// Each term is evaluated independently from the deviations.
MseDecomposition decompose(const MetricSeries& series);

inline constexpr std::size_t kHistogramBins = 60;

/// Distribution of MSE values over m repeated experiments.
struct MseDistribution {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;  // population (divide by m)
  double min = 0.0;
  double max = 0.0;
  /// Uniform bins on [0, 1]; bin = floor(60 v), values above 1 land in the
  /// last bin and are also counted in `overflow`.
  std::array<std::uint64_t, kHistogramBins> histogram{};
  std::uint64_t overflow = 0;
};

std::size_t histogram_bin(double value);

/// Throws ValidationError on empty input or non-finite values.
MseDistribution summarize(std::span<const double> values);

/// Everything derived from m repetitions of one experiment.
struct MseReport {
  std::vector<MseDecomposition> per_experiment;
  MseDecomposition mean;  // field-wise mean over experiments
  MseDistribution distribution;  // of per_experiment[i].mse_sum
};

MseReport build_report(std::span<const MetricSeries> experiments);

}  // namespace interfero
