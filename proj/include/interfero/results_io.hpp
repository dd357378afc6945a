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

// Result persistence.
//
// A run directory holds
//   results.csv    one row per (angle, repetition) cell
//   summary.json   config snapshot and MSE report
//   manifest.json  config, tool version, seed, timestamp, output list
//
// The CSV header is
//   kind,label,angle_index,angle,repetition,coherence,predictability,sum,sum_raw,psd_violation
// with reals in fixed notation, 12 digits after the '.', and '\n' line ends.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "interfero/experiments.hpp"
#include "interfero/stats.hpp"

namespace interfero {

inline constexpr const char* kResultsCsv = "results.csv";
inline constexpr const char* kSummaryJson = "summary.json";
inline constexpr const char* kManifestJson = "manifest.json";
inline constexpr const char* kCsvHeader =
    "kind,label,angle_index,angle,repetition,coherence,predictability,sum,sum_raw,"
    "psd_violation";

std::string tool_version();

/// Fixed notation, 12 decimals.
std::string format_real(double v);

std::string results_csv(const std::vector<ResultRow>& rows);
/// Throws ValidationError naming the line on malformed input.
std::vector<ResultRow> parse_results_csv(const std::string& text);

/// Config snapshot plus MSE report as a JSON document.
std::string summary_json(const ExperimentConfig& config, const MseReport& report);
ExperimentConfig config_from_summary(const std::string& json_text);

struct RunManifest {
  ExperimentConfig config;
  std::string tool_version;
  std::uint64_t master_seed = 0;
  std::string timestamp;  // UTC, ISO 8601
  std::vector<std::string> outputs;
};

std::string manifest_json(const RunManifest& manifest);

/// Writes results.csv and summary.json into `dir` (created if needed) and
/// returns the written paths. Throws IoError with the path on failure.
std::vector<std::filesystem::path> write_results(const ExperimentResult& result,
                                                 const std::filesystem::path& dir);

/// Contents of a run directory as read back from disk.
struct StoredRun {
  ExperimentConfig config;
  std::vector<ResultRow> rows;
};

StoredRun read_run(const std::filesystem::path& dir);

/// MSE report recomputed from stored rows, with theory from the config grid.
MseReport analyze(const StoredRun& run);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace interfero
