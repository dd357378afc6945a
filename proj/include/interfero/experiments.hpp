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

// Interferometer circuits and full tomography sweeps.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "interfero/circuit.hpp"
#include "interfero/noise.hpp"
#include "interfero/qstate.hpp"
#include "interfero/stats.hpp"

namespace interfero {

enum class ExperimentKind { Bmzi, Pqe };

std::string to_string(ExperimentKind kind);
/// Accepts "bmzi" / "pqe" in any case.
ExperimentKind parse_kind(const std::string& text);
std::size_t num_qubits(ExperimentKind kind);

/// Scalar noise knobs. Every nonzero channel is attached after every gate on
/// each qubit the gate touches, in the order depolarizing, amplitude damping,
/// phase damping.
struct NoiseSpec {
  double depolarizing = 0.0;
  double amplitude_damping = 0.0;
  double phase_damping = 0.0;
  double readout_p01 = 0.0;
  double readout_p10 = 0.0;

  NoiseModel model() const;
  bool operator==(const NoiseSpec&) const = default;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Bmzi;
  std::string label = "q0";
  std::size_t points = 60;
  double angle_min = 0.0;
  double angle_max = 0.0;
  std::uint64_t shots = 1000;
  bool analytic = false;
  std::size_t repetitions = 128;
  std::uint64_t master_seed = 1;
  NoiseSpec noise;

  /// BMZI: alpha on [-pi, pi], m = 128. PQE: phi on [0, 2 pi], m = 32.
  /// Both use 60 grid points and 1000 shots.
  static ExperimentConfig defaults(ExperimentKind kind);

  /// `points` values evenly spaced on [angle_min, angle_max], inclusive.
  std::vector<double> angle_grid() const;

  /// Throws ValidationError whose message starts with the offending field.
  void validate() const;

  bool operator==(const ExperimentConfig&) const = default;
};

/// R_X(-alpha), iX, P(0), then R_X(pi) as the second beamsplitter.
Circuit build_bmzi(double alpha);

/// Spatial mode on q1, polarization on q0:
/// R_X(-pi/2)@q1, CX(q1->q0), iX@q1, P(phi)@q1, R_X(-pi/2)@q1,
/// H@q0 if q1 = |0>, iX@q1 if q0 = |1>.
Circuit build_pqe(double phi);

Circuit build_circuit(ExperimentKind kind, double angle);

/// Closed-form pure-state C and P over the config's grid.
struct TheoryCurves {
  std::vector<double> angles;
  std::vector<double> coherence;
  std::vector<double> predictability;
};

TheoryCurves theory_series(const ExperimentConfig& config);

/// One row of the results table: a single (angle, repetition) cell.
struct ResultRow {
  std::string kind;
  std::string label;
  std::size_t angle_index = 0;
  double angle = 0.0;
  std::size_t repetition = 0;
  double coherence = 0.0;
  double predictability = 0.0;
  double sum = 0.0;      // from the PSD-projected state
  double sum_raw = 0.0;  // from the raw linear-inversion matrix
  double psd_violation = 0.0;

  bool operator==(const ResultRow&) const = default;
};

struct CellRecord {
  ResultRow row;
  DensityMatrix rho;
};

struct ExperimentResult {
  ExperimentConfig config;
  /// Repetition-major: records[r * points + i] is angle i of repetition r.
  std::vector<CellRecord> records;
  TheoryCurves theory;
  std::vector<MetricSeries> series;  // one per repetition
  MseReport report;

  std::vector<ResultRow> rows() const;
};

/// One MetricSeries per repetition. `angles` gives the grid angle for each
/// angle_index and the theory values are recomputed from it.
std::vector<MetricSeries> series_from_rows(const std::vector<ResultRow>& rows,
                                           ExperimentKind kind,
                                           const std::vector<double>& angles);

/// Runs every (angle, repetition) cell: circuit, basis change per tomography
/// setting, noisy simulation, sampling (or exact frequencies), linear
/// inversion, PSD projection and metrics.
///
/// Sampling streams are keyed by (master_seed, angle, repetition, setting), so
/// the output does not depend on `threads`. A reconstruction failure is
/// rethrown as ReconstructionError naming the cell.
ExperimentResult run_sweep(const ExperimentConfig& config, unsigned threads = 1);

}  // namespace interfero
