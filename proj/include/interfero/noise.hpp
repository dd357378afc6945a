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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "interfero/qstate.hpp"

namespace interfero {

enum class GateKind;

/// Single-qubit channel rho -> sum_k K_k rho K_k^dagger.
struct KrausChannel {
  std::string name;
  std::vector<ComplexMatrix> ops;

  /// rho -> (1 - p) rho + p I/2.
  static KrausChannel depolarizing(double p);
  /// |1> decays to |0> with probability gamma.
  static KrausChannel amplitude_damping(double gamma);
  /// Off-diagonals shrink by sqrt(1 - lambda).
  static KrausChannel phase_damping(double lambda);

  bool is_trace_preserving(double tol = kEvolutionTol) const;
};

/// Classical bit-flip on readout, identical for every qubit.
struct ReadoutError {
  double p01 = 0.0;  // P(read 1 | qubit in |0>)
  double p10 = 0.0;  // P(read 0 | qubit in |1>)

  bool empty() const { return p01 == 0.0 && p10 == 0.0; }
};

/// Per-gate noise assignments.
///
/// After every gate, each channel in `after_each_gate` and then each channel
/// in `per_kind[gate.kind]` is applied to every qubit the gate touches.
struct NoiseModel {
  std::vector<KrausChannel> after_each_gate;
  std::map<GateKind, std::vector<KrausChannel>> per_kind;
  ReadoutError readout;

  bool empty() const;
  /// Throws ValidationError naming the first non-trace-preserving channel or
  /// out-of-range readout probability.
  void validate() const;
  std::vector<const KrausChannel*> channels_for(GateKind kind) const;
};

/// Pushes outcome probabilities through the readout confusion, qubit by qubit.
/// Index convention as in qstate.hpp.
std::vector<double> apply_readout(std::vector<double> probabilities, const ReadoutError& err);

}  // namespace interfero
