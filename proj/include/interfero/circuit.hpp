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

// Gates, circuits and exact simulation of few-qubit interferometers.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "interfero/noise.hpp"
#include "interfero/qstate.hpp"

namespace interfero {

enum class GateKind {
  RxNeg,      // [[cos(t/2), i sin(t/2)], [i sin(t/2), cos(t/2)]], i.e. R_X(-t)
  IX,         // [[0, i], [i, 0]]
  Phase,      // diag(1, e^{i phi})
  CX,         // X on target when control is |1>
  CtrlHOpen,  // H on target when control is |0>
  CtrlIX,     // iX on target when control is |1>
  Custom,     // arbitrary unitary on the listed qubits
};

std::string to_string(GateKind kind);

/// One gate application.
///
/// `qubits` is {target} for single-qubit gates and {control, target} for the
/// controlled ones. A 4x4 gate matrix is written in the basis |a b> where a is
/// qubits[0] and b is qubits[1].
struct Gate {
  GateKind kind = GateKind::Custom;
  double angle = 0.0;
  std::vector<std::size_t> qubits;
  std::optional<ComplexMatrix> matrix;  // Custom only
  std::string label;                    // Custom only, informational

  static Gate rx_neg(std::size_t qubit, double theta);
  static Gate ix(std::size_t qubit);
  static Gate phase(std::size_t qubit, double phi);
  static Gate cx(std::size_t control, std::size_t target);
  static Gate ctrl_h_open(std::size_t control, std::size_t target);
  static Gate ctrl_ix(std::size_t control, std::size_t target);
  /// Throws ValidationError if `u` is not a unitary matching qubits.size().
  static Gate custom(ComplexMatrix u, std::vector<std::size_t> qubits, std::string label = {});
};

/// The gate's own 2x2 or 4x4 unitary (not embedded in the register).
ComplexMatrix gate_matrix(const Gate& g);

/// The gate's unitary on the full 2^n-dimensional register.
ComplexMatrix embed(const ComplexMatrix& local, const std::vector<std::size_t>& qubits,
                    std::size_t num_qubits);

class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits);

  /// Throws ValidationError on out-of-range qubits or control == target.
  Circuit& add(Gate g);
  Circuit& append(const Circuit& other);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Product of all gate unitaries, last gate leftmost.
  ComplexMatrix unitary() const;

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

StateVector simulate_statevector(const Circuit& c, const StateVector& initial);

/// Unitary evolution interleaved with the noise model's Kraus channels.
/// Throws ValidationError if a channel is not trace preserving or dimensions
/// disagree.
DensityMatrix simulate_density(const Circuit& c, const NoiseModel& noise,
                               const DensityMatrix& initial);

}  // namespace interfero
