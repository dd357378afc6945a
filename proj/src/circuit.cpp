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

#include "interfero/circuit.hpp"

#include <cmath>
#include <numbers>

#include "interfero/errors.hpp"

namespace interfero {

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix controlled(const ComplexMatrix& on_zero, const ComplexMatrix& on_one) {
  // |0><0| (x) on_zero + |1><1| (x) on_one, control as the high bit.
  const ComplexMatrix p0{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix p1{{0.0, 0.0}, {0.0, 1.0}};
  return kron(p0, on_zero) + kron(p1, on_one);
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix i_x() { return {{0.0, kI}, {kI, 0.0}}; }
ComplexMatrix hadamard() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {{h, h}, {h, -h}};
}

Gate two_qubit(GateKind kind, std::size_t control, std::size_t target) {
  Gate g;
  g.kind = kind;
  g.qubits = {control, target};
  return g;
}

void apply_channel(ComplexMatrix& rho, const KrausChannel& ch, std::size_t qubit,
                   std::size_t num_qubits) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& k : ch.ops) {
    const ComplexMatrix full = embed(k, {qubit}, num_qubits);
    out = out + full * rho * full.adjoint();
  }
  rho = std::move(out);
}

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RxNeg: return "rx_neg";
    case GateKind::IX: return "ix";
    case GateKind::Phase: return "phase";
    case GateKind::CX: return "cx";
    case GateKind::CtrlHOpen: return "ctrl_h_open";
    case GateKind::CtrlIX: return "ctrl_ix";
    case GateKind::Custom: return "custom";
  }
  return "unknown";
}

Gate Gate::rx_neg(std::size_t qubit, double theta) {
  Gate g;
  g.kind = GateKind::RxNeg;
  g.angle = theta;
  g.qubits = {qubit};
  return g;
}

Gate Gate::ix(std::size_t qubit) {
  Gate g;
  g.kind = GateKind::IX;
  g.qubits = {qubit};
  return g;
}

Gate Gate::phase(std::size_t qubit, double phi) {
  Gate g;
  g.kind = GateKind::Phase;
  g.angle = phi;
  g.qubits = {qubit};
  return g;
}

Gate Gate::cx(std::size_t control, std::size_t target) {
  return two_qubit(GateKind::CX, control, target);
}

Gate Gate::ctrl_h_open(std::size_t control, std::size_t target) {
  return two_qubit(GateKind::CtrlHOpen, control, target);
}

Gate Gate::ctrl_ix(std::size_t control, std::size_t target) {
  return two_qubit(GateKind::CtrlIX, control, target);
}

Gate Gate::custom(ComplexMatrix u, std::vector<std::size_t> qubits, std::string label) {
  if (qubits.empty() || u.rows() != (std::size_t{1} << qubits.size())) {
    throw ValidationError("custom gate: matrix size does not match " +
                          std::to_string(qubits.size()) + " qubit(s)");
  }
  if (!u.is_unitary(kClosedFormTol)) throw ValidationError("custom gate: matrix is not unitary");
  Gate g;
  g.kind = GateKind::Custom;
  g.qubits = std::move(qubits);
  g.matrix = std::move(u);
  g.label = std::move(label);
  return g;
}

ComplexMatrix gate_matrix(const Gate& g) {
  if (!std::isfinite(g.angle)) throw ValidationError("gate angle is not finite");
  switch (g.kind) {
    case GateKind::RxNeg: {
      const double c = std::cos(g.angle / 2.0);
      const double s = std::sin(g.angle / 2.0);
      return {{c, kI * s}, {kI * s, c}};
    }
    case GateKind::IX: return i_x();
    case GateKind::Phase: return {{1.0, 0.0}, {0.0, std::polar(1.0, g.angle)}};
    case GateKind::CX: return controlled(ComplexMatrix::identity(2), pauli_x());
    case GateKind::CtrlHOpen: return controlled(hadamard(), ComplexMatrix::identity(2));
    case GateKind::CtrlIX: return controlled(ComplexMatrix::identity(2), i_x());
    case GateKind::Custom:
      if (!g.matrix) throw ValidationError("custom gate without a matrix");
      return *g.matrix;
  }
  throw ValidationError("unknown gate kind");
}

ComplexMatrix embed(const ComplexMatrix& local, const std::vector<std::size_t>& qubits,
                    std::size_t num_qubits) {
  const std::size_t k = qubits.size();
  if (local.rows() != (std::size_t{1} << k) || !local.is_square()) {
    throw ValidationError("embed: local operator does not match qubit count");
  }
  std::size_t mask = 0;
  for (auto q : qubits) {
    if (q >= num_qubits) throw ValidationError("embed: qubit index out of range");
    mask |= std::size_t{1} << q;
  }
  auto local_index = [&](std::size_t i) {
    std::size_t s = 0;
    for (std::size_t m = 0; m < k; ++m) s |= ((i >> qubits[m]) & 1U) << (k - 1 - m);
    return s;
  };
  const std::size_t d = std::size_t{1} << num_qubits;
  ComplexMatrix full(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if ((i & ~mask) != (j & ~mask)) continue;
      full(i, j) = local(local_index(i), local_index(j));
    }
  }
  return full;
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0 || (std::size_t{1} << num_qubits) > kMaxDimension) {
    throw ValidationError("circuit must have between 1 and 4 qubits");
  }
}

Circuit& Circuit::add(Gate g) {
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    if (g.qubits[i] >= num_qubits_) {
      throw ValidationError(to_string(g.kind) + ": qubit " + std::to_string(g.qubits[i]) +
                            " out of range for " + std::to_string(num_qubits_) + " qubit(s)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (g.qubits[i] == g.qubits[j]) {
        throw ValidationError(to_string(g.kind) + ": control and target coincide");
      }
    }
  }
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) throw ValidationError("append: qubit counts differ");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

ComplexMatrix Circuit::unitary() const {
  ComplexMatrix u = ComplexMatrix::identity(dim());
  for (const auto& g : gates_) u = embed(gate_matrix(g), g.qubits, num_qubits_) * u;
  return u;
}

StateVector simulate_statevector(const Circuit& c, const StateVector& initial) {
  if (initial.dim() != c.dim()) {
    throw ValidationError("initial state has dimension " + std::to_string(initial.dim()) +
                          ", circuit needs " + std::to_string(c.dim()));
  }
  StateVector v = initial;
  for (const auto& g : c.gates()) v = apply(embed(gate_matrix(g), g.qubits, c.num_qubits()), v);
  return v;
}

DensityMatrix simulate_density(const Circuit& c, const NoiseModel& noise,
                               const DensityMatrix& initial) {
  if (initial.dim() != c.dim()) {
    throw ValidationError("initial density matrix has dimension " +
                          std::to_string(initial.dim()) + ", circuit needs " +
                          std::to_string(c.dim()));
  }
  noise.validate();
  ComplexMatrix rho = initial.matrix();
  for (const auto& g : c.gates()) {
    const ComplexMatrix u = embed(gate_matrix(g), g.qubits, c.num_qubits());
    rho = u * rho * u.adjoint();
    for (const KrausChannel* ch : noise.channels_for(g.kind)) {
      for (auto q : g.qubits) apply_channel(rho, *ch, q, c.num_qubits());
    }
  }
  return DensityMatrix(std::move(rho));
}

}  // namespace interfero
