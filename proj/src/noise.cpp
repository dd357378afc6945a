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

#include "interfero/noise.hpp"

#include <cmath>

#include "interfero/circuit.hpp"
#include "interfero/errors.hpp"

namespace interfero {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

KrausChannel KrausChannel::depolarizing(double p) {
  require_probability(p, "depolarizing probability");
  const double a = std::sqrt(1.0 - 0.75 * p);
  const double b = std::sqrt(0.25 * p);
  const Complex i{0.0, 1.0};
  return {"depolarizing",
          {{{a, 0.0}, {0.0, a}},
           {{0.0, b}, {b, 0.0}},
           {{0.0, -i * b}, {i * b, 0.0}},
           {{b, 0.0}, {0.0, -b}}}};
}

KrausChannel KrausChannel::amplitude_damping(double gamma) {
  require_probability(gamma, "amplitude damping gamma");
  return {"amplitude_damping",
          {{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}}, {{0.0, std::sqrt(gamma)}, {0.0, 0.0}}}};
}

KrausChannel KrausChannel::phase_damping(double lambda) {
  require_probability(lambda, "phase damping lambda");
  return {"phase_damping",
          {{{1.0, 0.0}, {0.0, std::sqrt(1.0 - lambda)}}, {{0.0, 0.0}, {0.0, std::sqrt(lambda)}}}};
}

bool KrausChannel::is_trace_preserving(double tol) const {
  if (ops.empty()) return false;
  ComplexMatrix sum(2, 2);
  for (const auto& k : ops) {
    if (k.rows() != 2 || k.cols() != 2) return false;
    sum = sum + k.adjoint() * k;
  }
  return max_abs_diff(sum, ComplexMatrix::identity(2)) <= tol;
}

bool NoiseModel::empty() const {
  if (!after_each_gate.empty() || !readout.empty()) return false;
  for (const auto& [kind, chans] : per_kind) {
    if (!chans.empty()) return false;
  }
  return true;
}

void NoiseModel::validate() const {
  auto check = [](const KrausChannel& ch) {
    if (!ch.is_trace_preserving()) {
      throw ValidationError("noise channel '" + ch.name + "' is not trace preserving");
    }
  };
  for (const auto& ch : after_each_gate) check(ch);
  for (const auto& [kind, chans] : per_kind) {
    for (const auto& ch : chans) check(ch);
  }
  require_probability(readout.p01, "readout p01");
  require_probability(readout.p10, "readout p10");
}

std::vector<const KrausChannel*> NoiseModel::channels_for(GateKind kind) const {
  std::vector<const KrausChannel*> out;
  for (const auto& ch : after_each_gate) out.push_back(&ch);
  if (auto it = per_kind.find(kind); it != per_kind.end()) {
    for (const auto& ch : it->second) out.push_back(&ch);
  }
  return out;
}

std::vector<double> apply_readout(std::vector<double> probabilities, const ReadoutError& err) {
  if (err.empty()) return probabilities;
  require_probability(err.p01, "readout p01");
  require_probability(err.p10, "readout p10");
  const std::size_t d = probabilities.size();
  for (std::size_t bit = 1; bit < d; bit <<= 1) {
    std::vector<double> next(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t flipped = i ^ bit;
      const bool one = (i & bit) != 0;
      const double keep = one ? 1.0 - err.p10 : 1.0 - err.p01;
      const double flip = one ? err.p10 : err.p01;
      next[i] += keep * probabilities[i];
      next[flipped] += flip * probabilities[i];
    }
    probabilities = std::move(next);
  }
  return probabilities;
}

}  // namespace interfero
