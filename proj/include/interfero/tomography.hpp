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

// Pauli state tomography by linear inversion.
//
// One measurement circuit is used per non-identity Pauli string, so a qubit
// needs 3 circuits and a pair needs 15. Strings that contain an identity
// (e.g. "ZI") are estimated from the marginal parity of their own circuit.

#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "interfero/circuit.hpp"
#include "interfero/qstate.hpp"
#include "interfero/sampling.hpp"

namespace interfero {

/// Letters from {I, X, Y, Z}, highest qubit first: for "XZ", X acts on q1
/// and Z on q0.
class PauliString {
 public:
  /// Throws ValidationError on an empty string, a string longer than four
  /// letters or a letter outside IXYZ.
  explicit PauliString(std::string letters);

  std::size_t num_qubits() const { return letters_.size(); }
  /// Letter acting on qubit `q` (q = 0 is the last character).
  char letter(std::size_t q) const { return letters_[letters_.size() - 1 - q]; }
  const std::string& str() const { return letters_; }
  bool is_identity() const;

  /// Full 2^n x 2^n operator.
  ComplexMatrix matrix() const;

  auto operator<=>(const PauliString&) const = default;

 private:
  std::string letters_;
};

using ExpectationMap = std::map<PauliString, double>;

/// All 4^n strings in lexicographic order with I < X < Y < Z, identity first.
std::vector<PauliString> all_pauli_strings(std::size_t num_qubits);

/// The 4^n - 1 non-identity strings, for n in {1, 2}.
std::vector<PauliString> measurement_settings(std::size_t num_qubits);

/// Rotation that maps the setting's eigenbasis onto the computational basis:
/// X -> (1/sqrt2)[[1, 1], [1, -1]], Y -> (1/sqrt2)[[1, -i], [1, i]],
/// Z and I -> nothing.
Circuit basis_change(const PauliString& setting);

/// Parity estimator over the qubits where the setting is not I.
double expectation_from_frequencies(std::span<const double> frequencies,
                                    const PauliString& setting);
double expectation_from_counts(const CountsTable& counts, const PauliString& setting);

/// rho = 2^-n sum_P <P> P with <I...I> = 1. Throws ValidationError naming the
/// first missing string. The result is Hermitian with unit trace but may have
/// negative eigenvalues.
DensityMatrix linear_inversion(const ExpectationMap& expectations, std::size_t num_qubits);

struct PsdProjection {
  DensityMatrix rho;
  double psd_violation = 0.0;  // total clipped negative eigenvalue mass
};

/// Eigenvalues at or below this are zeroed by project_psd.
inline constexpr double kSpectralFloor = 1e-12;

/// Clips negative (and below-floor) eigenvalues to zero and renormalizes the
/// trace. Inputs with no eigenvalue in (-inf, kSpectralFloor] other than exact
/// zeros, and unit trace, come back unchanged.
///
/// Requires a Hermitian, trace-1 (within 1e-6) input; throws
/// ReconstructionError when nothing positive is left after clipping.
PsdProjection project_psd(const ComplexMatrix& m);

struct TomographyResult {
  ExpectationMap expectations;
  DensityMatrix rho_raw;
  DensityMatrix rho;
  double psd_violation = 0.0;
};

TomographyResult reconstruct(const ExpectationMap& expectations, std::size_t num_qubits);

}  // namespace interfero
