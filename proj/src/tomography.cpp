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

#include "interfero/tomography.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "interfero/errors.hpp"

namespace interfero {

namespace {

ComplexMatrix single_pauli(char letter) {
  const Complex i{0.0, 1.0};
  switch (letter) {
    case 'X': return {{0.0, 1.0}, {1.0, 0.0}};
    case 'Y': return {{0.0, -i}, {i, 0.0}};
    case 'Z': return {{1.0, 0.0}, {0.0, -1.0}};
    default: return ComplexMatrix::identity(2);
  }
}

}  // namespace

PauliString::PauliString(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty() || letters_.size() > 4) {
    throw ValidationError("Pauli string '" + letters_ + "' must have 1 to 4 letters");
  }
  for (char c : letters_) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw ValidationError("Pauli string '" + letters_ + "' has a letter outside IXYZ");
    }
  }
}

bool PauliString::is_identity() const {
  return std::all_of(letters_.begin(), letters_.end(), [](char c) { return c == 'I'; });
}

ComplexMatrix PauliString::matrix() const {
  ComplexMatrix m = single_pauli(letters_[0]);
  for (std::size_t k = 1; k < letters_.size(); ++k) m = kron(m, single_pauli(letters_[k]));
  return m;
}

std::vector<PauliString> all_pauli_strings(std::size_t num_qubits) {
  if (num_qubits == 0 || num_qubits > 4) {
    throw ValidationError("Pauli strings need 1 to 4 qubits, got " + std::to_string(num_qubits));
  }
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::vector<PauliString> out;
  const std::size_t total = std::size_t{1} << (2 * num_qubits);
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::string s(num_qubits, 'I');
    for (std::size_t k = 0; k < num_qubits; ++k) {
      s[num_qubits - 1 - k] = kLetters[(code >> (2 * k)) & 3U];
    }
    out.emplace_back(std::move(s));
  }
  return out;
}

std::vector<PauliString> measurement_settings(std::size_t num_qubits) {
  if (num_qubits != 1 && num_qubits != 2) {
    throw ValidationError("tomography supports 1 or 2 qubits, got " + std::to_string(num_qubits));
  }
  auto all = all_pauli_strings(num_qubits);
  all.erase(all.begin());
  return all;
}

Circuit basis_change(const PauliString& setting) {
  const double h = std::numbers::sqrt2 / 2.0;
  const Complex i{0.0, 1.0};
  Circuit c(setting.num_qubits());
  for (std::size_t q = 0; q < setting.num_qubits(); ++q) {
    switch (setting.letter(q)) {
      case 'X': c.add(Gate::custom({{h, h}, {h, -h}}, {q}, "basis_x")); break;
      case 'Y': c.add(Gate::custom({{h, -i * h}, {h, i * h}}, {q}, "basis_y")); break;
      default: break;
    }
  }
  return c;
}

double expectation_from_frequencies(std::span<const double> frequencies,
                                    const PauliString& setting) {
  if (frequencies.size() != (std::size_t{1} << setting.num_qubits())) {
    throw ValidationError("frequencies do not match setting " + setting.str());
  }
  std::size_t mask = 0;
  for (std::size_t q = 0; q < setting.num_qubits(); ++q) {
    if (setting.letter(q) != 'I') mask |= std::size_t{1} << q;
  }
  double e = 0.0;
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    const bool odd = (std::popcount(i & mask) & 1) != 0;
    e += odd ? -frequencies[i] : frequencies[i];
  }
  return std::clamp(e, -1.0, 1.0);
}

double expectation_from_counts(const CountsTable& counts, const PauliString& setting) {
  if (counts.num_qubits() != setting.num_qubits()) {
    throw ValidationError("counts have " + std::to_string(counts.num_qubits()) +
                          " qubit(s), setting " + setting.str() + " has " +
                          std::to_string(setting.num_qubits()));
  }
  const auto f = counts.frequencies();
  return expectation_from_frequencies(f, setting);
}

DensityMatrix linear_inversion(const ExpectationMap& expectations, std::size_t num_qubits) {
  const std::size_t d = std::size_t{1} << num_qubits;
  ComplexMatrix rho = ComplexMatrix::identity(d);
  for (const auto& p : all_pauli_strings(num_qubits)) {
    if (p.is_identity()) continue;
    auto it = expectations.find(p);
    if (it == expectations.end()) {
      throw ValidationError("missing expectation for Pauli string " + p.str());
    }
    rho = rho + Complex(it->second) * p.matrix();
  }
  return DensityMatrix((1.0 / static_cast<double>(d)) * rho);
}

PsdProjection project_psd(const ComplexMatrix& m) {
  if (!m.is_hermitian(1e-6)) throw ValidationError("project_psd: input is not Hermitian");
  if (std::abs(m.trace() - Complex(1.0)) > 1e-6) {
    throw ValidationError("project_psd: trace is " + std::to_string(m.trace().real()));
  }
  // Eigenvalues within kSpectralFloor of zero are set to zero as well. Linear
  // inversion of exact data leaves ~1e-17 of rounding on a null eigenvalue,
  // which the square roots in the predictability would blow up to ~1e-8.
  auto eig = eig_hermitian(m);
  const bool unchanged = std::all_of(eig.values.begin(), eig.values.end(),
                                     [](double v) { return v == 0.0 || v > kSpectralFloor; });
  if (unchanged && std::abs(m.trace() - Complex(1.0)) <= kClosedFormTol) {
    return {DensityMatrix(m, 1e-6), 0.0};
  }

  double violation = 0.0;
  double kept = 0.0;
  for (auto& v : eig.values) {
    if (v < 0.0) violation -= v;
    if (v <= kSpectralFloor) v = 0.0;
    kept += v;
  }
  if (!(kept > 0.0)) throw ReconstructionError("no positive spectrum left after PSD clipping");
  for (auto& v : eig.values) v /= kept;

  ComplexMatrix out = from_eigen(eig.values, eig.vectors);
  out = 0.5 * (out + out.adjoint());
  return {DensityMatrix(std::move(out)), violation};
}

TomographyResult reconstruct(const ExpectationMap& expectations, std::size_t num_qubits) {
  DensityMatrix raw = linear_inversion(expectations, num_qubits);
  auto projected = project_psd(raw.matrix());
  return {expectations, std::move(raw), std::move(projected.rho), projected.psd_violation};
}

}  // namespace interfero
