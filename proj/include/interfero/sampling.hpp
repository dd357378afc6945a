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

// Computational-basis measurement: shot sampling and exact frequencies.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "interfero/qstate.hpp"
#include "interfero/rng.hpp"

namespace interfero {

/// Bitstring for outcome `index`, highest qubit first ("10" is q1=1, q0=0).
std::string bitstring(std::size_t index, std::size_t num_qubits);
/// Inverse of bitstring(). Throws ValidationError on non-binary characters.
std::size_t bitstring_index(const std::string& bits);

/// Shot counts for one measurement setting. Only observed outcomes are stored.
class CountsTable {
 public:
  explicit CountsTable(std::size_t num_qubits);

  /// Throws ValidationError if `bits` has the wrong length or characters.
  void add(const std::string& bits, std::uint64_t count);

  std::size_t num_qubits() const { return num_qubits_; }
  std::uint64_t shots() const { return shots_; }
  bool empty() const { return shots_ == 0; }
  std::uint64_t count(const std::string& bits) const;
  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }

  /// count / shots per outcome index. Throws ValidationError when empty.
  std::vector<double> frequencies() const;

  friend bool operator==(const CountsTable&, const CountsTable&) = default;

 private:
  std::size_t num_qubits_;
  std::uint64_t shots_ = 0;
  std::map<std::string, std::uint64_t> counts_;
};

/// Outcome probabilities: |amplitude|^2, or the diagonal of rho clipped at 0.
std::vector<double> outcome_probabilities(const StateVector& v);
std::vector<double> outcome_probabilities(const DensityMatrix& rho);

/// Multinomial sample by inverse CDF. Probabilities must sum to 1 within 1e-9;
/// shots == 0 is rejected.
CountsTable sample_counts(std::span<const double> probabilities, std::uint64_t shots,
                          CounterRng& rng);
CountsTable sample_counts(const StateVector& v, std::uint64_t shots, CounterRng& rng);
CountsTable sample_counts(const DensityMatrix& rho, std::uint64_t shots, CounterRng& rng);

/// A finite shot budget, or the analytic (infinitely many shots) limit.
struct Shots {
  std::optional<std::uint64_t> count;

  static Shots analytic() { return Shots{}; }
  static Shots finite(std::uint64_t n) { return Shots{n}; }
  bool is_analytic() const { return !count.has_value(); }
};

/// Observed frequencies: sampled under a finite budget, exact otherwise.
std::vector<double> measure_frequencies(std::span<const double> probabilities, Shots shots,
                                        CounterRng& rng);

}  // namespace interfero
