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

#include "interfero/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "interfero/errors.hpp"

namespace interfero {

std::string bitstring(std::size_t index, std::size_t num_qubits) {
  std::string s(num_qubits, '0');
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((index >> q) & 1U) s[num_qubits - 1 - q] = '1';
  }
  return s;
}

std::size_t bitstring_index(const std::string& bits) {
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError("bitstring '" + bits + "' is not binary");
    index = (index << 1) | static_cast<std::size_t>(c == '1');
  }
  return index;
}

CountsTable::CountsTable(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0 || num_qubits > 4) throw ValidationError("counts: 1 to 4 qubits supported");
}

void CountsTable::add(const std::string& bits, std::uint64_t count) {
  if (bits.size() != num_qubits_) {
    throw ValidationError("bitstring '" + bits + "' does not have length " +
                          std::to_string(num_qubits_));
  }
  bitstring_index(bits);
  if (count == 0) return;
  counts_[bits] += count;
  shots_ += count;
}

std::uint64_t CountsTable::count(const std::string& bits) const {
  auto it = counts_.find(bits);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<double> CountsTable::frequencies() const {
  if (empty()) throw ValidationError("counts table is empty");
  std::vector<double> f(std::size_t{1} << num_qubits_, 0.0);
  for (const auto& [bits, n] : counts_) {
    f[bitstring_index(bits)] = static_cast<double>(n) / static_cast<double>(shots_);
  }
  return f;
}

std::vector<double> outcome_probabilities(const StateVector& v) { return v.probabilities(); }

std::vector<double> outcome_probabilities(const DensityMatrix& rho) {
  auto p = rho.diagonal();
  for (auto& x : p) x = std::max(x, 0.0);
  return p;
}

CountsTable sample_counts(std::span<const double> probabilities, std::uint64_t shots,
                          CounterRng& rng) {
  if (shots == 0) throw ValidationError("shots must be positive");
  const std::size_t d = probabilities.size();
  if (d < 2 || !std::has_single_bit(d)) {
    throw ValidationError("outcome count must be a power of two");
  }
  const double total = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("outcome probabilities sum to " + std::to_string(total));
  }
  std::vector<double> cdf(d);
  std::size_t last_nonzero = 0;
  double running = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    if (probabilities[i] < 0.0) throw ValidationError("negative outcome probability");
    running += probabilities[i];
    cdf[i] = running;
    if (probabilities[i] > 0.0) last_nonzero = i;
  }

  std::vector<std::uint64_t> hist(d, 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx > last_nonzero) idx = last_nonzero;
    ++hist[idx];
  }

  const auto n = static_cast<std::size_t>(std::countr_zero(d));
  CountsTable table(n);
  for (std::size_t i = 0; i < d; ++i) table.add(bitstring(i, n), hist[i]);
  return table;
}

CountsTable sample_counts(const StateVector& v, std::uint64_t shots, CounterRng& rng) {
  const auto p = outcome_probabilities(v);
  return sample_counts(p, shots, rng);
}

CountsTable sample_counts(const DensityMatrix& rho, std::uint64_t shots, CounterRng& rng) {
  const auto p = outcome_probabilities(rho);
  return sample_counts(p, shots, rng);
}

std::vector<double> measure_frequencies(std::span<const double> probabilities, Shots shots,
                                        CounterRng& rng) {
  if (shots.is_analytic()) return {probabilities.begin(), probabilities.end()};
  return sample_counts(probabilities, *shots.count, rng).frequencies();
}

}  // namespace interfero
