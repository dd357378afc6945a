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

// Generators and checkers shared by the tests.

#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "interfero/qstate.hpp"

namespace interfero::testing {

using Rng = std::mt19937_64;

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = gaussian_complex(rng);
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const auto a = random_matrix(n, n, rng);
  return Complex(0.5) * (a + a.adjoint());
}

// Haar-distributed unit vector: normalized complex Gaussian.
inline std::vector<Complex> haar_vector(std::size_t d, Rng& rng) {
  std::vector<Complex> v(d);
  double norm = 0.0;
  for (auto& x : v) {
    x = gaussian_complex(rng);
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return v;
}

// Gram-Schmidt on the columns of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  std::vector<std::vector<Complex>> cols;
  while (cols.size() < n) {
    auto v = haar_vector(n, rng);
    for (const auto& u : cols) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(u[i]) * v[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
    }
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (auto& x : v) x /= norm;
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) u(r, c) = cols[c][r];
  return u;
}

inline ComplexMatrix projector(const std::vector<Complex>& v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t k = 0; k < v.size(); ++k) m(j, k) = v[j] * std::conj(v[k]);
  return m;
}

// G G^dag / Tr with G of size d x rank: a random full-or-low-rank state.
inline DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng) {
  const auto g = random_matrix(d, rank, rng);
  auto m = g * g.adjoint();
  const double tr = m.trace().real();
  return DensityMatrix(Complex(1.0 / tr) * m);
}

// Minimal XML well-formedness: one root element, balanced and properly nested
// tags, quoted attributes, known entities only.
inline bool is_well_formed_xml(std::string_view s) {
  std::vector<std::string> stack;
  bool seen_root = false;
  std::size_t i = 0;
  auto name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' ||
           c == '.';
  };
  auto check_text = [](std::string_view text) {
    for (std::size_t p = 0; p < text.size(); ++p) {
      if (text[p] == '<') return false;
      if (text[p] != '&') continue;
      const auto semi = text.find(';', p);
      if (semi == std::string_view::npos) return false;
      const auto ent = text.substr(p + 1, semi - p - 1);
      if (ent != "amp" && ent != "lt" && ent != "gt" && ent != "quot" && ent != "apos") {
        return false;
      }
    }
    return true;
  };
  while (i < s.size()) {
    if (s[i] != '<') {
      const auto next = s.find('<', i);
      const auto text = s.substr(i, next == std::string_view::npos ? s.size() - i : next - i);
      if (!check_text(text)) return false;
      if (stack.empty() && text.find_first_not_of(" \t\r\n") != std::string_view::npos) {
        return false;
      }
      if (next == std::string_view::npos) break;
      i = next;
      continue;
    }
    if (s.substr(i, 5) == "<?xml") {
      if (i != 0) return false;
      const auto end = s.find("?>", i);
      if (end == std::string_view::npos) return false;
      i = end + 2;
      continue;
    }
    if (s.substr(i, 4) == "<!--") {
      const auto end = s.find("-->", i);
      if (end == std::string_view::npos) return false;
      i = end + 3;
      continue;
    }
    const bool closing = i + 1 < s.size() && s[i + 1] == '/';
    std::size_t p = i + (closing ? 2 : 1);
    const std::size_t name_start = p;
    while (p < s.size() && name_char(s[p])) ++p;
    if (p == name_start) return false;
    const std::string name(s.substr(name_start, p - name_start));
    if (closing) {
      while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
      if (p >= s.size() || s[p] != '>') return false;
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
      i = p + 1;
      continue;
    }
    // Attributes.
    bool self_closing = false;
    while (true) {
      while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
      if (p >= s.size()) return false;
      if (s[p] == '>') break;
      if (s[p] == '/') {
        if (p + 1 >= s.size() || s[p + 1] != '>') return false;
        self_closing = true;
        ++p;
        break;
      }
      const std::size_t attr_start = p;
      while (p < s.size() && name_char(s[p])) ++p;
      if (p == attr_start || p >= s.size() || s[p] != '=') return false;
      ++p;
      if (p >= s.size() || (s[p] != '"' && s[p] != '\'')) return false;
      const char q = s[p];
      const auto close = s.find(q, p + 1);
      if (close == std::string_view::npos) return false;
      if (!check_text(s.substr(p + 1, close - p - 1))) return false;
      p = close + 1;
    }
    if (stack.empty()) {
      if (seen_root) return false;
      seen_root = true;
    }
    if (!self_closing) stack.push_back(name);
    i = p + 1;
  }
  return seen_root && stack.empty();
}

}  // namespace interfero::testing
