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

// Dense complex linear algebra for few-qubit states and operators.
//
// Everything here is sized for d <= 16 (four qubits). Matrices are stored
// row-major; qubit q of a basis index i is bit (i >> q) & 1, so for two
// qubits the index of |q1 q0> is 2*q1 + q0.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace interfero {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDimension = 16;

// Tolerances used across the library.
inline constexpr double kClosedFormTol = 1e-12;
inline constexpr double kEvolutionTol = 1e-10;
inline constexpr double kEigenTol = 1e-8;

class ComplexMatrix {
 public:
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

/// Largest entrywise |a - b|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Normalized pure state on n qubits.
class StateVector {
 public:
  /// Throws ValidationError unless the length is a power of two <= 16 and
  /// the norm is 1 within 1e-8.
  explicit StateVector(std::vector<Complex> amplitudes);

  static StateVector basis(std::size_t num_qubits, std::size_t index);

  std::size_t dim() const { return amplitudes_.size(); }
  std::size_t num_qubits() const;
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  std::vector<double> probabilities() const;

 private:
  std::vector<Complex> amplitudes_;
};

/// u * v; the result is re-validated as a normalized state.
StateVector apply(const ComplexMatrix& u, const StateVector& v);

/// Hermitian, unit-trace d x d matrix. Positivity is not enforced at
/// construction because raw linear-inversion output may be slightly negative;
/// use is_psd() to check.
class DensityMatrix {
 public:
  /// Throws ValidationError unless square, d <= 16, Hermitian and trace 1
  /// (both within `tol`).
  explicit DensityMatrix(ComplexMatrix m, double tol = kEvolutionTol);

  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return m_.rows(); }
  std::size_t num_qubits() const;
  const ComplexMatrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t j, std::size_t k) const { return m_(j, k); }

  /// Real parts of the diagonal.
  std::vector<double> diagonal() const;
  double min_eigenvalue() const;
  bool is_psd(double tol = kEigenTol) const;

 private:
  ComplexMatrix m_;
};

/// |v><v|.
DensityMatrix outer(const StateVector& v);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // eigenvectors as columns, matching `values`
};

/// Jacobi diagonalization of a Hermitian matrix (within 1e-8).
///
/// Eigenvalues come back ascending. Each eigenvector is phase-fixed so its
/// first non-negligible component is real positive, and eigenvalues that
/// agree within 1e-12 are ordered by their eigenvectors lexicographically.
HermitianEigen eig_hermitian(const ComplexMatrix& m);

/// V diag(values) V^dagger.
ComplexMatrix from_eigen(std::span<const double> values, const ComplexMatrix& vectors);

/// 1/2 ||a - b||_1.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace interfero
