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

#include "interfero/qstate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "interfero/errors.hpp"

namespace interfero {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                          "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                          "x" + std::to_string(b.cols()));
  }
}

bool lex_less(const ComplexMatrix& v, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const Complex x = v(r, a);
    const Complex y = v(r, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw ValidationError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw ValidationError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw ValidationError("matrix has " + std::to_string(entries_.size()) +
                          " entries, expected " + std::to_string(rows * cols));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) throw ValidationError("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  return max_abs_diff(adjoint() * (*this), identity(rows_)) <= tol;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ValidationError("matrix product: inner dimensions " + std::to_string(a.cols_) +
                          " and " + std::to_string(b.rows_) + " differ");
  }
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (auto& x : out.entries_) x *= s;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  const std::size_t d = amplitudes_.size();
  if (d < 2 || d > kMaxDimension || !std::has_single_bit(d)) {
    throw ValidationError("state dimension " + std::to_string(d) +
                          " is not a power of two in [2, 16]");
  }
  if (std::abs(norm() - 1.0) > kEigenTol) {
    throw ValidationError("state is not normalized (norm " + std::to_string(norm()) + ")");
  }
}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
  const std::size_t d = std::size_t{1} << num_qubits;
  if (index >= d) throw ValidationError("basis index out of range");
  std::vector<Complex> amps(d);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

std::size_t StateVector::num_qubits() const {
  return static_cast<std::size_t>(std::countr_zero(amplitudes_.size()));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return p;
}

StateVector apply(const ComplexMatrix& u, const StateVector& v) {
  if (u.rows() != v.dim() || u.cols() != v.dim()) {
    throw ValidationError("operator of size " + std::to_string(u.rows()) +
                          " applied to state of dimension " + std::to_string(v.dim()));
  }
  std::vector<Complex> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) out[i] += u(i, j) * v[j];
  }
  return StateVector(std::move(out));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (!m_.is_square()) throw ValidationError("density matrix must be square");
  if (m_.rows() > kMaxDimension) {
    throw ValidationError("density matrix dimension " + std::to_string(m_.rows()) +
                          " exceeds 16");
  }
  if (!m_.is_hermitian(tol)) throw ValidationError("density matrix is not Hermitian");
  if (std::abs(m_.trace() - Complex(1.0)) > tol) {
    throw ValidationError("density matrix trace is " + std::to_string(m_.trace().real()) +
                          ", expected 1");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix((1.0 / static_cast<double>(dim)) * ComplexMatrix::identity(dim));
}

std::size_t DensityMatrix::num_qubits() const {
  return static_cast<std::size_t>(std::countr_zero(dim()));
}

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> d(dim());
  for (std::size_t i = 0; i < dim(); ++i) d[i] = m_(i, i).real();
  return d;
}

double DensityMatrix::min_eigenvalue() const { return eig_hermitian(m_).values.front(); }

bool DensityMatrix::is_psd(double tol) const { return min_eigenvalue() >= -tol; }

DensityMatrix outer(const StateVector& v) {
  ComplexMatrix m(v.dim(), v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) {
    for (std::size_t k = 0; k < v.dim(); ++k) m(j, k) = v[j] * std::conj(v[k]);
  }
  return DensityMatrix(std::move(m), kEigenTol);
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum_jk |rho_jk|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& x : rho.matrix().entries()) s += std::norm(x);
  return s;
}

// ---------------------------------------------------------------------------
// Eigen-decomposition

HermitianEigen eig_hermitian(const ComplexMatrix& m) {
  if (!m.is_square()) throw ValidationError("eig_hermitian: matrix must be square");
  if (m.rows() > kMaxDimension) throw ValidationError("eig_hermitian: dimension exceeds 16");
  if (!m.is_hermitian(kEigenTol)) throw ValidationError("eig_hermitian: matrix is not Hermitian");

  const std::size_t n = m.rows();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  double scale = 0.0;
  for (const auto& x : a.entries()) scale += std::norm(x);
  const double off_floor = scale * 1e-32;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (off <= off_floor) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex phase = apq / g;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        // Rotation J = diag(1, conj(phase)) * [[c, s], [-s, c]] on (p, q).
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // a <- a J
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // a <- J^dagger a
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {  // v <- v J
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  // Fix the phase of every eigenvector.
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t r = 0; r < n; ++r) {
      const double mag = std::abs(v(r, col));
      if (mag > 1e-10) {
        const Complex rot = std::conj(v(r, col)) / mag;
        for (std::size_t k = 0; k < n; ++k) v(k, col) *= rot;
        v(r, col) = mag;
        break;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && a(order[end], order[end]).real() - a(order[start], order[start]).real() <=
                          kClosedFormTol) {
      ++end;
    }
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(start),
              order.begin() + static_cast<std::ptrdiff_t>(end),
              [&](std::size_t x, std::size_t y) { return lex_less(v, x, y); });
    start = end;
  }

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  return out;
}

ComplexMatrix from_eigen(std::span<const double> values, const ComplexMatrix& vectors) {
  const std::size_t n = vectors.rows();
  if (values.size() != vectors.cols()) throw ValidationError("from_eigen: size mismatch");
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex left = values[i] * vectors(r, i);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += left * std::conj(vectors(c, i));
    }
  }
  return out;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const auto eig = eig_hermitian(a - b);
  double s = 0.0;
  for (double x : eig.values) s += std::abs(x);
  return 0.5 * s;
}

}  // namespace interfero
