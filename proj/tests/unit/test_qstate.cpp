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


#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "interfero/errors.hpp"
#include "interfero/qstate.hpp"
#include "support.hpp"

using namespace interfero;
using interfero::testing::Rng;

namespace {

const double kS = 1.0 / std::numbers::sqrt2;

ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }

bool all_close(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

}  // namespace

TEST_CASE("kron examples") {
  CHECK(all_close(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                  ComplexMatrix::identity(4), 0.0));

  const double d12[] = {1.0, 2.0};
  const double d1122[] = {1.0, 1.0, 2.0, 2.0};
  CHECK(all_close(kron(ComplexMatrix::diagonal(d12), ComplexMatrix::identity(2)),
                  ComplexMatrix::diagonal(d1122), 0.0));

  const auto xx = kron(pauli_x(), pauli_x());
  const auto out = apply(xx, StateVector::basis(2, 0));
  CHECK(std::abs(out[3] - Complex(1.0)) == 0.0);
  CHECK(std::abs(out[0]) == 0.0);
}

TEST_CASE("kron shape and entries against the definition") {
  Rng rng(11);
  const auto a = testing::random_matrix(2, 3, rng);
  const auto b = testing::random_matrix(3, 2, rng);
  const auto k = kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q)
          CHECK(std::abs(k(i * 3 + p, j * 2 + q) - a(i, j) * b(p, q)) < 1e-15);
}

TEST_CASE("kron is associative on random 2x2 matrices") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto a = testing::random_matrix(2, 2, rng);
    const auto b = testing::random_matrix(2, 2, rng);
    const auto c = testing::random_matrix(2, 2, rng);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
  }
}

TEST_CASE("outer examples") {
  const auto zero = outer(StateVector::basis(1, 0));
  const double d10[] = {1.0, 0.0};
  CHECK(all_close(zero.matrix(), ComplexMatrix::diagonal(d10), 0.0));

  const auto plus = outer(StateVector({kS, kS}));
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) CHECK(std::abs(plus(j, k) - Complex(0.5)) < 1e-15);

  // cos(a/2)|0> + i sin(a/2)|1> at a = -pi/2, written out by hand.
  const Complex a0 = std::cos(-std::numbers::pi / 4);
  const Complex a1 = Complex(0, 1) * std::sin(-std::numbers::pi / 4);
  const auto rho = outer(StateVector({a0, a1}));
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) CHECK(std::abs(std::abs(rho(j, k)) - 0.5) < 1e-12);
  CHECK(std::abs(purity(rho) - 1.0) < 1e-12);
}

TEST_CASE("outer rejects non-normalized input") {
  CHECK_THROWS_AS(StateVector({1.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(StateVector({1.0 + 2e-8, 0.0}), ValidationError);
  CHECK_NOTHROW(StateVector({1.0 + 1e-9, 0.0}));
  CHECK_THROWS_AS(StateVector({1.0, 0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(StateVector(std::vector<Complex>(32, Complex(1.0 / std::sqrt(32.0)))),
                  ValidationError);
}

TEST_CASE("outer has one unit eigenvalue and the rest zero") {
  Rng rng(13);
  for (std::size_t d : {2u, 4u, 8u, 16u}) {
    for (int t = 0; t < 10; ++t) {
      const auto rho = outer(StateVector(testing::haar_vector(d, rng)));
      const auto e = eig_hermitian(rho.matrix());
      CHECK(std::abs(e.values.back() - 1.0) <= 1e-8);
      for (std::size_t i = 0; i + 1 < d; ++i) CHECK(std::abs(e.values[i]) <= 1e-8);
      CHECK(std::abs(purity(rho) - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("purity examples") {
  CHECK(purity(DensityMatrix::maximally_mixed(2)) == Catch::Approx(0.5).margin(1e-15));
  CHECK(purity(outer(StateVector::basis(1, 0))) == Catch::Approx(1.0).margin(1e-15));
  const double w[] = {0.75, 0.25};
  CHECK(purity(DensityMatrix(ComplexMatrix::diagonal(w))) ==
        Catch::Approx(0.75 * 0.75 + 0.25 * 0.25).margin(1e-15));
}

TEST_CASE("purity stays within [1/d, 1] for random states") {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = (t % 2) ? 4 : 2;
    const auto rho = testing::random_density(d, 1 + t % d, rng);
    const double p = purity(rho);
    CHECK(p >= 1.0 / d - 1e-9);
    CHECK(p <= 1.0 + 1e-9);
  }
}

TEST_CASE("eig_hermitian examples") {
  const double d10[] = {1.0, 0.0};
  auto e = eig_hermitian(ComplexMatrix::diagonal(d10));
  CHECK(e.values[0] == Catch::Approx(0.0).margin(1e-15));
  CHECK(e.values[1] == Catch::Approx(1.0).margin(1e-15));

  e = eig_hermitian(pauli_x());
  CHECK(e.values[0] == Catch::Approx(-1.0).margin(1e-12));
  CHECK(e.values[1] == Catch::Approx(1.0).margin(1e-12));

  e = eig_hermitian(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
  CHECK(e.values[0] == Catch::Approx(0.0).margin(1e-12));
  CHECK(e.values[1] == Catch::Approx(1.0).margin(1e-12));
  // Eigenvector of 1 is |+>, first component real positive.
  CHECK(std::abs(e.vectors(0, 1) - Complex(kS)) < 1e-12);
  CHECK(std::abs(e.vectors(1, 1) - Complex(kS)) < 1e-12);
}

TEST_CASE("eig_hermitian reconstructs random Hermitian matrices") {
  Rng rng(15);
  for (std::size_t n = 1; n <= 16; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto m = testing::random_hermitian(n, rng);
      const auto e = eig_hermitian(m);
      CHECK(std::is_sorted(e.values.begin(), e.values.end()));
      CHECK(max_abs_diff(from_eigen(e.values, e.vectors), m) <= 1e-8);
      CHECK(e.vectors.is_unitary(1e-8));
    }
  }
}

TEST_CASE("eig_hermitian is deterministic on degenerate spectra") {
  Rng rng(16);
  const auto u = testing::random_unitary(4, rng);
  const double w[] = {0.25, 0.25, 0.25, 0.25};
  const auto mixed = u * ComplexMatrix::diagonal(w) * u.adjoint();
  const auto a = eig_hermitian(mixed);
  const auto b = eig_hermitian(mixed);
  CHECK(a.values == b.values);
  CHECK(max_abs_diff(a.vectors, b.vectors) == 0.0);

  // Identity: the tie-break orders the standard basis lexicographically.
  const auto e = eig_hermitian(ComplexMatrix::identity(3));
  CHECK(max_abs_diff(e.vectors, ComplexMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == 0.0);
}

TEST_CASE("eig_hermitian errors") {
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix{{0, 1}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix(2, 3)), ValidationError);
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::identity(17)), ValidationError);
}

TEST_CASE("unitary evolution keeps the norm") {
  Rng rng(17);
  for (std::size_t d : {2u, 4u, 8u, 16u}) {
    for (int t = 0; t < 25; ++t) {
      const auto u = testing::random_unitary(d, rng);
      auto v = StateVector(testing::haar_vector(d, rng));
      for (int step = 0; step < 20; ++step) v = apply(u, v);
      CHECK(std::abs(v.norm() - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("apply checks dimensions") {
  CHECK_THROWS_AS(apply(ComplexMatrix::identity(4), StateVector::basis(1, 0)), ValidationError);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{1, 0.1}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{0.6, 0}, {0, 0.6}}), ValidationError);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, 3)), ValidationError);
  CHECK_THROWS_AS(DensityMatrix(Complex(1.0 / 32) * ComplexMatrix::identity(32)),
                  ValidationError);
  CHECK_NOTHROW(DensityMatrix(ComplexMatrix{{1.0 + 5e-11, 0}, {0, 0}}));
}

TEST_CASE("is_psd and min_eigenvalue") {
  const double bad[] = {1.1, -0.1};
  const DensityMatrix m(ComplexMatrix::diagonal(bad));
  CHECK_FALSE(m.is_psd());
  CHECK(m.min_eigenvalue() == Catch::Approx(-0.1).margin(1e-12));
  CHECK(DensityMatrix::maximally_mixed(4).is_psd());
}

TEST_CASE("trace_distance") {
  const auto zero = outer(StateVector::basis(1, 0));
  const auto one = outer(StateVector::basis(1, 1));
  CHECK(trace_distance(zero.matrix(), one.matrix()) == Catch::Approx(1.0).margin(1e-12));
  CHECK(trace_distance(zero.matrix(), zero.matrix()) == Catch::Approx(0.0).margin(1e-12));
  // Pure states: sqrt(1 - |<a|b>|^2).
  const auto plus = outer(StateVector({kS, kS}));
  CHECK(trace_distance(zero.matrix(), plus.matrix()) ==
        Catch::Approx(std::sqrt(0.5)).margin(1e-12));
}
