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

#include "interfero/circuit.hpp"
#include "interfero/complementarity.hpp"
#include "interfero/tomography.hpp"
#include "support.hpp"

using namespace interfero;
using interfero::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;
const double kS = 1.0 / std::numbers::sqrt2;

// Pure state: C = sum_{j!=k} |a_j||a_k| = (sum |a_j|)^2 - 1.
double pure_coherence(const std::vector<double>& moduli) {
  double s = 0.0;
  for (double m : moduli) s += m;
  return s * s - 1.0;
}

std::vector<double> pqe_moduli(double phi) {
  return {std::abs(std::cos(phi / 2)) * kS, 0.5, 0.5, std::abs(std::sin(phi / 2)) * kS};
}

DensityMatrix plus_state() { return outer(StateVector({kS, kS})); }

}  // namespace

TEST_CASE("coherence_l1 examples") {
  CHECK(coherence_l1(DensityMatrix::maximally_mixed(2)) == 0.0);
  CHECK(coherence_l1(DensityMatrix::maximally_mixed(4)) == 0.0);
  CHECK(coherence_l1(plus_state()) == Catch::Approx(1.0).margin(1e-15));
  const auto pqe = outer(pqe_state(0.0));
  CHECK(std::abs(coherence_l1(pqe) - pure_coherence(pqe_moduli(0.0))) <= 1e-12);
  CHECK(std::abs(coherence_l1(pqe) - (0.5 + std::numbers::sqrt2)) <= 1e-12);
  CHECK(coherence_l1(pqe) == Catch::Approx(1.914214).margin(1e-6));
}

TEST_CASE("predictability_l1 examples") {
  CHECK(predictability_l1(outer(StateVector::basis(1, 0))) == Catch::Approx(1.0).margin(1e-15));
  CHECK(predictability_l1(DensityMatrix::maximally_mixed(2)) == Catch::Approx(0.0).margin(1e-15));
  const auto pqe = outer(pqe_state(0.0));
  CHECK(std::abs(predictability_l1(pqe) - (3.0 - (0.5 + std::numbers::sqrt2))) <= 1e-12);
  CHECK(predictability_l1(pqe) == Catch::Approx(1.085786).margin(1e-6));
}

TEST_CASE("tiny negative diagonal entries are clipped") {
  const DensityMatrix rho(ComplexMatrix{{1.0 + 1e-11, 0.0}, {0.0, -1e-11}});
  const double p = predictability_l1(rho);
  CHECK_FALSE(std::isnan(p));
  CHECK(p == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("is_incoherent examples") {
  CHECK(is_incoherent(DensityMatrix::maximally_mixed(2), 1e-12));
  CHECK_FALSE(is_incoherent(plus_state(), 1e-12));
  const double w[] = {0.7, 0.3};
  CHECK(is_incoherent(DensityMatrix(ComplexMatrix::diagonal(w)), 0.0));
}

TEST_CASE("is_incoherent agrees with the coherence bound") {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = (t % 2) ? 4 : 2;
    const auto rho = testing::random_density(d, d, rng);
    double biggest = 0.0;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (j != k) biggest = std::max(biggest, std::abs(rho(j, k)));
    CHECK(is_incoherent(rho, biggest));
    CHECK_FALSE(is_incoherent(rho, biggest * 0.999));
    CHECK(coherence_l1(rho) <= d * d * biggest);
  }
}

TEST_CASE("theory_bmzi examples") {
  auto p = theory_bmzi(0.0);
  CHECK(p.coherence == Catch::Approx(0.0).margin(1e-12));
  CHECK(p.predictability == Catch::Approx(1.0).margin(1e-12));
  CHECK(p.dim == 2);

  p = theory_bmzi(-kPi / 2);
  CHECK(p.coherence == Catch::Approx(1.0).margin(1e-12));
  CHECK(p.predictability == Catch::Approx(0.0).margin(1e-12));

  p = theory_bmzi(kPi / 6);
  CHECK(p.coherence == Catch::Approx(0.5).margin(1e-12));
  CHECK(p.predictability == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("theory_bmzi follows |sin alpha| on a dense grid") {
  for (int i = 0; i <= 400; ++i) {
    const double a = -kPi + 2 * kPi * i / 400.0;
    const auto p = theory_bmzi(a);
    CHECK(std::abs(p.coherence - std::abs(std::sin(a))) <= 1e-12);
    CHECK(std::abs(p.predictability - (1.0 - std::abs(std::sin(a)))) <= 1e-12);
    CHECK(std::abs(p.sum() - 1.0) <= 1e-12);
  }
}

TEST_CASE("general BMZI state with free beta and phi stays pure") {
  Rng rng(42);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int t = 0; t < 50; ++t) {
    const auto v = bmzi_state(angle(rng), angle(rng), angle(rng));
    CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(evaluate(outer(v)).sum() - 1.0) <= 1e-10);
  }
  // beta = -pi and phi = 0 are the fixed values of the one-argument form.
  for (double a : {-2.0, 0.3, 1.5}) {
    const auto full = bmzi_state(a, -kPi, 0.0);
    const auto fixed = bmzi_state(a);
    CHECK(std::abs(full[0] - fixed[0]) <= 1e-15);
    CHECK(std::abs(full[1] - fixed[1]) <= 1e-15);
  }
}

TEST_CASE("theory_pqe examples") {
  for (double phi : {0.0, kPi}) {
    const auto p = theory_pqe(phi);
    CHECK(std::abs(p.coherence - (0.5 + std::numbers::sqrt2)) <= 1e-12);
    CHECK(std::abs(p.predictability - (2.5 - std::numbers::sqrt2)) <= 1e-12);
    CHECK(p.dim == 4);
  }
  for (int i = 0; i <= 200; ++i) {
    const double phi = 2 * kPi * i / 200.0;
    const auto p = theory_pqe(phi);
    CHECK(std::abs(p.sum() - 3.0) <= 1e-12);
    CHECK(std::abs(p.coherence - pure_coherence(pqe_moduli(phi))) <= 1e-12);
  }
}

TEST_CASE("pure states saturate the bound") {
  Rng rng(43);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int t = 0; t < 200; ++t) {
      const DensityMatrix rho(testing::projector(testing::haar_vector(d, rng)));
      const auto p = evaluate(rho);
      CHECK(p.dim == d);
      CHECK(std::abs(p.sum() - (d - 1.0)) <= 1e-10);
    }
  }
}

TEST_CASE("mixed states respect the bound and the chain") {
  Rng rng(44);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int t = 0; t < 200; ++t) {
      const auto rho = testing::random_density(d, 1 + t % d, rng);
      const double c = coherence_l1(rho);
      const double chain = diagonal_bound(rho);
      CHECK(c <= chain + 1e-12);
      CHECK(chain <= d - 1.0 + 1e-9);
      CHECK(c + predictability_l1(rho) <= d - 1.0 + 1e-9);
      CHECK(predictability_l1(rho) >= -1e-9);
      CHECK(c >= 0.0);
    }
  }
}

TEST_CASE("coherence depends on the basis") {
  const auto plus = plus_state();
  CHECK(coherence_l1(plus) == Catch::Approx(1.0).margin(1e-12));
  // Conjugate by the X-basis rotation (Hadamard).
  const auto h = gate_matrix(basis_change(PauliString("X")).gates().front());
  const DensityMatrix rotated(h * plus.matrix() * h.adjoint());
  CHECK(coherence_l1(rotated) == Catch::Approx(0.0).margin(1e-12));
}
