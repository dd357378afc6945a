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

#include "interfero/complementarity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "interfero/errors.hpp"

namespace interfero {

namespace {

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw ValidationError(std::string(name) + " is not finite");
}

}  // namespace

double coherence_l1(const DensityMatrix& rho) {
  double c = 0.0;
  for (std::size_t j = 0; j < rho.dim(); ++j) {
    for (std::size_t k = 0; k < rho.dim(); ++k) {
      if (j != k) c += std::abs(rho(j, k));
    }
  }
  return c;
}

double diagonal_bound(const DensityMatrix& rho) {
  auto diag = rho.diagonal();
  for (auto& x : diag) x = std::max(x, 0.0);
  double s = 0.0;
  for (std::size_t j = 0; j < diag.size(); ++j) {
    for (std::size_t k = 0; k < diag.size(); ++k) {
      if (j != k) s += std::sqrt(diag[j] * diag[k]);
    }
  }
  return s;
}

double predictability_l1(const DensityMatrix& rho) {
  return static_cast<double>(rho.dim()) - 1.0 - diagonal_bound(rho);
}

bool is_incoherent(const DensityMatrix& rho, double tol) {
  for (std::size_t j = 0; j < rho.dim(); ++j) {
    for (std::size_t k = 0; k < rho.dim(); ++k) {
      if (j != k && std::abs(rho(j, k)) > tol) return false;
    }
  }
  return true;
}

ComplementarityPoint evaluate(const DensityMatrix& rho) {
  return {coherence_l1(rho), predictability_l1(rho), rho.dim()};
}

StateVector bmzi_state(double alpha, double beta, double phi) {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(phi, "phi");
  const double t1 = std::cos(alpha / 2.0);
  const double r1 = std::sin(alpha / 2.0);
  const double t2 = std::cos(beta / 2.0);
  const double r2 = std::sin(beta / 2.0);
  const Complex e = std::polar(1.0, phi);
  const Complex i{0.0, 1.0};
  return StateVector({-(e * t1 * r2 + r1 * t2), i * (e * t1 * t2 - r1 * r2)});
}

StateVector bmzi_state(double alpha) { return bmzi_state(alpha, -std::numbers::pi, 0.0); }

StateVector pqe_state(double phi) {
  require_finite(phi, "phi");
  const Complex e = std::polar(1.0, phi);
  const Complex i{0.0, 1.0};
  const double s2 = std::numbers::sqrt2;
  const double pre = -1.0 / (2.0 * s2);
  // Index 2*q1 + q0.
  return StateVector({pre * (e + 1.0), pre * (-s2), pre * (-i * s2 * e), pre * (-(e - 1.0))});
}

ComplementarityPoint theory_bmzi(double alpha) { return evaluate(outer(bmzi_state(alpha))); }

ComplementarityPoint theory_pqe(double phi) { return evaluate(outer(pqe_state(phi))); }

}  // namespace interfero
