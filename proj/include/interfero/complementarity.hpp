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

// l1-norm coherence and predictability, and the closed-form final states of
// the two interferometers.
//
// For any density matrix of dimension d,
//
//   C(rho) = sum_{j != k} |rho_jk|
//   P(rho) = d - 1 - sum_{j != k} sqrt(rho_jj rho_kk)
//
// and C + P <= d - 1, with equality for pure states. Sums run over ordered
// pairs.

#pragma once

#include <cstddef>

#include "interfero/qstate.hpp"

namespace interfero {

struct ComplementarityPoint {
  double coherence = 0.0;
  double predictability = 0.0;
  std::size_t dim = 0;

  double sum() const { return coherence + predictability; }
};

double coherence_l1(const DensityMatrix& rho);

/// Negative diagonal residue (from tomography) is clipped to 0 first.
double predictability_l1(const DensityMatrix& rho);

/// sum_{j != k} sqrt(rho_jj rho_kk), the bound sitting between C and d - 1.
double diagonal_bound(const DensityMatrix& rho);

/// True iff every off-diagonal magnitude is <= tol.
bool is_incoherent(const DensityMatrix& rho, double tol);

ComplementarityPoint evaluate(const DensityMatrix& rho);

/// Final state of the biased Mach-Zehnder interferometer,
///   -(e^{i phi} T1 R2 + R1 T2)|0> + i(e^{i phi} T1 T2 - R1 R2)|1>,
/// with T = cos(angle/2), R = sin(angle/2) for each beamsplitter.
StateVector bmzi_state(double alpha, double beta, double phi);

/// The interferometer as built: phi = 0 and the second beamsplitter at
/// beta = -pi. Reduces to cos(alpha/2)|0> + i sin(alpha/2)|1>.
StateVector bmzi_state(double alpha);

/// Final state of the partial quantum eraser on |q1 q0>:
///   -1/(2 sqrt2) [ (e^{i phi}+1)|00> - (e^{i phi}-1)|11>
///                  - i sqrt2 e^{i phi}|10> - sqrt2 |01> ].
StateVector pqe_state(double phi);

/// C and P of bmzi_state(alpha). Closed form: C = |sin alpha|, P = 1 - C.
ComplementarityPoint theory_bmzi(double alpha);

/// C and P of pqe_state(phi). C + P = 3 for every phi.
ComplementarityPoint theory_pqe(double phi);

}  // namespace interfero
