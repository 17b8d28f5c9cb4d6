// Copyright 2026 gbit-toolbox authors
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

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gbit/gauss_int.hpp"
#include "gbit/state.hpp"
#include "gbit/types.hpp"

namespace gbit {

/// Dense matrix realization of a question as a Pauli string on 2^n
/// dimensions. Entries are exact Gaussian integers; `phase_pow_i` tracks the
/// accumulated power of i picked up by products. A plain question operator
/// has phase 0 and is Hermitian, traceless and involutory.
struct PauliOperatorRep {
  QuestionIndex index;
  GaussMat matrix;
  int phase_pow_i = 0;
};

/// Hilbert-space side of a state: a Hermitian positive semidefinite matrix
/// with trace equal to the presence probability.
using DensityMatrix = Eigen::MatrixXcd;

/// Largest n for which dense oracle matrices are built (2^n x 2^n). Reads the
/// GBIT_ORACLE_MAX_N environment variable once; defaults to 8.
int oracle_max_n();

/// Kronecker product of single-site Pauli matrices under the fixed mapping
/// (qubit: 1,2,3 -> x,y,z; rebit: 1,2 -> x,z and 3 -> y, legal only in
/// pairs). Throws for rebit indices with an odd 3-count and for n above the
/// oracle cap.
PauliOperatorRep matrix_of(const SystemKind& sys, const QuestionIndex& q);

/// Cached variant; the cache supports concurrent readers with internally
/// synchronized insertion.
const PauliOperatorRep& cached_matrix_of(const SystemKind& sys, const QuestionIndex& q);

/// Exact commutation of the two question operators. Ground truth for
/// is_compatible.
bool commutes(const SystemKind& sys, const QuestionIndex& q1, const QuestionIndex& q2);

/// The scalar s in P(q1) P(q2) = s P(q3) with q3 the composed index; asserts
/// s in {+1,-1}. Ground truth for the symbolic composition parity. Throws for
/// non-commuting inputs (the product phase would be +-i).
int product_sign(const SystemKind& sys, const QuestionIndex& q1, const QuestionIndex& q2);

/// True iff all pairs commute; commuting involutions admit a simultaneous
/// eigenbasis, so this doubles as the mutual-compatibility oracle.
bool simultaneous_eigenbasis_exists(const SystemKind& sys,
                                    const std::vector<QuestionIndex>& qs);

/// Born rule: y = tr(rho (I + P(q))/2), clamped to [0,1]. Throws for a
/// non-Hermitian rho or an imaginary trace beyond 1e-12.
double born_probability(const SystemKind& sys, const DensityMatrix& rho,
                        const QuestionIndex& q);

/// Projective update rho -> Pi rho Pi / tr(Pi rho Pi) for the answer's
/// projector Pi = (I +- P(q))/2. Repeatable: the same answer is then certain.
/// Throws when the answer has zero probability.
DensityMatrix lueders_update(const SystemKind& sys, const DensityMatrix& rho,
                             const QuestionIndex& q, bool yes);

/// rho = 2^-n (p I + sum_i r_i P_i) with r_i = 2 y_i - p over the complete
/// set ordering.
DensityMatrix bloch_to_density(const BlochState& state);

/// Inverse map: p = tr(rho), y_i = (tr(rho P_i) + p)/2. Round-trips with
/// bloch_to_density to 1e-12 for states in the representable span.
BlochState density_to_bloch(const SystemKind& sys, const DensityMatrix& rho);

/// Validation helpers.
bool is_hermitian(const DensityMatrix& rho, double tol = 1e-12);
bool is_positive_semidefinite(const DensityMatrix& rho, double tol = 1e-10);

/// tr(rho^2); equals 2^-n (p^2 + sum r_i^2), which bridges purity and the
/// squared Bloch length.
double purity(const DensityMatrix& rho);

/// Debug export: matrix as JSON-style nested arrays of [re, im] pairs.
std::string matrix_to_json(const DensityMatrix& m);

}  // namespace gbit
