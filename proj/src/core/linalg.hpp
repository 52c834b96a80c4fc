// Copyright 2026 The nmqc Authors
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

#ifndef NMQC_CORE_LINALG_HPP
#define NMQC_CORE_LINALG_HPP

#include <string>
#include <vector>

#include "core/types.hpp"

namespace nmqc {

enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

// |psi+-> = (|00> +- |11>)/sqrt(2), |phi+-> = (|01> +- |10>)/sqrt(2).
// PsiPlus/PsiMinus share all fidelity expressions, as do PhiPlus/PhiMinus;
// helpers below classify by family.
bool is_psi_family(BellKind kind);

// sigma_0..sigma_3 = I, X, Y, Z. Out-of-range index throws ArgumentError.
Mat2 pauli(int index);

Vec4 bell_state(BellKind kind);

// Kronecker product, qubit 1 = left factor.
Mat4 tensor(const Mat2& a, const Mat2& b);

// k acting on one qubit of a two-qubit register: tensor(k, I) for qubit 1,
// tensor(I, k) for qubit 2.
Mat4 embed_on_qubit(const Mat2& k, int qubit);

// An ordered set of 2x2 Kraus operators with sum K^dag K = I.
struct KrausSet {
  std::vector<Mat2> ops;
  std::string label;
};

// max entrywise |sum K^dag K - I|
double completeness_defect(const KrausSet& ks);

// rho -> sum_i K_i rho K_i^dag. Throws ChannelError if the completeness
// defect exceeds 1e-8.
Mat2 apply_channel(const Mat2& rho, const KrausSet& ks);
Mat4 apply_channel_on_qubit(const Mat4& rho, const KrausSet& ks, int qubit);

// Independent environments on the two qubits applied as one double sum
// rho -> sum_{ij} (K_i x L_j) rho (K_i x L_j)^dag.
Mat4 apply_channel_pair(const Mat4& rho, const KrausSet& on_qubit1,
                        const KrausSet& on_qubit2);

// <psi|rho|psi>. The quadratic form must be real up to 1e-10 (Hermitian rho);
// the result is clipped to [0,1] only for round-off up to 1e-12, anything
// further out throws NumericsError.
double fidelity_pure(const Vec2& psi, const Mat2& rho);
double fidelity_pure(const Vec4& psi, const Mat4& rho);

// Diagnostic: one message per violated density-matrix invariant
// (trace 1 within 1e-10, Hermitian within 1e-10, eigenvalues >= -1e-9).
// Empty result means rho is a valid state.
std::vector<std::string> validate_density(const Mat2& rho);
std::vector<std::string> validate_density(const Mat4& rho);

}  // namespace nmqc

#endif  // NMQC_CORE_LINALG_HPP
