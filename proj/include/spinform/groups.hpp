// Copyright 2026 The Spinform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINFORM_GROUPS_HPP
#define SPINFORM_GROUPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spinform/bases.hpp"
#include "spinform/tensor_core.hpp"

namespace spinform {

struct Check {
    bool passed = false;
    double residual = 0.0;
};

/// ||flip_operator(M)^dagger M - I||_F; zero exactly when (M psi, M phi) = (psi, phi) for all psi, phi.
Check is_form_preserving(const GlobalOperator &m, const Tolerances &tol = {});

/// Single-factor diagnostics. flip_local(A)^dagger A = det(A) I for every 2x2 A, so the symplectic
/// residual is sqrt(2) |det A - 1| and the two criteria agree.
struct LocalFactorReport {
    Check symplectic;  // ||flip_local(A)^dagger A - I||_F
    cplx det;
    Check unit_det;  // |det A - 1|
    bool criteria_agree = false;
};

std::vector<LocalFactorReport> local_form_criterion(const LocalOperatorList &ops, const Tolerances &tol = {});

/// Divides each factor by a square root of its determinant. Throws if some |det - 1| exceeds tol.residual.
LocalOperatorList renormalize_sl2(const LocalOperatorList &ops, const Tolerances &tol = {});

/// Magic basis for even n, product bi-orthonormal basis for odd n.
BasisSet canonical_basis(int n);

/// R(j, k) = <x_j | M x_k>. Throws unless the basis is bi-orthonormal.
Eigen::MatrixXcd represent_in_basis(const GlobalOperator &m, const BasisSet &basis, const Tolerances &tol = {});

/// ||R^T R - I||_F for even n, ||R^T J R - J||_F for odd n.
double group_residual(const Eigen::MatrixXcd &r, int n);

struct HomomorphismReport {
    int n = 0;
    int trials = 0;
    Check group;             // residual of R(L) in O(2^n) or Sp
    Check multiplicativity;  // max over trials of ||R(L L') - R(L) R(L')||_F
    double max_partner_group_residual = 0.0;
    cplx det_r;  // reported only; no claim about which component of O(2^n, C) is hit
};

/// Represents L in the canonical basis and checks group membership plus R(L L') = R(L) R(L')
/// for `trials` random SL(2) lists L'.
HomomorphismReport homomorphism_check(const LocalOperatorList &ops, int trials, std::uint64_t seed,
                                      const Tolerances &tol = {});

enum class Obstruction { Obstructed, NotObstructed };

struct SloccVerdict {
    Obstruction verdict = Obstruction::NotObstructed;
    double residual = 0.0;
    std::string explanation;
};

/// Necessary-condition test: a transformation that does not preserve the spin-flip form cannot
/// be a local SL(2) operation. NotObstructed is inconclusive.
SloccVerdict slocc_obstruction(const GlobalOperator &m, const Tolerances &tol = {});

const char *to_string(Obstruction o);

}  // namespace spinform

#endif  // SPINFORM_GROUPS_HPP
