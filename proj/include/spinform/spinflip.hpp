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

#ifndef SPINFORM_SPINFLIP_HPP
#define SPINFORM_SPINFLIP_HPP

#include <cstdint>

#include "spinform/tensor_core.hpp"

namespace spinform {

/// Symmetry type of the spin-flip bilinear form on n qubits.
enum class FormKind { Orthogonal, Symplectic };

inline FormKind form_kind(int n) { return n % 2 == 0 ? FormKind::Orthogonal : FormKind::Symplectic; }

const char *to_string(FormKind kind);

/// i^p, exact for any integer p.
cplx i_power(int p);

/// (-1)^popcount(k) * i^n: the phase picked up by |k> under the n-qubit spin flip,
/// which sends |k> to this phase times |~k>.
cplx flip_phase(std::uint64_t k, int n);

struct FormValue {
    cplx value;
    FormKind kind;
};

/// |psi-bar> = sigma_y^{(x)n} |psi*>, computed in O(2^n) without forming sigma_y^{(x)n}.
PureState flip_state(const PureState &psi);

/// Spin flip of a single-qubit operator, F conj(A) F^-1 with F = sigma_y.
Mat2 flip_local(const Mat2 &a);

/// Spin flip of a dense operator, F_n conj(M) F_n^-1 with F_n = sigma_y^{(x)n}.
GlobalOperator flip_operator(const GlobalOperator &m);

/// (psi, phi) = <psi-bar|phi>. Bilinear; symmetric for even n, antisymmetric for odd n.
/// The sum runs over k in ascending order so results are reproducible bit for bit.
FormValue bilinear_form(const PureState &psi, const PureState &phi);

/// Matrix G with (psi, phi) = psi^T G phi, i.e. G(a, b) = (|a>, |b>). Dense cap applies.
Eigen::MatrixXcd form_matrix(int n);

/// Dense reference path: sigma_y^{(x)n} materialized with expand_local, limited to n <= 8.
PureState flip_state_dense(const PureState &psi);
FormValue bilinear_form_dense(const PureState &psi, const PureState &phi);

inline constexpr int kMaxDenseOracleQubits = 8;

struct ParityReport {
    int n = 0;
    FormKind kind = FormKind::Orthogonal;
    int trials = 0;
    double max_residual = 0.0;
    bool passed = false;
};

/// Samples random pairs and measures |(psi, phi) - s (phi, psi)| with s = +1 for even n, -1 for odd n.
ParityReport form_parity_check(int n, int trials, std::uint64_t seed, const Tolerances &tol = {});

}  // namespace spinform

#endif  // SPINFORM_SPINFLIP_HPP
