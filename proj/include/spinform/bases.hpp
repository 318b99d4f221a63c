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

#ifndef SPINFORM_BASES_HPP
#define SPINFORM_BASES_HPP

#include <cstdint>
#include <string>

#include "spinform/spinflip.hpp"
#include "spinform/tensor_core.hpp"

namespace spinform {

/// An ordered list of 2^n states on n qubits, stored as the columns of a dense matrix.
class BasisSet {
   public:
    BasisSet(int n, Eigen::MatrixXcd vectors, std::string ordering);

    int qubits() const { return n_; }
    std::size_t size() const { return static_cast<std::size_t>(vectors_.cols()); }
    const Eigen::MatrixXcd &vectors() const { return vectors_; }
    const std::string &ordering() const { return ordering_; }
    PureState vector(std::size_t j) const;

   private:
    int n_;
    Eigen::MatrixXcd vectors_;
    std::string ordering_;
};

inline constexpr const char *kMagicOrdering = "magic: representatives k with top bit 0 ascending, e+ then e-";
inline constexpr const char *kProductOrdering =
    "product: complement pairs by ascending representative, even-popcount member first";

struct GramPair {
    Eigen::MatrixXcd hilbert_gram;
    Eigen::MatrixXcd form_gram;
};

struct BasisVerdict {
    bool passed = false;
    double hilbert_residual = 0.0;  // ||H - I||_F
    double form_residual = 0.0;     // ||F - target||_F, target I (n even) or J (n odd)
    GramPair grams;
    std::string detail;
};

/// Representative labels for sums over one member of each complement pair {k, ~k}:
/// the k below 2^(n-1), ascending.
std::vector<std::uint64_t> representative_labels(int n);

/// Block-diagonal [[0, 1], [-1, 0]] pairing of the given even dimension.
Eigen::MatrixXd canonical_pairing(Eigen::Index dim);

/// Generalized magic basis: for each representative label a, the self-conjugate pair
///   e+_a = (|a> + s_a |~a>) / sqrt2,   e-_a = i (|a> - s_a |~a>) / sqrt2,
/// with s_a = (-1)^popcount(a) i^n. Requires even n.
BasisSet magic_basis(int n);

/// Single magic basis vector j (same ordering as magic_basis), usable beyond the dense basis cap.
PureState magic_vector(int n, std::size_t j);

/// Coefficients c_j = <e_j|psi> in the magic basis, computed pairwise in O(2^n) for any even n.
std::vector<cplx> magic_coefficients(const PureState &psi);

/// Tensor products of per-qubit {i|0>, |1>}, ordered so the form Gram is canonical_pairing. Requires odd n.
BasisSet product_biortho_basis(int n);

/// Both Gram matrices, Hilbert and spin-flip form, with residuals against their targets.
BasisVerdict check_biorthonormal(const BasisSet &basis, const Tolerances &tol = {});

/// x_j = sum_l O(j, l) e_l over the magic basis. O must be real orthogonal; n even.
BasisSet basis_from_orthogonal(const Eigen::MatrixXd &o, int n, const Tolerances &tol = {});
/// Complex-typed entry point: rejects matrices with imaginary parts above tol.residual.
BasisSet basis_from_orthogonal(const Eigen::MatrixXcd &o, int n, const Tolerances &tol = {});

/// Coefficient matrix C with x_j = sum_l C(j, l) e_l. Throws if the basis is not bi-orthonormal
/// or if C is not real orthogonal.
Eigen::MatrixXcd decompose_basis(const BasisSet &basis, const Tolerances &tol = {});

/// Haar orthogonal matrix: QR of a real Gaussian matrix with the sign of diag(R) folded into Q.
Eigen::MatrixXd random_real_orthogonal(Eigen::Index dim, std::uint64_t seed);

/// Haar unitary matrix from QR of a complex Ginibre matrix.
Eigen::MatrixXcd random_unitary(Eigen::Index dim, std::uint64_t seed);

/// ||S^T J S - J||_F against canonical_pairing.
double symplectic_residual(const Eigen::MatrixXcd &s);
/// ||S^dagger S - I||_F.
double unitary_residual(const Eigen::MatrixXcd &s);

/// exp(X) for X drawn from the Lie algebra of anti-Hermitian matrices with X^T J + J X = 0.
Eigen::MatrixXcd random_unitary_symplectic(Eigen::Index dim, std::uint64_t seed);

/// x_j = sum_l S(j, l) b_l over product_biortho_basis(n). S must be unitary and symplectic; n odd.
BasisSet basis_from_unitary_symplectic(const Eigen::MatrixXcd &s, int n, const Tolerances &tol = {});

/// Coefficient matrix of a basis over product_biortho_basis(n) (n odd); no validity checks.
Eigen::MatrixXcd coefficients_over_product(const BasisSet &basis);

struct SelfConjugacyVerdict {
    bool passed = false;
    double residual = 0.0;  // max_k |psi(~k) - conj(psi(k)) (-1)^popcount(k) i^n|
};

/// Coefficient-level self-conjugacy test for even n (equivalent to flip_state(psi) == psi).
SelfConjugacyVerdict self_conjugacy_coefficient_check(const PureState &psi, const Tolerances &tol = {});

}  // namespace spinform

#endif  // SPINFORM_BASES_HPP
