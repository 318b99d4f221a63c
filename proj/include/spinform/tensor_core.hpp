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

#ifndef SPINFORM_TENSOR_CORE_HPP
#define SPINFORM_TENSOR_CORE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spinform {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

/// Largest qubit count for which a dense state vector is accepted.
inline constexpr int kMaxStateQubits = 24;
/// Largest qubit count for which a dense 2^n x 2^n operator (or basis) is materialized.
inline constexpr int kMaxDenseQubits = 12;

struct Tolerances {
    double norm = 1e-12;
    double gram = 1e-10;
    double residual = 1e-8;

    /// Throws std::invalid_argument if any field is negative or NaN.
    void validate() const;
};

/// Bit of qubit `qubit` (1-based, qubit 1 is the most significant bit) in flat index `k`.
inline int qubit_bit(std::uint64_t k, int qubit, int n) {
    return static_cast<int>((k >> (n - qubit)) & 1U);
}

/// Bitwise complement of `k` restricted to n bits, i.e. the label |j_1+1, ..., j_n+1>.
inline std::uint64_t complement_index(std::uint64_t k, int n) {
    return ~k & ((std::uint64_t{1} << n) - 1);
}

/// Amplitude vector of an n-qubit pure state. Index k encodes |j_1 ... j_n> with
/// j_1 the most significant bit. No normalization is implied.
class PureState {
   public:
    PureState(int n, Eigen::VectorXcd amp);
    PureState(int n, std::span<const cplx> amp);

    /// Computational basis state |k>.
    static PureState basis(int n, std::uint64_t k);

    int qubits() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
    const Eigen::VectorXcd &amplitudes() const { return amp_; }
    cplx operator[](std::size_t k) const { return amp_[static_cast<Eigen::Index>(k)]; }

    double norm() const { return amp_.norm(); }
    bool is_normalized(const Tolerances &tol = {}) const;

   private:
    int n_;
    Eigen::VectorXcd amp_;
};

/// Dense operator on n qubits; rows and columns follow PureState indexing.
class GlobalOperator {
   public:
    GlobalOperator(int n, Eigen::MatrixXcd mat);

    static GlobalOperator identity(int n);

    int qubits() const { return n_; }
    const Eigen::MatrixXcd &matrix() const { return mat_; }

   private:
    int n_;
    Eigen::MatrixXcd mat_;
};

/// A_1 (x) ... (x) A_n, stored factor by factor.
using LocalOperatorList = std::vector<Mat2>;

PureState make_state(int n, std::span<const cplx> amp);

/// <psi|phi>, conjugate-linear in the first argument.
cplx hilbert_inner(const PureState &psi, const PureState &phi);

PureState normalize(const PureState &psi);

/// Product state on n_psi + n_phi qubits; psi occupies the leading (most significant) qubits.
PureState tensor_states(const PureState &psi, const PureState &phi);

PureState scale(const PureState &psi, cplx a);
PureState add(const PureState &psi, const PureState &phi);

/// Materializes A_1 (x) ... (x) A_n as a dense matrix. n is capped at kMaxDenseQubits.
GlobalOperator expand_local(const LocalOperatorList &ops);

/// Applies A_1 (x) ... (x) A_n to psi without materializing the Kronecker product.
PureState apply_local(const LocalOperatorList &ops, const PureState &psi);

PureState apply(const GlobalOperator &m, const PureState &psi);

GlobalOperator multiply(const GlobalOperator &a, const GlobalOperator &b);

/// Uniformly distributed unit state (normalized i.i.d. complex Gaussians).
PureState random_state(int n, std::uint64_t seed);

/// Complex Ginibre 2x2 matrix rescaled to unit determinant.
Mat2 random_sl2(std::uint64_t seed);

/// Haar-random element of SU(2) from a uniform point on the 3-sphere.
Mat2 random_su2(std::uint64_t seed);

/// Unit-determinant list of n independent random_sl2 factors.
LocalOperatorList random_sl2_list(int n, std::uint64_t seed);

/// Frobenius norm of (m - identity).
double identity_residual(const Eigen::MatrixXcd &m);

/// Dimension 2^n after range-checking n against `max_qubits`.
std::size_t checked_dim(int n, int max_qubits);

}  // namespace spinform

#endif  // SPINFORM_TENSOR_CORE_HPP
