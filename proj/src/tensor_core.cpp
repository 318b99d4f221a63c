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

#include "spinform/tensor_core.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace spinform {

namespace {

cplx gaussian_complex(std::mt19937_64 &rng, std::normal_distribution<double> &dist) {
    double re = dist(rng);
    double im = dist(rng);
    return {re, im};
}

}  // namespace

void Tolerances::validate() const {
    // Negated comparisons also reject NaN.
    if (!(norm >= 0.0) || !(gram >= 0.0) || !(residual >= 0.0)) {
        throw std::invalid_argument("tolerances must be nonnegative");
    }
}

std::size_t checked_dim(int n, int max_qubits) {
    if (n < 1) {
        throw std::invalid_argument("qubit count must be positive, got " + std::to_string(n));
    }
    if (n > max_qubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " exceeds the dense limit of " +
                                    std::to_string(max_qubits));
    }
    return std::size_t{1} << n;
}

PureState::PureState(int n, Eigen::VectorXcd amp) : n_(n), amp_(std::move(amp)) {
    std::size_t dim = checked_dim(n, kMaxStateQubits);
    if (static_cast<std::size_t>(amp_.size()) != dim) {
        throw std::invalid_argument("state on " + std::to_string(n) + " qubits needs " + std::to_string(dim) +
                                    " amplitudes, got " + std::to_string(amp_.size()));
    }
}

PureState::PureState(int n, std::span<const cplx> amp)
    : PureState(n, Eigen::Map<const Eigen::VectorXcd>(amp.data(), static_cast<Eigen::Index>(amp.size()))) {}

PureState PureState::basis(int n, std::uint64_t k) {
    std::size_t dim = checked_dim(n, kMaxStateQubits);
    if (k >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(k)] = 1.0;
    return PureState(n, std::move(v));
}

bool PureState::is_normalized(const Tolerances &tol) const {
    return std::abs(amp_.squaredNorm() - 1.0) <= tol.norm;
}

GlobalOperator::GlobalOperator(int n, Eigen::MatrixXcd mat) : n_(n), mat_(std::move(mat)) {
    auto dim = static_cast<Eigen::Index>(checked_dim(n, kMaxDenseQubits));
    if (mat_.rows() != dim || mat_.cols() != dim) {
        throw std::invalid_argument("operator on " + std::to_string(n) + " qubits must be " + std::to_string(dim) +
                                    "x" + std::to_string(dim));
    }
}

GlobalOperator GlobalOperator::identity(int n) {
    auto dim = static_cast<Eigen::Index>(checked_dim(n, kMaxDenseQubits));
    return GlobalOperator(n, Eigen::MatrixXcd::Identity(dim, dim));
}

PureState make_state(int n, std::span<const cplx> amp) { return PureState(n, amp); }

cplx hilbert_inner(const PureState &psi, const PureState &phi) {
    if (psi.qubits() != phi.qubits()) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    // Eigen's dot() conjugates the left operand.
    return psi.amplitudes().dot(phi.amplitudes());
}

PureState normalize(const PureState &psi) {
    double nrm = psi.norm();
    if (nrm == 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return PureState(psi.qubits(), psi.amplitudes() / nrm);
}

PureState tensor_states(const PureState &psi, const PureState &phi) {
    int n = psi.qubits() + phi.qubits();
    checked_dim(n, kMaxStateQubits);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(psi.dim() * phi.dim()));
    auto inner = static_cast<Eigen::Index>(phi.dim());
    for (Eigen::Index a = 0; a < psi.amplitudes().size(); ++a) {
        out.segment(a * inner, inner) = psi.amplitudes()[a] * phi.amplitudes();
    }
    return PureState(n, std::move(out));
}

PureState scale(const PureState &psi, cplx a) { return PureState(psi.qubits(), a * psi.amplitudes()); }

PureState add(const PureState &psi, const PureState &phi) {
    if (psi.qubits() != phi.qubits()) {
        throw std::invalid_argument("cannot add states with different qubit counts");
    }
    return PureState(psi.qubits(), psi.amplitudes() + phi.amplitudes());
}

GlobalOperator expand_local(const LocalOperatorList &ops) {
    if (ops.empty()) {
        throw std::invalid_argument("local operator list is empty");
    }
    int n = static_cast<int>(ops.size());
    auto dim = static_cast<Eigen::Index>(checked_dim(n, kMaxDenseQubits));
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index row = 0; row < dim; ++row) {
        for (Eigen::Index col = 0; col < dim; ++col) {
            cplx entry = 1.0;
            for (int q = 1; q <= n && entry != 0.0; ++q) {
                entry *= ops[q - 1](qubit_bit(row, q, n), qubit_bit(col, q, n));
            }
            out(row, col) = entry;
        }
    }
    return GlobalOperator(n, std::move(out));
}

PureState apply_local(const LocalOperatorList &ops, const PureState &psi) {
    int n = psi.qubits();
    if (static_cast<int>(ops.size()) != n) {
        throw std::invalid_argument("local operator list length does not match the qubit count");
    }
    Eigen::VectorXcd v = psi.amplitudes();
    const std::uint64_t dim = psi.dim();
    for (int q = 1; q <= n; ++q) {
        const Mat2 &a = ops[q - 1];
        const std::uint64_t stride = std::uint64_t{1} << (n - q);
        for (std::uint64_t k = 0; k < dim; ++k) {
            if (k & stride) {
                continue;
            }
            cplx lo = v[k];
            cplx hi = v[k | stride];
            v[k] = a(0, 0) * lo + a(0, 1) * hi;
            v[k | stride] = a(1, 0) * lo + a(1, 1) * hi;
        }
    }
    return PureState(n, std::move(v));
}

PureState apply(const GlobalOperator &m, const PureState &psi) {
    if (m.qubits() != psi.qubits()) {
        throw std::invalid_argument("operator and state have different qubit counts");
    }
    return PureState(psi.qubits(), m.matrix() * psi.amplitudes());
}

GlobalOperator multiply(const GlobalOperator &a, const GlobalOperator &b) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("operators have different qubit counts");
    }
    return GlobalOperator(a.qubits(), a.matrix() * b.matrix());
}

PureState random_state(int n, std::uint64_t seed) {
    std::size_t dim = checked_dim(n, kMaxStateQubits);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
    for (auto &x : v) {
        x = gaussian_complex(rng, dist);
    }
    return normalize(PureState(n, std::move(v)));
}

Mat2 random_sl2(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
    for (int attempt = 0; attempt < 100; ++attempt) {
        Mat2 m;
        m << gaussian_complex(rng, dist), gaussian_complex(rng, dist), gaussian_complex(rng, dist),
            gaussian_complex(rng, dist);
        cplx det = m.determinant();
        if (std::abs(det) < 1e-6) {
            continue;
        }
        return m / std::sqrt(det);
    }
    throw std::runtime_error("random_sl2: failed to draw an invertible matrix in 100 attempts");
}

Mat2 random_su2(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::Vector4d p;
    do {
        for (auto &x : p) {
            x = dist(rng);
        }
    } while (p.norm() < 1e-12);
    p.normalize();
    Mat2 u;
    u << cplx(p[0], p[1]), cplx(p[2], p[3]), cplx(-p[2], p[3]), cplx(p[0], -p[1]);
    return u;
}

LocalOperatorList random_sl2_list(int n, std::uint64_t seed) {
    checked_dim(n, kMaxStateQubits);
    std::mt19937_64 seeder(seed);
    LocalOperatorList ops;
    ops.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        ops.push_back(random_sl2(seeder()));
    }
    return ops;
}

double identity_residual(const Eigen::MatrixXcd &m) {
    return (m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm();
}

}  // namespace spinform
