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

#include "spinform/spinflip.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace spinform {

const char *to_string(FormKind kind) { return kind == FormKind::Orthogonal ? "orthogonal" : "symplectic"; }

cplx i_power(int p) {
    switch (((p % 4) + 4) % 4) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

cplx flip_phase(std::uint64_t k, int n) {
    cplx phase = i_power(n);
    return (std::popcount(k) & 1) ? -phase : phase;
}

PureState flip_state(const PureState &psi) {
    const int n = psi.qubits();
    const std::uint64_t dim = psi.dim();
    const auto &in = psi.amplitudes();
    Eigen::VectorXcd out(in.size());
    for (std::uint64_t k = 0; k < dim; ++k) {
        out[static_cast<Eigen::Index>(complement_index(k, n))] =
            std::conj(in[static_cast<Eigen::Index>(k)]) * flip_phase(k, n);
    }
    return PureState(n, std::move(out));
}

Mat2 flip_local(const Mat2 &a) {
    Mat2 f;
    f << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
    // sigma_y is its own inverse.
    return f * a.conjugate() * f;
}

GlobalOperator flip_operator(const GlobalOperator &m) {
    const int n = m.qubits();
    const auto dim = static_cast<std::uint64_t>(m.matrix().rows());
    const auto &in = m.matrix();
    Eigen::MatrixXcd out(in.rows(), in.cols());
    // (F conj(M) F)(a, b) = F(a, ~a) conj(M(~a, ~b)) F(~b, b), with F(~k, k) = flip_phase(k).
    for (std::uint64_t b = 0; b < dim; ++b) {
        const std::uint64_t cb = complement_index(b, n);
        const cplx right = flip_phase(b, n);
        for (std::uint64_t a = 0; a < dim; ++a) {
            const std::uint64_t ca = complement_index(a, n);
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                flip_phase(ca, n) * std::conj(in(static_cast<Eigen::Index>(ca), static_cast<Eigen::Index>(cb))) * right;
        }
    }
    return GlobalOperator(n, std::move(out));
}

FormValue bilinear_form(const PureState &psi, const PureState &phi) {
    if (psi.qubits() != phi.qubits()) {
        throw std::invalid_argument("bilinear form of states with different qubit counts");
    }
    const int n = psi.qubits();
    const std::uint64_t dim = psi.dim();
    const auto &x = psi.amplitudes();
    const auto &y = phi.amplitudes();
    cplx even_sum = 0.0;
    cplx odd_sum = 0.0;
    for (std::uint64_t k = 0; k < dim; ++k) {
        cplx term = x[static_cast<Eigen::Index>(k)] * y[static_cast<Eigen::Index>(complement_index(k, n))];
        if (std::popcount(k) & 1) {
            odd_sum += term;
        } else {
            even_sum += term;
        }
    }
    return {(even_sum - odd_sum) * i_power(-n), form_kind(n)};
}

PureState flip_state_dense(const PureState &psi) {
    const int n = psi.qubits();
    checked_dim(n, kMaxDenseOracleQubits);
    Mat2 sy;
    sy << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
    GlobalOperator f = expand_local(LocalOperatorList(static_cast<std::size_t>(n), sy));
    return PureState(n, f.matrix() * psi.amplitudes().conjugate());
}

FormValue bilinear_form_dense(const PureState &psi, const PureState &phi) {
    if (psi.qubits() != phi.qubits()) {
        throw std::invalid_argument("bilinear form of states with different qubit counts");
    }
    return {hilbert_inner(flip_state_dense(psi), phi), form_kind(psi.qubits())};
}

Eigen::MatrixXcd form_matrix(int n) {
    auto dim = static_cast<Eigen::Index>(checked_dim(n, kMaxDenseQubits));
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
    const cplx base = i_power(-n);
    for (Eigen::Index k = 0; k < dim; ++k) {
        auto ck = static_cast<Eigen::Index>(complement_index(static_cast<std::uint64_t>(k), n));
        g(k, ck) = (std::popcount(static_cast<std::uint64_t>(k)) & 1) ? -base : base;
    }
    return g;
}

ParityReport form_parity_check(int n, int trials, std::uint64_t seed, const Tolerances &tol) {
    if (trials < 1) {
        throw std::invalid_argument("form_parity_check needs at least one trial");
    }
    ParityReport report;
    report.n = n;
    report.kind = form_kind(n);
    report.trials = trials;
    const double sign = report.kind == FormKind::Orthogonal ? 1.0 : -1.0;
    std::mt19937_64 seeder(seed);
    for (int t = 0; t < trials; ++t) {
        PureState psi = random_state(n, seeder());
        PureState phi = random_state(n, seeder());
        double r = std::abs(bilinear_form(psi, phi).value - sign * bilinear_form(phi, psi).value);
        report.max_residual = std::max(report.max_residual, r);
    }
    report.passed = report.max_residual <= tol.residual;
    return report;
}

}  // namespace spinform
