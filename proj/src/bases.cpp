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

#include "spinform/bases.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace spinform {

namespace {

void require_even(int n, const char *what) {
    if (n % 2 != 0) {
        throw std::invalid_argument(std::string(what) + " requires an even qubit count, got " + std::to_string(n));
    }
}

void require_odd(int n, const char *what) {
    if (n % 2 == 0) {
        throw std::invalid_argument(std::string(what) + " requires an odd qubit count, got " + std::to_string(n));
    }
}

/// Columns of G X where G = form_matrix(n), without materializing G.
Eigen::MatrixXcd apply_form_matrix(const Eigen::MatrixXcd &x, int n) {
    Eigen::MatrixXcd out(x.rows(), x.cols());
    for (Eigen::Index a = 0; a < x.rows(); ++a) {
        auto ua = static_cast<std::uint64_t>(a);
        auto ca = static_cast<Eigen::Index>(complement_index(ua, n));
        // G(a, ~a) = (-1)^popcount(a) (-i)^n
        cplx g = (std::popcount(ua) & 1) ? -i_power(-n) : i_power(-n);
        out.row(a) = g * x.row(ca);
    }
    return out;
}

Eigen::MatrixXcd gaussian_complex_matrix(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd a(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            double re = dist(rng);
            double im = dist(rng);
            a(i, j) = cplx(re, im);
        }
    }
    return a;
}

}  // namespace

BasisSet::BasisSet(int n, Eigen::MatrixXcd vectors, std::string ordering)
    : n_(n), vectors_(std::move(vectors)), ordering_(std::move(ordering)) {
    auto dim = static_cast<Eigen::Index>(checked_dim(n, kMaxDenseQubits));
    if (vectors_.rows() != dim || vectors_.cols() != dim) {
        throw std::invalid_argument("a basis on " + std::to_string(n) + " qubits needs " + std::to_string(dim) +
                                    " vectors of dimension " + std::to_string(dim));
    }
}

PureState BasisSet::vector(std::size_t j) const {
    if (j >= size()) {
        throw std::out_of_range("basis vector index out of range");
    }
    return PureState(n_, vectors_.col(static_cast<Eigen::Index>(j)));
}

std::vector<std::uint64_t> representative_labels(int n) {
    std::size_t half = checked_dim(n, kMaxStateQubits) / 2;
    std::vector<std::uint64_t> labels(half);
    for (std::size_t k = 0; k < half; ++k) {
        labels[k] = k;
    }
    return labels;
}

Eigen::MatrixXd canonical_pairing(Eigen::Index dim) {
    if (dim <= 0 || dim % 2 != 0) {
        throw std::invalid_argument("canonical pairing needs a positive even dimension");
    }
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index m = 0; m < dim; m += 2) {
        j(m, m + 1) = 1.0;
        j(m + 1, m) = -1.0;
    }
    return j;
}

PureState magic_vector(int n, std::size_t j) {
    require_even(n, "magic_vector");
    std::size_t dim = checked_dim(n, kMaxStateQubits);
    if (j >= dim) {
        throw std::out_of_range("magic basis index out of range");
    }
    const double r = 1.0 / std::sqrt(2.0);
    const std::uint64_t a = j / 2;
    const cplx s = flip_phase(a, n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    auto ia = static_cast<Eigen::Index>(a);
    auto ic = static_cast<Eigen::Index>(complement_index(a, n));
    if (j % 2 == 0) {
        v[ia] = r;
        v[ic] = r * s;
    } else {
        v[ia] = cplx(0, r);
        v[ic] = -cplx(0, r) * s;
    }
    return PureState(n, std::move(v));
}

std::vector<cplx> magic_coefficients(const PureState &psi) {
    const int n = psi.qubits();
    require_even(n, "magic_coefficients");
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<cplx> c(psi.dim());
    for (std::uint64_t a = 0; a < psi.dim() / 2; ++a) {
        cplx lo = psi[a];
        cplx hi = std::conj(flip_phase(a, n)) * psi[complement_index(a, n)];
        c[2 * a] = r * (lo + hi);
        c[2 * a + 1] = cplx(0, -r) * (lo - hi);
    }
    return c;
}

BasisSet magic_basis(int n) {
    require_even(n, "magic_basis");
    auto dim = static_cast<Eigen::Index>(checked_dim(n, kMaxDenseQubits));
    Eigen::MatrixXcd x(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        x.col(j) = magic_vector(n, static_cast<std::size_t>(j)).amplitudes();
    }
    return BasisSet(n, std::move(x), kMagicOrdering);
}

BasisSet product_biortho_basis(int n) {
    require_odd(n, "product_biortho_basis");
    auto dim = static_cast<Eigen::Index>(checked_dim(n, kMaxDenseQubits));
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::Index col = 0;
    for (std::uint64_t a : representative_labels(n)) {
        std::uint64_t b = complement_index(a, n);
        // n odd: exactly one of a, ~a has even popcount, and that member pairs to +1.
        if (std::popcount(a) & 1) {
            std::swap(a, b);
        }
        for (std::uint64_t label : {a, b}) {
            // Each |0> factor contributes i, each |1> factor contributes 1.
            x(static_cast<Eigen::Index>(label), col++) = i_power(n - std::popcount(label));
        }
    }
    return BasisSet(n, std::move(x), kProductOrdering);
}

BasisVerdict check_biorthonormal(const BasisSet &basis, const Tolerances &tol) {
    const int n = basis.qubits();
    const auto &x = basis.vectors();
    BasisVerdict verdict;
    verdict.grams.hilbert_gram = x.adjoint() * x;
    verdict.grams.form_gram = x.transpose() * apply_form_matrix(x, n);
    verdict.hilbert_residual = identity_residual(verdict.grams.hilbert_gram);
    if (form_kind(n) == FormKind::Orthogonal) {
        verdict.form_residual = identity_residual(verdict.grams.form_gram);
    } else {
        Eigen::MatrixXcd target = canonical_pairing(x.cols()).cast<cplx>();
        verdict.form_residual = (verdict.grams.form_gram - target).norm();
    }
    const bool hilbert_ok = verdict.hilbert_residual <= tol.gram;
    const bool form_ok = verdict.form_residual <= tol.gram;
    verdict.passed = hilbert_ok && form_ok;
    if (verdict.passed) {
        verdict.detail = "bi-orthonormal";
    } else if (!hilbert_ok && !form_ok) {
        verdict.detail = "Hilbert Gram and form Gram both off target";
    } else if (!hilbert_ok) {
        verdict.detail = "Hilbert Gram is not the identity";
    } else {
        verdict.detail = form_kind(n) == FormKind::Orthogonal ? "form Gram is not the identity"
                                                               : "form Gram is not the canonical pairing";
    }
    return verdict;
}

BasisSet basis_from_orthogonal(const Eigen::MatrixXd &o, int n, const Tolerances &tol) {
    require_even(n, "basis_from_orthogonal");
    auto dim = static_cast<Eigen::Index>(checked_dim(n, kMaxDenseQubits));
    if (o.rows() != dim || o.cols() != dim) {
        throw std::invalid_argument("orthogonal matrix has the wrong shape for " + std::to_string(n) + " qubits");
    }
    double r = (o.transpose() * o - Eigen::MatrixXd::Identity(dim, dim)).norm();
    if (r > tol.residual) {
        throw std::invalid_argument("matrix is not orthogonal (residual " + std::to_string(r) + ")");
    }
    BasisSet magic = magic_basis(n);
    return BasisSet(n, magic.vectors() * o.transpose().cast<cplx>(), "magic basis rotated by a real orthogonal matrix");
}

BasisSet basis_from_orthogonal(const Eigen::MatrixXcd &o, int n, const Tolerances &tol) {
    if (o.imag().cwiseAbs().maxCoeff() > tol.residual) {
        throw std::invalid_argument("orthogonal matrix must be real");
    }
    return basis_from_orthogonal(Eigen::MatrixXd(o.real()), n, tol);
}

Eigen::MatrixXcd decompose_basis(const BasisSet &basis, const Tolerances &tol) {
    require_even(basis.qubits(), "decompose_basis");
    BasisVerdict verdict = check_biorthonormal(basis, tol);
    if (!verdict.passed) {
        throw std::invalid_argument("basis is not bi-orthonormal: " + verdict.detail);
    }
    BasisSet magic = magic_basis(basis.qubits());
    Eigen::MatrixXcd c = (magic.vectors().adjoint() * basis.vectors()).transpose();
    double imag = c.imag().cwiseAbs().maxCoeff();
    Eigen::MatrixXd re = c.real();
    double orth = (re.transpose() * re - Eigen::MatrixXd::Identity(re.rows(), re.cols())).norm();
    if (imag > tol.residual || orth > tol.residual) {
        throw std::runtime_error("magic-basis coefficients are not real orthogonal (imag " + std::to_string(imag) +
                                 ", orthogonality residual " + std::to_string(orth) + ")");
    }
    return c;
}

Eigen::MatrixXd random_real_orthogonal(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1) {
        throw std::invalid_argument("dimension must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXd a(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            a(i, j) = dist(rng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        if (r(j, j) < 0) {
            q.col(j) *= -1.0;
        }
    }
    return q;
}

Eigen::MatrixXcd random_unitary(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1) {
        throw std::invalid_argument("dimension must be positive");
    }
    std::mt19937_64 rng(seed);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian_complex_matrix(dim, rng));
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        double mag = std::abs(r(j, j));
        if (mag > 0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

double symplectic_residual(const Eigen::MatrixXcd &s) {
    Eigen::MatrixXcd j = canonical_pairing(s.rows()).cast<cplx>();
    return (s.transpose() * j * s - j).norm();
}

double unitary_residual(const Eigen::MatrixXcd &s) { return identity_residual(s.adjoint() * s); }

Eigen::MatrixXcd random_unitary_symplectic(Eigen::Index dim, std::uint64_t seed) {
    Eigen::MatrixXcd j = canonical_pairing(dim).cast<cplx>();
    std::mt19937_64 rng(seed);
    Eigen::MatrixXcd a = gaussian_complex_matrix(dim, rng);
    Eigen::MatrixXcd x = (a - a.adjoint()) / 2.0;
    // X -> -J^T X^T J is an involution that fixes exactly sp(dim, C) and preserves
    // anti-Hermiticity, so averaging projects onto the compact symplectic algebra.
    Eigen::MatrixXcd generator = (x - j.transpose() * x.transpose() * j) / 2.0;
    return generator.exp();
}

BasisSet basis_from_unitary_symplectic(const Eigen::MatrixXcd &s, int n, const Tolerances &tol) {
    require_odd(n, "basis_from_unitary_symplectic");
    auto dim = static_cast<Eigen::Index>(checked_dim(n, kMaxDenseQubits));
    if (s.rows() != dim || s.cols() != dim) {
        throw std::invalid_argument("matrix has the wrong shape for " + std::to_string(n) + " qubits");
    }
    double ru = unitary_residual(s);
    if (ru > tol.residual) {
        throw std::invalid_argument("matrix is not unitary (residual " + std::to_string(ru) + ")");
    }
    double rs = symplectic_residual(s);
    if (rs > tol.residual) {
        throw std::invalid_argument("matrix is not symplectic (residual " + std::to_string(rs) + ")");
    }
    BasisSet product = product_biortho_basis(n);
    return BasisSet(n, product.vectors() * s.transpose(), "product basis transformed by a unitary-symplectic matrix");
}

Eigen::MatrixXcd coefficients_over_product(const BasisSet &basis) {
    BasisSet product = product_biortho_basis(basis.qubits());
    return (product.vectors().adjoint() * basis.vectors()).transpose();
}

SelfConjugacyVerdict self_conjugacy_coefficient_check(const PureState &psi, const Tolerances &tol) {
    const int n = psi.qubits();
    require_even(n, "self_conjugacy_coefficient_check");
    SelfConjugacyVerdict verdict;
    for (std::uint64_t k = 0; k < psi.dim(); ++k) {
        cplx expected = std::conj(psi[k]) * flip_phase(k, n);
        verdict.residual = std::max(verdict.residual, std::abs(psi[complement_index(k, n)] - expected));
    }
    verdict.passed = verdict.residual <= tol.residual;
    return verdict;
}

}  // namespace spinform
