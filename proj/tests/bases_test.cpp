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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "spinform/spinflip.hpp"

namespace spinform {
namespace {

const Tolerances kTol;
const double r = 1.0 / std::sqrt(2.0);

Eigen::VectorXcd ket2(std::initializer_list<cplx> amps) {
    Eigen::VectorXcd v(4);
    int i = 0;
    for (cplx a : amps) {
        v[i++] = a;
    }
    return v;
}

TEST(MagicBasis, TwoQubitVectors) {
    BasisSet b = magic_basis(2);
    const cplx I(0, 1);
    Eigen::VectorXcd expected[] = {
        ket2({r, 0, 0, -r}),          // (|00> - |11>)/sqrt2
        ket2({I * r, 0, 0, I * r}),   // i(|00> + |11>)/sqrt2
        ket2({0, r, r, 0}),           // (|01> + |10>)/sqrt2
        ket2({0, I * r, -I * r, 0}),  // i(|01> - |10>)/sqrt2
    };
    for (int j = 0; j < 4; ++j) {
        EXPECT_LT((b.vectors().col(j) - expected[j]).norm(), 1e-15) << j;
        // Self-conjugate under the dense sigma_y oracle.
        EXPECT_LT((oracle::flip(expected[j], 2) - expected[j]).norm(), 1e-15) << j;
    }
}

TEST(MagicBasis, BiorthonormalAndSelfConjugate) {
    for (int n : {2, 4, 6}) {
        BasisSet b = magic_basis(n);
        BasisVerdict v = check_biorthonormal(b, kTol);
        EXPECT_TRUE(v.passed) << n << ": " << v.detail;
        for (std::size_t j = 0; j < b.size(); ++j) {
            PureState x = b.vector(j);
            EXPECT_LT((flip_state(x).amplitudes() - x.amplitudes()).norm(), kTol.residual);
            EXPECT_TRUE(self_conjugacy_coefficient_check(x, kTol).passed);
        }
    }
    EXPECT_THROW(magic_basis(3), std::invalid_argument);
}

TEST(MagicBasis, Cardinality) {
    for (int n : {2, 4, 6}) {
        EXPECT_EQ(representative_labels(n).size(), std::size_t{1} << (n - 1));
        EXPECT_EQ(magic_basis(n).size(), std::size_t{1} << n);
    }
}

TEST(MagicBasis, VectorAccessorBeyondDenseCap) {
    PureState v = magic_vector(16, 5);
    EXPECT_TRUE(v.is_normalized());
    EXPECT_TRUE(self_conjugacy_coefficient_check(v, kTol).passed);
}

TEST(MagicBasis, CoefficientsMatchDenseProjection) {
    for (int n : {2, 4}) {
        BasisSet b = magic_basis(n);
        PureState psi = random_state(n, 40 + n);
        Eigen::VectorXcd dense = b.vectors().adjoint() * psi.amplitudes();
        std::vector<cplx> fast = magic_coefficients(psi);
        for (std::size_t j = 0; j < fast.size(); ++j) {
            EXPECT_LT(std::abs(fast[j] - dense[static_cast<Eigen::Index>(j)]), 1e-14);
        }
    }
}

TEST(ProductBasis, SingleQubit) {
    BasisSet b = product_biortho_basis(1);
    EXPECT_EQ(b.vectors()(0, 0), cplx(0, 1));
    EXPECT_EQ(b.vectors()(1, 1), cplx(1, 0));
    BasisVerdict v = check_biorthonormal(b, kTol);
    Eigen::Matrix2cd j;
    j << 0, 1, -1, 0;
    EXPECT_LT((v.grams.form_gram - j).norm(), 1e-15);
    EXPECT_TRUE(v.passed);
}

TEST(ProductBasis, ThreeQubits) {
    BasisSet b = product_biortho_basis(3);
    for (std::size_t j = 0; j < b.size(); ++j) {
        EXPECT_NEAR(b.vector(j).norm(), 1.0, 1e-15);
    }
    // Form Gram from the dense oracle on every pair, compared with the block pairing.
    Eigen::MatrixXcd gram(8, 8);
    for (int a = 0; a < 8; ++a) {
        for (int c = 0; c < 8; ++c) {
            gram(a, c) = oracle::form(b.vectors().col(a), b.vectors().col(c), 3);
        }
    }
    EXPECT_LT((gram - canonical_pairing(8).cast<cplx>()).norm(), kTol.gram);
    EXPECT_TRUE(check_biorthonormal(b, kTol).passed);
    EXPECT_THROW(product_biortho_basis(2), std::invalid_argument);
}

TEST(CheckBiorthonormal, ComputationalBasisFails) {
    BasisSet comp(2, Eigen::MatrixXcd::Identity(4, 4), "computational");
    BasisVerdict v = check_biorthonormal(comp, kTol);
    EXPECT_FALSE(v.passed);
    EXPECT_LT(v.hilbert_residual, 1e-15);
    // Form Gram is anti-diagonal: (|00>,|11>) = -1, (|01>,|10>) = +1.
    Eigen::MatrixXcd anti = Eigen::MatrixXcd::Zero(4, 4);
    anti(0, 3) = -1;
    anti(1, 2) = 1;
    anti(2, 1) = 1;
    anti(3, 0) = -1;
    EXPECT_LT((v.grams.form_gram - anti).norm(), 1e-15);
}

TEST(CheckBiorthonormal, GramSymmetry) {
    for (int n : {2, 3}) {
        Eigen::MatrixXcd x(Eigen::Index{1} << n, Eigen::Index{1} << n);
        for (Eigen::Index c = 0; c < x.cols(); ++c) {
            x.col(c) = random_state(n, 900 + c).amplitudes();
        }
        BasisVerdict v = check_biorthonormal(BasisSet(n, x, "random"), kTol);
        const auto &h = v.grams.hilbert_gram;
        const auto &f = v.grams.form_gram;
        EXPECT_LT((h - h.adjoint()).norm(), kTol.gram);
        double sign = n % 2 == 0 ? 1.0 : -1.0;
        EXPECT_LT((f - sign * f.transpose()).norm(), kTol.gram);
        EXPECT_FALSE(v.passed);
    }
}

TEST(BasisFromOrthogonal, ForwardDirection) {
    BasisSet same = basis_from_orthogonal(Eigen::MatrixXd(Eigen::MatrixXd::Identity(4, 4)), 2, kTol);
    EXPECT_LT((same.vectors() - magic_basis(2).vectors()).norm(), 1e-15);

    Eigen::MatrixXd reflect = Eigen::MatrixXd::Identity(4, 4);
    reflect(3, 3) = -1;
    EXPECT_TRUE(check_biorthonormal(basis_from_orthogonal(reflect, 2, kTol), kTol).passed);

    for (std::uint64_t s = 0; s < 100; ++s) {
        for (int n : {2, 4}) {
            Eigen::MatrixXd o = random_real_orthogonal(Eigen::Index{1} << n, s);
            BasisSet b = basis_from_orthogonal(o, n, kTol);
            ASSERT_TRUE(check_biorthonormal(b, kTol).passed);
            EXPECT_LT((decompose_basis(b, kTol) - o.cast<cplx>()).norm(), kTol.residual);
        }
    }
}

TEST(BasisFromOrthogonal, RejectsBadInput) {
    Eigen::MatrixXd scaled = 2.0 * Eigen::MatrixXd::Identity(4, 4);
    EXPECT_THROW(basis_from_orthogonal(scaled, 2, kTol), std::invalid_argument);
    Eigen::MatrixXcd complex_unitary = Eigen::MatrixXcd::Identity(4, 4) * std::polar(1.0, 0.3);
    EXPECT_THROW(basis_from_orthogonal(complex_unitary, 2, kTol), std::invalid_argument);
    EXPECT_THROW(basis_from_orthogonal(Eigen::MatrixXd(Eigen::MatrixXd::Identity(8, 8)), 3, kTol), std::invalid_argument);
}

TEST(DecomposeBasis, MagicIsIdentity) {
    EXPECT_LT(identity_residual(decompose_basis(magic_basis(2), kTol)), 1e-15);
}

TEST(DecomposeBasis, PhasePerturbationFails) {
    Eigen::MatrixXcd x = magic_basis(2).vectors();
    x.col(1) *= std::polar(1.0, std::numbers::pi / 4);
    BasisSet b(2, x, "perturbed");
    // The rotated vector is no longer self-conjugate.
    EXPECT_GT((oracle::flip(x.col(1), 2) - Eigen::VectorXcd(x.col(1))).norm(), 0.5);
    EXPECT_FALSE(check_biorthonormal(b, kTol).passed);
    EXPECT_THROW(decompose_basis(b, kTol), std::invalid_argument);
}

TEST(DecomposeBasis, AnyBiorthonormalBasisDecomposesToRealOrthogonal) {
    // A bi-orthonormal basis assembled by hand from e^{i theta}-free self-conjugate combinations.
    Eigen::MatrixXd o = random_real_orthogonal(16, 31);
    Eigen::MatrixXcd x = magic_basis(4).vectors() * o.transpose().cast<cplx>();
    Eigen::MatrixXcd c = decompose_basis(BasisSet(4, x, "hand"), kTol);
    EXPECT_LT(c.imag().cwiseAbs().maxCoeff(), kTol.residual);
    Eigen::MatrixXd re = c.real();
    EXPECT_LT((re.transpose() * re - Eigen::MatrixXd::Identity(16, 16)).norm(), kTol.residual);
}

TEST(RandomRealOrthogonal, Properties) {
    for (Eigen::Index dim : {1, 2, 4, 16}) {
        Eigen::MatrixXd o = random_real_orthogonal(dim, 8);
        EXPECT_LT((o.transpose() * o - Eigen::MatrixXd::Identity(dim, dim)).norm(), kTol.residual);
    }
    EXPECT_EQ(random_real_orthogonal(4, 5), random_real_orthogonal(4, 5));
    EXPECT_THROW(random_real_orthogonal(0, 1), std::invalid_argument);
}

TEST(RandomUnitarySymplectic, Properties) {
    for (Eigen::Index dim : {2, 8, 32}) {
        for (std::uint64_t s = 0; s < 10; ++s) {
            Eigen::MatrixXcd m = random_unitary_symplectic(dim, s);
            EXPECT_LT(unitary_residual(m), kTol.residual);
            EXPECT_LT(symplectic_residual(m), kTol.residual);
        }
    }
}

TEST(RandomUnitarySymplectic, DimensionTwoIsSu2) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        Eigen::MatrixXcd m = random_unitary_symplectic(2, s);
        EXPECT_LT(std::abs(m.determinant() - 1.0), kTol.residual);
    }
}

TEST(BasisFromUnitarySymplectic, ForwardDirection) {
    BasisSet same = basis_from_unitary_symplectic(Eigen::MatrixXcd::Identity(8, 8), 3, kTol);
    EXPECT_LT((same.vectors() - product_biortho_basis(3).vectors()).norm(), 1e-15);
    for (int n : {1, 3}) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            Eigen::MatrixXcd m = random_unitary_symplectic(Eigen::Index{1} << n, s);
            BasisSet b = basis_from_unitary_symplectic(m, n, kTol);
            ASSERT_TRUE(check_biorthonormal(b, kTol).passed);
            EXPECT_LT((coefficients_over_product(b) - m).norm(), kTol.residual);
        }
    }
}

TEST(BasisFromUnitarySymplectic, NegativeControls) {
    Eigen::MatrixXcd squeeze = Eigen::MatrixXcd::Identity(8, 8);
    squeeze(0, 0) = 2.0;
    squeeze(1, 1) = 0.5;
    ASSERT_LT(symplectic_residual(squeeze), 1e-15);
    EXPECT_THROW(basis_from_unitary_symplectic(squeeze, 3, kTol), std::invalid_argument);

    Eigen::MatrixXcd u = random_unitary(8, 4);
    ASSERT_GT(symplectic_residual(u), 1e-3);
    EXPECT_THROW(basis_from_unitary_symplectic(u, 3, kTol), std::invalid_argument);

    // Transforming the product basis directly with either matrix breaks bi-orthonormality.
    BasisSet p = product_biortho_basis(3);
    EXPECT_FALSE(check_biorthonormal(BasisSet(3, p.vectors() * squeeze.transpose(), "squeeze"), kTol).passed);
    EXPECT_FALSE(check_biorthonormal(BasisSet(3, p.vectors() * u.transpose(), "unitary"), kTol).passed);
}

TEST(BasisFromUnitarySymplectic, ConverseEmpirically) {
    // Bi-orthonormal bases from a different route (local SU(2) rotations of the product basis)
    // still decompose over the product basis into unitary-symplectic matrices.
    for (std::uint64_t s = 0; s < 20; ++s) {
        LocalOperatorList ops = {random_su2(3 * s), random_su2(3 * s + 1), random_su2(3 * s + 2)};
        BasisSet b(3, expand_local(ops).matrix() * product_biortho_basis(3).vectors(), "local rotation");
        ASSERT_TRUE(check_biorthonormal(b, kTol).passed);
        Eigen::MatrixXcd c = coefficients_over_product(b);
        EXPECT_LT(unitary_residual(c), kTol.residual);
        EXPECT_LT(symplectic_residual(c), kTol.residual);
    }
}

TEST(SelfConjugacy, Examples) {
    EXPECT_FALSE(self_conjugacy_coefficient_check(PureState::basis(2, 0), kTol).passed);
    PureState minus = normalize(add(PureState::basis(2, 0), scale(PureState::basis(2, 3), -1.0)));
    EXPECT_TRUE(self_conjugacy_coefficient_check(minus, kTol).passed);
    EXPECT_LT((oracle::flip(minus.amplitudes(), 2) - minus.amplitudes()).norm(), 1e-15);
    EXPECT_THROW(self_conjugacy_coefficient_check(PureState::basis(1, 0), kTol), std::invalid_argument);
}

}  // namespace
}  // namespace spinform
