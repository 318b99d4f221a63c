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

#include "spinform/groups.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "spinform/spinflip.hpp"

namespace spinform {

const char *to_string(Obstruction o) { return o == Obstruction::Obstructed ? "Obstructed" : "NotObstructed"; }

Check is_form_preserving(const GlobalOperator &m, const Tolerances &tol) {
    GlobalOperator bar = flip_operator(m);
    double r = identity_residual(bar.matrix().adjoint() * m.matrix());
    return {r <= tol.residual, r};
}

std::vector<LocalFactorReport> local_form_criterion(const LocalOperatorList &ops, const Tolerances &tol) {
    std::vector<LocalFactorReport> out;
    out.reserve(ops.size());
    for (const Mat2 &a : ops) {
        LocalFactorReport rep;
        double rs = (flip_local(a).adjoint() * a - Mat2::Identity()).norm();
        rep.symplectic = {rs <= tol.residual * std::sqrt(2.0), rs};
        rep.det = a.determinant();
        double rd = std::abs(rep.det - 1.0);
        rep.unit_det = {rd <= tol.residual, rd};
        rep.criteria_agree = rep.symplectic.passed == rep.unit_det.passed;
        out.push_back(rep);
    }
    return out;
}

LocalOperatorList renormalize_sl2(const LocalOperatorList &ops, const Tolerances &tol) {
    LocalOperatorList out;
    out.reserve(ops.size());
    for (const Mat2 &a : ops) {
        cplx det = a.determinant();
        if (std::abs(det - 1.0) > tol.residual) {
            throw std::invalid_argument("local factor is not in SL(2): |det - 1| = " + std::to_string(std::abs(det - 1.0)));
        }
        out.push_back(a / std::sqrt(det));
    }
    return out;
}

BasisSet canonical_basis(int n) { return n % 2 == 0 ? magic_basis(n) : product_biortho_basis(n); }

Eigen::MatrixXcd represent_in_basis(const GlobalOperator &m, const BasisSet &basis, const Tolerances &tol) {
    if (m.qubits() != basis.qubits()) {
        throw std::invalid_argument("operator and basis have different qubit counts");
    }
    BasisVerdict v = check_biorthonormal(basis, tol);
    if (!v.passed) {
        throw std::invalid_argument("basis is not bi-orthonormal: " + v.detail);
    }
    const auto &x = basis.vectors();
    return x.adjoint() * m.matrix() * x;
}

double group_residual(const Eigen::MatrixXcd &r, int n) {
    if (n % 2 == 0) {
        return identity_residual(r.transpose() * r);
    }
    return symplectic_residual(r);
}

HomomorphismReport homomorphism_check(const LocalOperatorList &ops, int trials, std::uint64_t seed,
                                      const Tolerances &tol) {
    if (trials < 0) {
        throw std::invalid_argument("trial count must be nonnegative");
    }
    LocalOperatorList a = renormalize_sl2(ops, tol);
    const int n = static_cast<int>(a.size());
    BasisSet basis = canonical_basis(n);
    const auto &x = basis.vectors();
    auto represent = [&](const GlobalOperator &m) -> Eigen::MatrixXcd { return x.adjoint() * m.matrix() * x; };

    HomomorphismReport rep;
    rep.n = n;
    rep.trials = trials;
    GlobalOperator ma = expand_local(a);
    Eigen::MatrixXcd ra = represent(ma);
    double rg = group_residual(ra, n);
    rep.group = {rg <= tol.residual, rg};
    rep.det_r = ra.determinant();

    std::mt19937_64 seeder(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        LocalOperatorList b = random_sl2_list(n, seeder());
        LocalOperatorList ab(a.size());
        for (std::size_t q = 0; q < a.size(); ++q) {
            ab[q] = a[q] * b[q];
        }
        Eigen::MatrixXcd rb = represent(expand_local(b));
        Eigen::MatrixXcd rab = represent(expand_local(ab));
        worst = std::max(worst, (rab - ra * rb).norm());
        rep.max_partner_group_residual = std::max(rep.max_partner_group_residual, group_residual(rb, n));
    }
    rep.multiplicativity = {worst <= tol.residual, worst};
    return rep;
}

SloccVerdict slocc_obstruction(const GlobalOperator &m, const Tolerances &tol) {
    Check c = is_form_preserving(m, tol);
    SloccVerdict v;
    v.residual = c.residual;
    if (c.passed) {
        v.verdict = Obstruction::NotObstructed;
        v.explanation = "necessary condition only";
    } else {
        v.verdict = Obstruction::Obstructed;
        v.explanation = "form not preserved";
    }
    return v;
}

}  // namespace spinform
