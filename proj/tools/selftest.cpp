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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "cli.hpp"
#include "spinform/bases.hpp"
#include "spinform/entanglement.hpp"
#include "spinform/groups.hpp"
#include "spinform/spinflip.hpp"

namespace spinform::cli {

namespace {

PureState ket(int n, std::uint64_t k) { return PureState::basis(n, k); }

PureState ghz(int n) {
    return normalize(add(ket(n, 0), ket(n, (std::uint64_t{1} << n) - 1)));
}

// Runs one section; an exception (for example a tolerance too tight for a constructor's own
// validation) is recorded as a failed verdict instead of aborting the whole run.
template <class F>
void guarded(Report &rep, const std::string &name, F &&section) {
    try {
        section();
    } catch (const std::exception &e) {
        rep.verdict(name, false);
        rep.value(name + "_error", e.what());
    }
}

}  // namespace

Report run_selftest(bool full, const Tolerances &tol) {
    Report rep(full ? "selftest full" : "selftest quick");
    const std::uint64_t seed = 20261018;
    rep.seed(seed);
    std::mt19937_64 seeder(seed);
    const int max_oracle_n = full ? kMaxDenseOracleQubits : 4;
    const int trials = full ? 50 : 10;

    double oracle = 0.0;
    for (int n = 1; n <= max_oracle_n; ++n) {
        for (int t = 0; t < trials; ++t) {
            PureState a = random_state(n, seeder());
            PureState b = random_state(n, seeder());
            oracle = std::max(oracle, (flip_state(a).amplitudes() - flip_state_dense(a).amplitudes()).norm());
            oracle = std::max(oracle, std::abs(bilinear_form(a, b).value - bilinear_form_dense(a, b).value));
        }
    }
    rep.value("max_oracle_qubits", max_oracle_n);
    rep.residual("oracle_equivalence", oracle);
    rep.verdict("oracle_equivalence", oracle <= 1e-12);

    double parity = 0.0;
    for (int n = 1; n <= (full ? 6 : 4); ++n) {
        parity = std::max(parity, form_parity_check(n, trials, seeder(), tol).max_residual);
    }
    rep.residual("form_parity", parity);
    rep.verdict("form_parity", parity <= tol.residual);

    double involution = 0.0;
    for (int n = 1; n <= 5; ++n) {
        PureState a = random_state(n, seeder());
        double sign = n % 2 == 0 ? 1.0 : -1.0;
        involution = std::max(involution, (flip_state(flip_state(a)).amplitudes() - sign * a.amplitudes()).norm());
    }
    rep.residual("double_flip_sign", involution);
    rep.verdict("double_flip_sign", involution <= tol.residual);

    bool magic_ok = true;
    for (int n : full ? std::vector<int>{2, 4, 6} : std::vector<int>{2, 4}) {
        BasisSet b = magic_basis(n);
        magic_ok = magic_ok && check_biorthonormal(b, tol).passed;
        for (std::size_t j = 0; j < b.size(); ++j) {
            magic_ok = magic_ok && self_conjugacy_coefficient_check(b.vector(j), tol).passed;
        }
    }
    rep.verdict("magic_basis", magic_ok);

    guarded(rep, "orthogonal_round_trip", [&] {
        double round_trip = 0.0;
        for (int n : {2, 4}) {
            for (int t = 0; t < trials; ++t) {
                Eigen::MatrixXd o = random_real_orthogonal(Eigen::Index{1} << n, seeder());
                Eigen::MatrixXcd c = decompose_basis(basis_from_orthogonal(o, n, tol), tol);
                round_trip = std::max(round_trip, (c - o.cast<cplx>()).norm());
            }
        }
        rep.residual("orthogonal_round_trip", round_trip);
        rep.verdict("orthogonal_round_trip", round_trip <= tol.residual);
    });

    guarded(rep, "unitary_symplectic_bases", [&] {
        bool symplectic_ok = true;
        for (int n : {1, 3}) {
            for (int t = 0; t < trials; ++t) {
                Eigen::MatrixXcd s = random_unitary_symplectic(Eigen::Index{1} << n, seeder());
                symplectic_ok = symplectic_ok && check_biorthonormal(basis_from_unitary_symplectic(s, n, tol), tol).passed;
            }
        }
        rep.verdict("unitary_symplectic_bases", symplectic_ok);
    });

    guarded(rep, "homomorphism", [&] {
        double hom_group = 0.0;
        double hom_mult = 0.0;
        for (int n : full ? std::vector<int>{2, 3, 4, 5} : std::vector<int>{2, 3}) {
            HomomorphismReport h = homomorphism_check(random_sl2_list(n, seeder()), trials, seeder(), tol);
            hom_group = std::max(hom_group, h.group.residual);
            hom_mult = std::max(hom_mult, h.multiplicativity.residual);
        }
        rep.residual("homomorphism_group", hom_group);
        rep.residual("homomorphism_multiplicativity", hom_mult);
        rep.verdict("homomorphism", hom_group <= tol.residual && hom_mult <= tol.residual);
    });

    PureState w4 = normalize(add(add(ket(4, 1), ket(4, 2)), add(ket(4, 4), ket(4, 8))));
    double golden = std::max({std::abs(tangle(ghz(2)) - 1.0), std::abs(tangle(ket(2, 0))), std::abs(tangle(ghz(4)) - 1.0),
                              std::abs(tangle(w4)), std::abs(tangle(random_state(3, seeder())))});
    rep.residual("golden_tangles", golden);
    rep.verdict("golden_tangles", golden <= 1e-10);

    guarded(rep, "maxent_coherence", [&] {
        bool coherent = true;
        double generated = 0.0;
        for (int n : {2, 4}) {
            for (int t = 0; t < trials; ++t) {
                coherent = coherent && is_maximally_entangled(random_state(n, seeder()), tol).conditions_agree;
                Eigen::VectorXd nu = random_real_orthogonal(Eigen::Index{1} << n, seeder()).col(0);
                PureState m = maxent_generate(n, std::numbers::pi / 3, std::span<const double>(nu.data(), nu.size()), tol);
                MaxEntReport r = is_maximally_entangled(m, tol);
                coherent = coherent && r.conditions_agree && r.passed;
                generated = std::max(generated, std::abs(tangle(m) - 1.0));
            }
        }
        rep.residual("generated_maxent_tangle", generated);
        rep.verdict("maxent_coherence", coherent && generated <= 1e-10);
    });

    return rep;
}

}  // namespace spinform::cli
