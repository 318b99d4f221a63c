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

#include "spinform/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinform/spinflip.hpp"

namespace spinform {

namespace {

void require_even(int n, const char *what) {
    if (n % 2 != 0) {
        throw std::invalid_argument(std::string(what) + " requires an even qubit count, got " + std::to_string(n));
    }
}

void require_normalized(const PureState &psi, const Tolerances &tol, const char *what) {
    if (!psi.is_normalized(tol)) {
        throw std::invalid_argument(std::string(what) + " requires a normalized state");
    }
}

void require_biorthonormal(const BasisSet &basis, const Tolerances &tol) {
    BasisVerdict v = check_biorthonormal(basis, tol);
    if (!v.passed) {
        throw std::invalid_argument("basis is not bi-orthonormal: " + v.detail);
    }
}

}  // namespace

double tangle(const PureState &psi) {
    double w = psi.amplitudes().squaredNorm();
    if (w == 0.0) {
        throw std::invalid_argument("tangle of the zero vector");
    }
    return std::abs(bilinear_form(psi, psi).value) / w;
}

double form_modulus(const PureState &psi) { return std::abs(bilinear_form(psi, psi).value); }

TangleResult analyze_tangle(const PureState &psi, const BasisSet &basis, const Tolerances &tol) {
    if (psi.qubits() != basis.qubits()) {
        throw std::invalid_argument("state and basis have different qubit counts");
    }
    require_biorthonormal(basis, tol);
    TangleResult out;
    out.value = tangle(psi);
    out.input_normalized = psi.is_normalized(tol);
    out.coefficients = coefficients_in_basis(out.input_normalized ? psi : normalize(psi), basis);
    out.polygon = polygon(out.coefficients);
    out.basis_used = basis.ordering();
    return out;
}

double concurrence_2q(const PureState &psi) {
    if (psi.qubits() != 2) {
        throw std::invalid_argument("concurrence_2q is defined for two qubits only");
    }
    return tangle(psi);
}

double tangle_from_coefficients(std::span<const cplx> c) {
    cplx sum = 0.0;
    for (cplx x : c) {
        sum += x * x;
    }
    return std::abs(sum);
}

std::vector<Point2> polygon(std::span<const cplx> c) {
    std::vector<Point2> pts;
    pts.reserve(c.size());
    cplx sum = 0.0;
    for (cplx x : c) {
        sum += x * x;
        pts.push_back({sum.real(), sum.imag()});
    }
    return pts;
}

double polygon_collinearity_residual(std::span<const Point2> points) {
    if (points.empty()) {
        return 0.0;
    }
    const Point2 end = points.back();
    const double len = std::hypot(end.x, end.y);
    if (len == 0.0) {
        return 0.0;
    }
    double worst = 0.0;
    for (const Point2 &p : points) {
        worst = std::max(worst, std::abs(p.x * end.y - p.y * end.x) / len);
    }
    return worst;
}

std::vector<cplx> coefficients_in_basis(const PureState &psi, const BasisSet &basis) {
    if (psi.qubits() != basis.qubits()) {
        throw std::invalid_argument("state and basis have different qubit counts");
    }
    Eigen::VectorXcd c = basis.vectors().adjoint() * psi.amplitudes();
    return {c.begin(), c.end()};
}

AmplitudeBound amplitude_bound_check(const PureState &psi, const BasisSet &basis, const Tolerances &tol) {
    require_even(psi.qubits(), "amplitude_bound_check");
    require_normalized(psi, tol, "amplitude_bound_check");
    require_biorthonormal(basis, tol);
    AmplitudeBound out;
    for (cplx x : coefficients_in_basis(psi, basis)) {
        out.max_weight = std::max(out.max_weight, std::norm(x));
    }
    out.bound = 0.5 * (1.0 + tangle(psi));
    out.slack = out.bound - out.max_weight;
    out.passed = out.slack >= -tol.residual;
    return out;
}

StructureVerdict maxent_structure_check(const PureState &psi, const Tolerances &tol) {
    const int n = psi.qubits();
    require_even(n, "maxent_structure_check");
    StructureVerdict out;
    cplx f = bilinear_form(psi, psi).value;
    out.phase_found = std::abs(f) > tol.residual;
    out.theta = out.phase_found ? std::arg(f) / 2.0 : 0.0;
    const cplx unphase = std::polar(1.0, -out.theta);
    double mismatch = 0.0;
    double half = 0.0;
    for (std::uint64_t k = 0; k < psi.dim() / 2; ++k) {
        cplx lo = unphase * psi[k];
        cplx hi = unphase * psi[complement_index(k, n)];
        mismatch += std::norm(hi - flip_phase(k, n) * std::conj(lo));
        half += std::norm(lo);
    }
    out.residual = mismatch + (half - 0.5) * (half - 0.5);
    out.passed = out.phase_found && out.residual <= tol.residual;
    return out;
}

MaxEntReport is_maximally_entangled(const PureState &psi, const Tolerances &tol) {
    require_even(psi.qubits(), "is_maximally_entangled");
    require_normalized(psi, tol, "is_maximally_entangled");
    MaxEntReport rep;

    cplx f = bilinear_form(psi, psi).value;
    rep.form_modulus.residual = std::abs(1.0 - std::abs(f));
    rep.form_modulus.passed = rep.form_modulus.residual <= tol.residual;

    std::vector<cplx> c = magic_coefficients(psi);
    cplx sq = 0.0;
    for (cplx x : c) {
        sq += x * x;
    }
    if (std::abs(sq) > tol.residual) {
        rep.theta = std::arg(sq) / 2.0;
        const cplx unphase = std::polar(1.0, -rep.theta);
        double imag = 0.0;
        double weight = 0.0;
        rep.nu.reserve(c.size());
        for (cplx x : c) {
            cplx y = unphase * x;
            rep.nu.push_back(y.real());
            imag += y.imag() * y.imag();
            weight += y.real() * y.real();
        }
        rep.real_rotation.residual = 2.0 * imag + std::abs(weight - 1.0);
        rep.real_rotation.passed = rep.real_rotation.residual <= tol.residual;
    } else {
        rep.real_rotation.residual = 1.0;
        rep.real_rotation.passed = false;
    }

    StructureVerdict s = maxent_structure_check(psi, tol);
    rep.structure.residual = s.residual;
    rep.structure.passed = s.passed;

    const ConditionResult conds[] = {rep.form_modulus, rep.real_rotation, rep.structure};
    bool any_pass = false;
    bool all_pass = true;
    double worst_fail = 0.0;
    for (const auto &cnd : conds) {
        any_pass = any_pass || cnd.passed;
        all_pass = all_pass && cnd.passed;
        if (!cnd.passed) {
            worst_fail = std::max(worst_fail, cnd.residual);
        }
    }
    rep.conditions_agree = all_pass || !any_pass;
    if (!rep.conditions_agree && worst_fail > 10.0 * tol.residual) {
        throw std::logic_error("maximal-entanglement conditions disagree beyond tolerance");
    }
    rep.passed = all_pass;
    if (!all_pass) {
        rep.nu.clear();
    }
    return rep;
}

PureState maxent_generate(int n, double theta, std::span<const double> nu, const Tolerances &tol) {
    require_even(n, "maxent_generate");
    std::size_t dim = checked_dim(n, kMaxStateQubits);
    if (nu.size() != dim) {
        throw std::invalid_argument("maxent_generate needs " + std::to_string(dim) + " real coefficients");
    }
    double w = 0.0;
    for (double v : nu) {
        w += v * v;
    }
    if (std::abs(w - 1.0) > tol.norm) {
        throw std::invalid_argument("coefficients must have unit sum of squares, got " + std::to_string(w));
    }
    const cplx phase = std::polar(1.0 / std::numbers::sqrt2, theta);
    Eigen::VectorXcd amp(static_cast<Eigen::Index>(dim));
    for (std::uint64_t a = 0; a < dim / 2; ++a) {
        const double plus = nu[2 * a];
        const double minus = nu[2 * a + 1];
        amp[static_cast<Eigen::Index>(a)] = phase * cplx(plus, minus);
        amp[static_cast<Eigen::Index>(complement_index(a, n))] = phase * flip_phase(a, n) * cplx(plus, -minus);
    }
    return PureState(n, std::move(amp));
}

}  // namespace spinform
