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

#ifndef SPINFORM_ENTANGLEMENT_HPP
#define SPINFORM_ENTANGLEMENT_HPP

#include <span>
#include <string>
#include <vector>

#include "spinform/bases.hpp"
#include "spinform/tensor_core.hpp"

namespace spinform {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// |<psi-bar|psi>| / <psi|psi>. Identically zero for odd n.
double tangle(const PureState &psi);

/// |<psi-bar|psi>| without normalization; this is the quantity preserved by SL(2) local operations.
double form_modulus(const PureState &psi);

struct TangleResult {
    double value = 0.0;
    bool input_normalized = true;  // false: value was rescaled by 1/<psi|psi>
    std::vector<cplx> coefficients;
    std::vector<Point2> polygon;
    std::string basis_used;
};

/// Tangle together with the coefficients of psi in `basis` and their squared-partial-sum polygon.
TangleResult analyze_tangle(const PureState &psi, const BasisSet &basis, const Tolerances &tol = {});

/// Two-qubit concurrence |<psi|psi-bar>|; throws unless n == 2.
double concurrence_2q(const PureState &psi);

/// |sum_l c_l^2|.
double tangle_from_coefficients(std::span<const cplx> c);

/// Points S_m = sum_{l <= m} c_l^2.
std::vector<Point2> polygon(std::span<const cplx> c);

/// Largest distance of a polygon vertex from the line through the origin and the last vertex.
double polygon_collinearity_residual(std::span<const Point2> points);

/// c_l = <x_l|psi>.
std::vector<cplx> coefficients_in_basis(const PureState &psi, const BasisSet &basis);

struct AmplitudeBound {
    bool passed = false;
    double max_weight = 0.0;  // max_l |c_l|^2
    double bound = 0.0;       // (1 + tangle) / 2
    double slack = 0.0;       // bound - max_weight
};

/// max_l |c_l|^2 <= (1 + tangle(psi)) / 2 for the coefficients of psi in a bi-orthonormal basis.
AmplitudeBound amplitude_bound_check(const PureState &psi, const BasisSet &basis, const Tolerances &tol = {});

struct ConditionResult {
    bool passed = false;
    double residual = 0.0;
};

struct MaxEntReport {
    bool passed = false;
    bool conditions_agree = true;
    ConditionResult form_modulus;   // 1 - |<psi-bar|psi>|
    ConditionResult real_rotation;  // 2 sum_l Im(e^{-i theta} c_l)^2 + |sum nu_l^2 - 1|
    ConditionResult structure;      // see maxent_structure_check
    double theta = 0.0;
    std::vector<double> nu;  // witnesses, populated when a phase exists
};

/// Evaluates the three equivalent characterizations of a maximally entangled even-n state and
/// cross-checks them. All residuals are quadratic in the distance from the maximal set, so they
/// share one tolerance. Throws std::logic_error if one condition passes while another misses by
/// more than ten times the tolerance.
MaxEntReport is_maximally_entangled(const PureState &psi, const Tolerances &tol = {});

/// e^{i theta} sum_l nu_l e_l over the magic basis. nu must be a real unit vector.
PureState maxent_generate(int n, double theta, std::span<const double> nu, const Tolerances &tol = {});

struct StructureVerdict {
    bool passed = false;
    double theta = 0.0;
    bool phase_found = false;
    double residual = 0.0;  // pairing mismatch plus half-weight defect, both squared
};

/// After removing the phase theta = arg(<psi-bar|psi>)/2, checks
///   psi(~k) = (-1)^popcount(k) i^n conj(psi(k)) over representative labels k, and
///   sum over representatives of |psi(k)|^2 = 1/2.
StructureVerdict maxent_structure_check(const PureState &psi, const Tolerances &tol = {});

}  // namespace spinform

#endif  // SPINFORM_ENTANGLEMENT_HPP
