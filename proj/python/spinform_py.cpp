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

// Python bindings. States are 1-D complex arrays of length 2^n, operators and bases are
// square complex arrays; the qubit count is inferred from the length.

#include <bit>
#include <optional>
#include <stdexcept>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinform/bases.hpp"
#include "spinform/entanglement.hpp"
#include "spinform/groups.hpp"
#include "spinform/spinflip.hpp"
#include "spinform/version.hpp"

namespace py = pybind11;
using namespace spinform;

namespace {

int qubits_for(Eigen::Index dim) {
    auto d = static_cast<std::uint64_t>(dim);
    if (dim < 2 || !std::has_single_bit(d)) {
        throw std::invalid_argument("length " + std::to_string(dim) + " is not 2^n for n >= 1");
    }
    return std::countr_zero(d);
}

PureState state(const Eigen::VectorXcd &amp) { return PureState(qubits_for(amp.size()), amp); }

GlobalOperator op(const Eigen::MatrixXcd &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("operator must be square");
    }
    return GlobalOperator(qubits_for(m.rows()), m);
}

BasisSet basis(const Eigen::MatrixXcd &x, const std::string &ordering = "custom") {
    if (x.rows() != x.cols()) {
        throw std::invalid_argument("basis matrix must be square");
    }
    return BasisSet(qubits_for(x.rows()), x, ordering);
}

}  // namespace

PYBIND11_MODULE(_spinform, m) {
    m.doc() = "Spin-flip bilinear forms, bi-orthonormal bases and the entanglement quadratic form.";
    m.attr("__version__") = kVersion;

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init([](double norm, double gram, double residual) {
                 Tolerances t{norm, gram, residual};
                 t.validate();
                 return t;
             }),
             py::arg("norm") = 1e-12, py::arg("gram") = 1e-10, py::arg("residual") = 1e-8)
        .def_readwrite("norm", &Tolerances::norm)
        .def_readwrite("gram", &Tolerances::gram)
        .def_readwrite("residual", &Tolerances::residual)
        .def("__repr__", [](const Tolerances &t) {
            return "Tolerances(norm=" + std::to_string(t.norm) + ", gram=" + std::to_string(t.gram) +
                   ", residual=" + std::to_string(t.residual) + ")";
        });

    py::class_<Check>(m, "Check")
        .def_readonly("passed", &Check::passed)
        .def_readonly("residual", &Check::residual);

    py::class_<BasisVerdict>(m, "BasisVerdict")
        .def_readonly("passed", &BasisVerdict::passed)
        .def_readonly("hilbert_residual", &BasisVerdict::hilbert_residual)
        .def_readonly("form_residual", &BasisVerdict::form_residual)
        .def_property_readonly("hilbert_gram", [](const BasisVerdict &v) { return v.grams.hilbert_gram; })
        .def_property_readonly("form_gram", [](const BasisVerdict &v) { return v.grams.form_gram; })
        .def_readonly("detail", &BasisVerdict::detail);

    py::class_<SloccVerdict>(m, "SloccVerdict")
        .def_property_readonly("obstructed", [](const SloccVerdict &v) { return v.verdict == Obstruction::Obstructed; })
        .def_property_readonly("verdict", [](const SloccVerdict &v) { return std::string(to_string(v.verdict)); })
        .def_readonly("residual", &SloccVerdict::residual)
        .def_readonly("explanation", &SloccVerdict::explanation);

    py::class_<ConditionResult>(m, "ConditionResult")
        .def_readonly("passed", &ConditionResult::passed)
        .def_readonly("residual", &ConditionResult::residual);

    py::class_<MaxEntReport>(m, "MaxEntReport")
        .def_readonly("passed", &MaxEntReport::passed)
        .def_readonly("conditions_agree", &MaxEntReport::conditions_agree)
        .def_readonly("form_modulus", &MaxEntReport::form_modulus)
        .def_readonly("real_rotation", &MaxEntReport::real_rotation)
        .def_readonly("structure", &MaxEntReport::structure)
        .def_readonly("theta", &MaxEntReport::theta)
        .def_readonly("nu", &MaxEntReport::nu);

    py::class_<AmplitudeBound>(m, "AmplitudeBound")
        .def_readonly("passed", &AmplitudeBound::passed)
        .def_readonly("max_weight", &AmplitudeBound::max_weight)
        .def_readonly("bound", &AmplitudeBound::bound)
        .def_readonly("slack", &AmplitudeBound::slack);

    const Tolerances defaults{};

    m.def("form_kind", [](int n) { return std::string(to_string(form_kind(n))); }, py::arg("n"),
          "\"orthogonal\" for even n, \"symplectic\" for odd n.");
    m.def("flip_state", [](const Eigen::VectorXcd &a) { return flip_state(state(a)).amplitudes(); }, py::arg("psi"));
    m.def("bilinear_form",
          [](const Eigen::VectorXcd &a, const Eigen::VectorXcd &b) { return bilinear_form(state(a), state(b)).value; },
          py::arg("psi"), py::arg("phi"), "(psi, phi) = <psi-bar|phi>.");
    m.def("form_matrix", &form_matrix, py::arg("n"));
    m.def("flip_operator", [](const Eigen::MatrixXcd &x) { return flip_operator(op(x)).matrix(); }, py::arg("m"));
    m.def("flip_local", [](const Mat2 &a) -> Mat2 { return flip_local(a); }, py::arg("a"));
    m.def("expand_local", [](const LocalOperatorList &ops) { return expand_local(ops).matrix(); }, py::arg("factors"));

    m.def("tangle", [](const Eigen::VectorXcd &a) { return tangle(state(a)); }, py::arg("psi"));
    m.def("form_modulus", [](const Eigen::VectorXcd &a) { return form_modulus(state(a)); }, py::arg("psi"));
    m.def("magic_coefficients", [](const Eigen::VectorXcd &a) { return magic_coefficients(state(a)); },
          py::arg("psi"));
    m.def("coefficients_in_basis",
          [](const Eigen::VectorXcd &a, const Eigen::MatrixXcd &x) { return coefficients_in_basis(state(a), basis(x)); },
          py::arg("psi"), py::arg("basis"));
    m.def("tangle_from_coefficients", [](const std::vector<cplx> &c) { return tangle_from_coefficients(c); },
          py::arg("coefficients"));

    m.def("magic_basis", [](int n) { return magic_basis(n).vectors(); }, py::arg("n"),
          "Columns are the magic basis vectors (even n).");
    m.def("product_biortho_basis", [](int n) { return product_biortho_basis(n).vectors(); }, py::arg("n"),
          "Columns are the product bi-orthonormal basis vectors (odd n).");
    m.def("canonical_pairing", &canonical_pairing, py::arg("dim"));
    m.def("check_biorthonormal",
          [](const Eigen::MatrixXcd &x, const Tolerances &tol) { return check_biorthonormal(basis(x), tol); },
          py::arg("basis"), py::arg("tol") = defaults);
    m.def("basis_from_orthogonal",
          [](const Eigen::MatrixXcd &o, const Tolerances &tol) {
              return basis_from_orthogonal(o, qubits_for(o.rows()), tol).vectors();
          },
          py::arg("o"), py::arg("tol") = defaults);
    m.def("decompose_basis",
          [](const Eigen::MatrixXcd &x, const Tolerances &tol) { return decompose_basis(basis(x), tol); },
          py::arg("basis"), py::arg("tol") = defaults);
    m.def("basis_from_unitary_symplectic",
          [](const Eigen::MatrixXcd &s, const Tolerances &tol) {
              return basis_from_unitary_symplectic(s, qubits_for(s.rows()), tol).vectors();
          },
          py::arg("s"), py::arg("tol") = defaults);
    m.def("random_real_orthogonal", &random_real_orthogonal, py::arg("dim"), py::arg("seed"));
    m.def("random_unitary_symplectic", &random_unitary_symplectic, py::arg("dim"), py::arg("seed"));

    m.def("is_form_preserving",
          [](const Eigen::MatrixXcd &x, const Tolerances &tol) { return is_form_preserving(op(x), tol); },
          py::arg("m"), py::arg("tol") = defaults);
    m.def("slocc_obstruction",
          [](const Eigen::MatrixXcd &x, const Tolerances &tol) { return slocc_obstruction(op(x), tol); },
          py::arg("m"), py::arg("tol") = defaults);
    m.def("represent_in_basis",
          [](const Eigen::MatrixXcd &x, std::optional<Eigen::MatrixXcd> b, const Tolerances &tol) {
              GlobalOperator g = op(x);
              return represent_in_basis(g, b ? basis(*b) : canonical_basis(g.qubits()), tol);
          },
          py::arg("m"), py::arg("basis") = py::none(), py::arg("tol") = defaults,
          "Matrix of m in a bi-orthonormal basis (magic for even n, product for odd n by default).");
    m.def("group_residual", &group_residual, py::arg("r"), py::arg("n"));

    m.def("is_maximally_entangled",
          [](const Eigen::VectorXcd &a, const Tolerances &tol) { return is_maximally_entangled(state(a), tol); },
          py::arg("psi"), py::arg("tol") = defaults);
    m.def("maxent_generate",
          [](int n, double theta, const std::vector<double> &nu, const Tolerances &tol) {
              return maxent_generate(n, theta, nu, tol).amplitudes();
          },
          py::arg("n"), py::arg("theta"), py::arg("nu"), py::arg("tol") = defaults);
    m.def("amplitude_bound_check",
          [](const Eigen::VectorXcd &a, std::optional<Eigen::MatrixXcd> b, const Tolerances &tol) {
              PureState psi = state(a);
              return amplitude_bound_check(psi, b ? basis(*b) : magic_basis(psi.qubits()), tol);
          },
          py::arg("psi"), py::arg("basis") = py::none(), py::arg("tol") = defaults);

    m.def("random_state", [](int n, std::uint64_t seed) { return random_state(n, seed).amplitudes(); }, py::arg("n"),
          py::arg("seed"));
    m.def("random_sl2", [](std::uint64_t seed) -> Mat2 { return random_sl2(seed); }, py::arg("seed"));
    m.def("random_sl2_list", &random_sl2_list, py::arg("n"), py::arg("seed"));
}
