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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "spinform/bases.hpp"
#include "spinform/entanglement.hpp"
#include "spinform/groups.hpp"
#include "spinform/io.hpp"
#include "spinform/spinflip.hpp"
#include "spinform/version.hpp"

namespace spinform::cli {

using nlohmann::json;

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::verdict(const std::string &name, bool passed) {
    verdicts_[name] = passed;
    passed_ = passed_ && passed;
}

void Report::residual(const std::string &name, double value) { residuals_[name] = value; }

void Report::value(const std::string &name, json v) { values_[name] = std::move(v); }

void Report::seed(std::uint64_t s) { seeds_.push_back(s); }

void Report::tolerances(const Tolerances &tol) {
    tolerances_ = {{"norm", tol.norm}, {"gram", tol.gram}, {"residual", tol.residual}};
}

json Report::to_json() const {
    return {{"command", command_}, {"version", kVersion}, {"passed", passed_},     {"verdicts", verdicts_},
            {"residuals", residuals_}, {"values", values_}, {"seeds", seeds_}, {"tolerances", tolerances_}};
}

namespace {

struct Options {
    Tolerances tol;
    bool dense_oracle = false;
    std::string out_path;
    std::uint64_t seed = 1;
    int n = 0;
    std::vector<std::string> files;
    std::string level = "quick";
    std::string group = "sl2";
    double theta = 0.0;
    std::vector<double> nu;
    int trials = 20;
};

json points_to_json(const std::vector<Point2> &pts) {
    json out = json::array();
    for (const Point2 &p : pts) {
        out.push_back({p.x, p.y});
    }
    return out;
}

json complex_list(const std::vector<cplx> &c) {
    json out = json::array();
    for (cplx z : c) {
        out.push_back(io::complex_to_json(z));
    }
    return out;
}

void require_dense_oracle_size(int n) {
    if (n > kMaxDenseOracleQubits) {
        throw std::invalid_argument("--dense-oracle is limited to " + std::to_string(kMaxDenseOracleQubits) + " qubits");
    }
}

const std::string &single_file(const Options &o) {
    if (o.files.size() != 1) {
        throw CLI::ValidationError("exactly one input file expected");
    }
    return o.files.front();
}

Report cmd_flip(const Options &o) {
    Report rep("flip");
    io::StateFile in = io::read_state(single_file(o));
    if (o.dense_oracle) {
        require_dense_oracle_size(in.state.qubits());
    }
    PureState out = o.dense_oracle ? flip_state_dense(in.state) : flip_state(in.state);
    io::StateFile file{out, in.label ? std::optional<std::string>("flip(" + *in.label + ")") : std::nullopt, in.seed};
    if (!o.out_path.empty()) {
        io::write_state(o.out_path, file);
        rep.value("output", o.out_path);
    }
    rep.value("n", out.qubits());
    rep.value("path", o.dense_oracle ? "dense" : "matrix-free");
    rep.value("state", io::state_to_json(file));
    return rep;
}

Report cmd_form(const Options &o) {
    Report rep("form");
    if (o.files.size() != 2) {
        throw CLI::ValidationError("form expects two state files");
    }
    PureState a = io::read_state(o.files[0]).state;
    PureState b = io::read_state(o.files[1]).state;
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("states have different qubit counts");
    }
    if (o.dense_oracle) {
        require_dense_oracle_size(a.qubits());
    }
    FormValue f = o.dense_oracle ? bilinear_form_dense(a, b) : bilinear_form(a, b);
    rep.value("form", io::complex_to_json(f.value));
    rep.value("kind", to_string(f.kind));
    rep.value("path", o.dense_oracle ? "dense" : "matrix-free");
    return rep;
}

Report cmd_tangle(const Options &o) {
    Report rep("tangle");
    PureState psi = io::read_state(single_file(o)).state;
    const int n = psi.qubits();
    double value = 0.0;
    if (o.dense_oracle) {
        require_dense_oracle_size(n);
        value = std::abs(bilinear_form_dense(psi, psi).value) / psi.amplitudes().squaredNorm();
    } else {
        value = tangle(psi);
    }
    rep.value("tangle", value);
    rep.value("kind", to_string(form_kind(n)));
    rep.value("normalized_input", psi.is_normalized(o.tol));
    if (n == 2) {
        rep.value("concurrence", value);
    }
    if (n % 2 == 0) {
        std::vector<cplx> c = magic_coefficients(normalize(psi));
        rep.value("magic_coefficients", complex_list(c));
        rep.value("polygon", points_to_json(polygon(c)));
        rep.residual("coefficient_consistency", std::abs(tangle_from_coefficients(c) - value));
    }
    return rep;
}

Report cmd_basis(const std::string &sub, const Options &o) {
    Report rep("basis " + sub);
    std::optional<BasisSet> basis;
    if (sub == "magic") {
        basis = magic_basis(o.n);
    } else if (sub == "product") {
        basis = product_biortho_basis(o.n);
    } else if (sub == "random-biortho") {
        rep.seed(o.seed);
        auto dim = static_cast<Eigen::Index>(checked_dim(o.n, kMaxDenseQubits));
        if (o.n % 2 == 0) {
            basis = basis_from_orthogonal(random_real_orthogonal(dim, o.seed), o.n, o.tol);
        } else {
            basis = basis_from_unitary_symplectic(random_unitary_symplectic(dim, o.seed), o.n, o.tol);
        }
    } else {
        basis = io::read_basis(single_file(o));
    }
    BasisVerdict v = check_biorthonormal(*basis, o.tol);
    rep.value("n", basis->qubits());
    rep.value("size", basis->size());
    rep.value("ordering", basis->ordering());
    rep.value("detail", v.detail);
    rep.residual("hilbert_gram", v.hilbert_residual);
    rep.residual("form_gram", v.form_residual);
    rep.verdict("biorthonormal", v.passed);
    if (sub != "check") {
        if (!o.out_path.empty()) {
            io::write_basis(o.out_path, *basis);
            rep.value("output", o.out_path);
        } else {
            rep.value("basis", io::basis_to_json(*basis));
        }
    }
    return rep;
}

Report cmd_op(const std::string &sub, const Options &o) {
    Report rep("op " + sub);
    if (sub == "random-local") {
        rep.seed(o.seed);
        checked_dim(o.n, kMaxDenseQubits);
        LocalOperatorList ops;
        if (o.group == "sl2") {
            ops = random_sl2_list(o.n, o.seed);
        } else if (o.group == "su2") {
            std::mt19937_64 seeder(o.seed);
            for (int q = 0; q < o.n; ++q) {
                ops.push_back(random_su2(seeder()));
            }
        } else {
            throw CLI::ValidationError("--group must be sl2 or su2");
        }
        rep.value("group", o.group);
        if (!o.out_path.empty()) {
            io::write_operator(o.out_path, ops);
            rep.value("output", o.out_path);
        } else {
            rep.value("operator", io::operator_to_json(ops));
        }
        return rep;
    }

    if (o.files.empty() || o.files.size() > 2 || (sub == "classify" && o.files.size() != 1)) {
        throw CLI::ValidationError("op " + sub + ": wrong number of input files");
    }
    io::OperatorFile file = io::read_operator(o.files.front());
    GlobalOperator m = std::holds_alternative<GlobalOperator>(file) ? std::get<GlobalOperator>(file)
                                                                    : expand_local(std::get<LocalOperatorList>(file));
    rep.value("n", m.qubits());
    if (sub == "classify") {
        Check fp = is_form_preserving(m, o.tol);
        SloccVerdict sv = slocc_obstruction(m, o.tol);
        rep.residual("form_preservation", fp.residual);
        rep.value("form_preserving", fp.passed);
        rep.value("slocc", to_string(sv.verdict));
        rep.value("slocc_explanation", sv.explanation);
        rep.residual("unitarity", identity_residual(m.matrix().adjoint() * m.matrix()));
        if (const auto *ops = std::get_if<LocalOperatorList>(&file)) {
            json factors = json::array();
            bool all_agree = true;
            for (const LocalFactorReport &f : local_form_criterion(*ops, o.tol)) {
                factors.push_back({{"symplectic_residual", f.symplectic.residual},
                                   {"det", io::complex_to_json(f.det)},
                                   {"det_residual", f.unit_det.residual},
                                   {"symplectic", f.symplectic.passed}});
                all_agree = all_agree && f.criteria_agree;
            }
            rep.value("factors", factors);
            rep.verdict("local_criteria_agree", all_agree);
        }
        // classify succeeds when it reaches a verdict; an Obstructed outcome is a result, not a failure.
        return rep;
    }
    if (sub == "represent") {
        BasisSet basis = o.files.size() > 1 ? io::read_basis(o.files[1]) : canonical_basis(m.qubits());
        Eigen::MatrixXcd r = represent_in_basis(m, basis, o.tol);
        double gr = group_residual(r, m.qubits());
        rep.value("group", m.qubits() % 2 == 0 ? "orthogonal" : "symplectic");
        rep.residual("group", gr);
        rep.value("det", io::complex_to_json(r.determinant()));
        rep.verdict("in_group", gr <= o.tol.residual);
        return rep;
    }
    throw CLI::ValidationError("unknown op subcommand " + sub);
}

Report cmd_maxent(const std::string &sub, const Options &o) {
    Report rep("maxent " + sub);
    if (sub == "generate") {
        std::vector<double> nu = o.nu;
        const std::size_t dim = checked_dim(o.n, kMaxStateQubits);
        if (nu.empty()) {
            rep.seed(o.seed);
            std::mt19937_64 rng(o.seed);
            std::normal_distribution<double> dist(0.0, 1.0);
            nu.resize(dim);
            double w = 0.0;
            for (double &v : nu) {
                v = dist(rng);
                w += v * v;
            }
            for (double &v : nu) {
                v /= std::sqrt(w);
            }
        }
        PureState psi = maxent_generate(o.n, o.theta, nu, o.tol);
        io::StateFile file{psi, std::string("maxent"), nu == o.nu ? std::nullopt : std::optional<std::uint64_t>(o.seed)};
        double t = tangle(psi);
        rep.value("tangle", t);
        rep.residual("tangle", std::abs(1.0 - t));
        rep.verdict("maximal", std::abs(1.0 - t) <= o.tol.residual);
        if (!o.out_path.empty()) {
            io::write_state(o.out_path, file);
            rep.value("output", o.out_path);
        } else {
            rep.value("state", io::state_to_json(file));
        }
        return rep;
    }
    PureState psi = io::read_state(single_file(o)).state;
    MaxEntReport m = is_maximally_entangled(psi, o.tol);
    rep.residual("condition_form_modulus", m.form_modulus.residual);
    rep.residual("condition_real_rotation", m.real_rotation.residual);
    rep.residual("condition_structure", m.structure.residual);
    rep.value("conditions_agree", m.conditions_agree);
    if (m.passed) {
        rep.value("theta", m.theta);
        rep.value("nu", m.nu);
    }
    rep.verdict("maximally_entangled", m.passed);
    return rep;
}

void add_tolerance_flags(CLI::App &app, Options &o) {
    app.add_option("--tol-residual", o.tol.residual, "residual tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--tol-gram", o.tol.gram, "Gram-matrix tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--tol-norm", o.tol.norm, "normalization tolerance")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"spin-flip bilinear forms on n-qubit states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options o;
    add_tolerance_flags(app, o);
    app.add_flag("--dense-oracle", o.dense_oracle, "use the dense sigma_y tensor-power path (n <= 8)");
    app.add_option("--out", o.out_path, "output file");

    auto *flip = app.add_subcommand("flip", "spin-flip a state file");
    flip->add_option("state", o.files)->required()->expected(1);
    auto *form = app.add_subcommand("form", "bilinear form of two state files");
    form->add_option("states", o.files)->required()->expected(2);
    auto *tang = app.add_subcommand("tangle", "quadratic-form entanglement of a state file");
    tang->add_option("state", o.files)->required()->expected(1);

    auto *basis = app.add_subcommand("basis", "bi-orthonormal bases");
    basis->require_subcommand(1);
    for (const char *name : {"magic", "product", "random-biortho"}) {
        auto *sub = basis->add_subcommand(name);
        sub->add_option("--n", o.n, "qubit count")->required();
        if (std::string(name) == "random-biortho") {
            sub->add_option("--seed", o.seed);
        }
    }
    basis->add_subcommand("check")->add_option("basis", o.files)->required()->expected(1);

    auto *op = app.add_subcommand("op", "operator classification");
    op->require_subcommand(1);
    op->add_subcommand("classify")->add_option("operator", o.files)->required()->expected(1);
    auto *rl = op->add_subcommand("random-local");
    rl->add_option("--n", o.n)->required();
    rl->add_option("--seed", o.seed);
    rl->add_option("--group", o.group, "sl2 or su2");
    op->add_subcommand("represent")->add_option("operator_and_basis", o.files)->required()->expected(1, 2);

    auto *maxent = app.add_subcommand("maxent", "maximal entanglement");
    maxent->require_subcommand(1);
    maxent->add_subcommand("check")->add_option("state", o.files)->required()->expected(1);
    auto *gen = maxent->add_subcommand("generate");
    gen->add_option("--n", o.n)->required();
    gen->add_option("--theta", o.theta);
    gen->add_option("--nu", o.nu, "real magic-basis coefficients")->delimiter(',');
    gen->add_option("--seed", o.seed);

    auto *self = app.add_subcommand("selftest", "run the invariant suites");
    self->add_option("level", o.level)->check(CLI::IsMember({"quick", "full"}));

    // Options are accepted before or after the subcommand name.
    for (CLI::App *sub : {flip, form, tang, basis, op, maxent, self}) {
        sub->fallthrough();
    }
    for (CLI::App *sub : {basis, op, maxent}) {
        for (CLI::App *leaf : sub->get_subcommands({})) {
            leaf->fallthrough();
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        std::ostringstream o_out;
        std::ostringstream o_err;
        int code = app.exit(e, o_out, o_err);
        out << o_out.str();
        err << o_err.str();
        return code == 0 ? kPass : kUsageError;
    }

    try {
        o.tol.validate();
        std::optional<Report> rep;
        if (*flip) {
            rep = cmd_flip(o);
        } else if (*form) {
            rep = cmd_form(o);
        } else if (*tang) {
            rep = cmd_tangle(o);
        } else if (*basis) {
            rep = cmd_basis(basis->get_subcommands().front()->get_name(), o);
        } else if (*op) {
            rep = cmd_op(op->get_subcommands().front()->get_name(), o);
        } else if (*maxent) {
            rep = cmd_maxent(maxent->get_subcommands().front()->get_name(), o);
        } else if (*self) {
            rep = run_selftest(o.level == "full", o.tol);
        }
        rep->tolerances(o.tol);
        out << rep->to_json().dump(2) << '\n';
        return rep->passed() ? kPass : kVerdictFailure;
    } catch (const io::FormatError &e) {
        err << "format error: " << e.what() << '\n';
    } catch (const nlohmann::json::exception &e) {
        err << "format error: " << e.what() << '\n';
    } catch (const CLI::Error &e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
    }
    return kUsageError;
}

}  // namespace spinform::cli
