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

#include "spinform/io.hpp"

#include <cmath>
#include <fstream>

namespace spinform::io {

using nlohmann::json;

namespace {

void expect_format(const json &j, const char *format) {
    if (!j.is_object() || !j.contains("format") || j["format"] != format) {
        throw FormatError(std::string("expected format \"") + format + "\"");
    }
}

int read_qubits(const json &j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw FormatError("missing integer field \"n\"");
    }
    int n = j["n"].get<int>();
    if (n < 1 || n > kMaxStateQubits) {
        throw FormatError("qubit count out of range: " + std::to_string(n));
    }
    return n;
}

Eigen::VectorXcd vector_from_json(const json &j, std::size_t expected, const char *what) {
    if (!j.is_array() || j.size() != expected) {
        throw FormatError(std::string(what) + " must be an array of " + std::to_string(expected) + " [re, im] pairs");
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(expected));
    for (std::size_t k = 0; k < expected; ++k) {
        v[static_cast<Eigen::Index>(k)] = complex_from_json(j[k]);
    }
    return v;
}

json vector_to_json(const Eigen::Ref<const Eigen::VectorXcd> &v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out.push_back(complex_to_json(v[k]));
    }
    return out;
}

Eigen::MatrixXcd matrix_from_json(const json &j, Eigen::Index dim, const char *what) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(dim)) {
        throw FormatError(std::string(what) + " must have " + std::to_string(dim) + " rows");
    }
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        m.row(r) = vector_from_json(j[static_cast<std::size_t>(r)], static_cast<std::size_t>(dim), what).transpose();
    }
    return m;
}

json matrix_to_json(const Eigen::MatrixXcd &m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out.push_back(vector_to_json(m.row(r).transpose()));
    }
    return out;
}

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormatError("complex numbers must be [re, im] pairs");
    }
    cplx z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw FormatError("non-finite complex entry");
    }
    return z;
}

json state_to_json(const StateFile &file) {
    json j = {{"format", kStateFormat}, {"n", file.state.qubits()}, {"amplitudes", vector_to_json(file.state.amplitudes())}};
    if (file.label) {
        j["label"] = *file.label;
    }
    if (file.seed) {
        j["seed"] = *file.seed;
    }
    return j;
}

StateFile state_from_json(const json &j) {
    expect_format(j, kStateFormat);
    int n = read_qubits(j);
    if (!j.contains("amplitudes")) {
        throw FormatError("missing field \"amplitudes\"");
    }
    StateFile file{PureState(n, vector_from_json(j["amplitudes"], std::size_t{1} << n, "amplitudes")), {}, {}};
    if (j.contains("label")) {
        file.label = j["label"].get<std::string>();
    }
    if (j.contains("seed")) {
        file.seed = j["seed"].get<std::uint64_t>();
    }
    return file;
}

json operator_to_json(const OperatorFile &op) {
    if (const auto *g = std::get_if<GlobalOperator>(&op)) {
        return {{"format", kOperatorFormat}, {"kind", "global"}, {"n", g->qubits()}, {"matrix", matrix_to_json(g->matrix())}};
    }
    const auto &ops = std::get<LocalOperatorList>(op);
    json factors = json::array();
    for (const Mat2 &a : ops) {
        factors.push_back(matrix_to_json(a));
    }
    return {{"format", kOperatorFormat}, {"kind", "local"}, {"n", ops.size()}, {"factors", factors}};
}

OperatorFile operator_from_json(const json &j) {
    expect_format(j, kOperatorFormat);
    int n = read_qubits(j);
    std::string kind = j.value("kind", "");
    if (kind == "global") {
        if (n > kMaxDenseQubits) {
            throw FormatError("global operators are limited to " + std::to_string(kMaxDenseQubits) + " qubits");
        }
        if (!j.contains("matrix")) {
            throw FormatError("missing field \"matrix\"");
        }
        return GlobalOperator(n, matrix_from_json(j["matrix"], Eigen::Index{1} << n, "matrix"));
    }
    if (kind == "local") {
        if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].size() != static_cast<std::size_t>(n)) {
            throw FormatError("local operator needs exactly n 2x2 \"factors\"");
        }
        LocalOperatorList ops;
        for (const json &f : j["factors"]) {
            ops.push_back(matrix_from_json(f, 2, "factor"));
        }
        return ops;
    }
    throw FormatError("operator \"kind\" must be \"global\" or \"local\"");
}

json basis_to_json(const BasisSet &basis) {
    json vectors = json::array();
    for (Eigen::Index c = 0; c < basis.vectors().cols(); ++c) {
        vectors.push_back(vector_to_json(basis.vectors().col(c)));
    }
    return {{"format", kBasisFormat}, {"n", basis.qubits()}, {"ordering", basis.ordering()}, {"vectors", vectors}};
}

BasisSet basis_from_json(const json &j) {
    expect_format(j, kBasisFormat);
    int n = read_qubits(j);
    if (n > kMaxDenseQubits) {
        throw FormatError("bases are limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    if (!j.contains("vectors") || !j["vectors"].is_array() || j["vectors"].size() != dim) {
        throw FormatError("basis needs exactly 2^n \"vectors\"");
    }
    Eigen::MatrixXcd x(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        x.col(static_cast<Eigen::Index>(c)) = vector_from_json(j["vectors"][c], dim, "basis vector");
    }
    return BasisSet(n, std::move(x), j.value("ordering", "unspecified"));
}

json read_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

StateFile read_state(const std::filesystem::path &path) { return state_from_json(read_json(path)); }
void write_state(const std::filesystem::path &path, const StateFile &file) { write_json(path, state_to_json(file)); }
OperatorFile read_operator(const std::filesystem::path &path) { return operator_from_json(read_json(path)); }
void write_operator(const std::filesystem::path &path, const OperatorFile &op) { write_json(path, operator_to_json(op)); }
BasisSet read_basis(const std::filesystem::path &path) { return basis_from_json(read_json(path)); }
void write_basis(const std::filesystem::path &path, const BasisSet &basis) { write_json(path, basis_to_json(basis)); }

}  // namespace spinform::io
