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

// Dense reference constructions used only by the tests. Everything here is built from
// explicit Kronecker products of sigma_y and never calls the matrix-free kernels.

#ifndef SPINFORM_TESTS_ORACLE_HPP
#define SPINFORM_TESTS_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Eigen::Matrix2cd sigma_y() {
    Eigen::Matrix2cd s;
    s << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
    return s;
}

inline Eigen::MatrixXcd sigma_y_power(int n) {
    Eigen::MatrixXcd f = sigma_y();
    for (int q = 1; q < n; ++q) {
        f = kron(f, sigma_y());
    }
    return f;
}

inline Eigen::VectorXcd flip(const Eigen::VectorXcd &psi, int n) { return sigma_y_power(n) * psi.conjugate(); }

inline cplx form(const Eigen::VectorXcd &psi, const Eigen::VectorXcd &phi, int n) {
    return flip(psi, n).dot(phi);
}

inline Eigen::MatrixXcd flip_operator(const Eigen::MatrixXcd &m, int n) {
    Eigen::MatrixXcd f = sigma_y_power(n);
    return f * m.conjugate() * f.inverse();
}

inline Eigen::MatrixXcd kron_list(const std::vector<Eigen::Matrix2cd> &ops) {
    Eigen::MatrixXcd out = ops.front();
    for (std::size_t q = 1; q < ops.size(); ++q) {
        out = kron(out, ops[q]);
    }
    return out;
}

inline Eigen::VectorXcd random_vector(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (auto &x : v) {
        double re = d(rng);
        x = cplx(re, d(rng));
    }
    return v;
}

inline Eigen::MatrixXcd random_matrix(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            double re = d(rng);
            m(i, j) = cplx(re, d(rng));
        }
    }
    return m;
}

inline cplx random_scalar(std::mt19937_64 &rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    double re = d(rng);
    return {re, d(rng)};
}

}  // namespace oracle

#endif  // SPINFORM_TESTS_ORACLE_HPP
