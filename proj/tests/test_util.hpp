// Copyright 2026 The blinddelegate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference helpers for tests. These deliberately avoid the
// library kernels they are used to check.

#include <cmath>
#include <vector>

#include "blinddelegate/qsim/qsim.hpp"

namespace testutil {

using blinddelegate::qsim::cd;
using blinddelegate::qsim::Matrix;

inline Eigen::VectorXcd vec(const blinddelegate::qsim::StateVector &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); i++) {
        v[i] = s[i];
    }
    return v;
}

inline blinddelegate::qsim::StateVector state(int n, const Eigen::VectorXcd &v) {
    std::vector<cd> a(v.data(), v.data() + v.size());
    return blinddelegate::qsim::StateVector(n, a);
}

/// Full 2^n operator of a one-qubit matrix on qubit q, built with kron.
inline Matrix embed1(const Matrix &u, int q, int n) {
    Matrix m = Matrix::Identity(1, 1);
    for (int k = n - 1; k >= 0; k--) {
        m = blinddelegate::qsim::kron(m, k == q ? u : Matrix::Identity(2, 2));
    }
    return m;
}

/// Full 2^n operator of a two-qubit matrix on (q0 high, q1 low) via basis loops.
inline Matrix embed2(const Matrix &u, int q0, int q1, int n) {
    std::size_t d = std::size_t{1} << n;
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t col = 0; col < d; col++) {
        int c = int(((col >> q0) & 1) << 1 | ((col >> q1) & 1));
        for (int r = 0; r < 4; r++) {
            std::size_t row = col;
            row = (row & ~(std::size_t{1} << q0)) | (std::size_t((r >> 1) & 1) << q0);
            row = (row & ~(std::size_t{1} << q1)) | (std::size_t(r & 1) << q1);
            m(row, col) += u(r, c);
        }
    }
    return m;
}

/// Dense partial trace by explicit index sums over the full density matrix.
inline Matrix brute_partial_trace(const Matrix &rho, int n, const std::vector<int> &keep) {
    std::size_t dk = std::size_t{1} << keep.size();
    std::size_t d = std::size_t{1} << n;
    Matrix out = Matrix::Zero(dk, dk);
    auto kept_index = [&](std::size_t i) {
        std::size_t k = 0;
        for (std::size_t b = 0; b < keep.size(); b++) {
            k |= ((i >> keep[b]) & 1) << b;
        }
        return k;
    };
    std::size_t keep_mask = 0;
    for (int q : keep) {
        keep_mask |= std::size_t{1} << q;
    }
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j < d; j++) {
            if ((i & ~keep_mask) == (j & ~keep_mask)) {
                out(kept_index(i), kept_index(j)) += rho(i, j);
            }
        }
    }
    return out;
}

inline Matrix ket(cd a0, cd a1) {
    Matrix v(2, 1);
    v << a0, a1;
    return v;
}

inline Matrix R(double theta) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = std::polar(1.0, theta);
    return m;
}

inline Matrix H() {
    Matrix m(2, 2);
    double r = 1 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
}

inline Matrix X() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Matrix Z() {
    return R(M_PI);
}

inline Matrix pow_int(const Matrix &m, int k) {
    Matrix out = Matrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; i++) {
        out = out * m;
    }
    return out;
}

}  // namespace testutil
