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

#include "blinddelegate/qsim/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace blinddelegate::qsim {

GateMatrix::GateMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4)) {
        throw std::invalid_argument("gate must be 2x2 or 4x4");
    }
    Matrix defect = m_.adjoint() * m_ - Matrix::Identity(m_.rows(), m_.cols());
    if (defect.norm() > 1e-12) {
        throw std::invalid_argument("gate is not unitary");
    }
}

GateMatrix GateMatrix::adjoint() const {
    return GateMatrix(m_.adjoint());
}

GateMatrix GateMatrix::operator*(const GateMatrix &other) const {
    return GateMatrix(m_ * other.m_);
}

Matrix identity_matrix(int num_qubits) {
    return Matrix::Identity(1 << num_qubits, 1 << num_qubits);
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

bool equal_up_to_phase(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    // Phase from the largest entry of b.
    Eigen::Index bi = 0, bj = 0;
    b.cwiseAbs().maxCoeff(&bi, &bj);
    if (std::abs(b(bi, bj)) < 1e-300 || std::abs(a(bi, bj)) < 1e-300) {
        return a.norm() < tol && b.norm() < tol;
    }
    cd ratio = a(bi, bj) / b(bi, bj);
    ratio /= std::abs(ratio);
    return (a - ratio * b).norm() < tol;
}

namespace gates {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

GateMatrix diag2(cd a, cd b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return GateMatrix(m);
}
}  // namespace

GateMatrix I() {
    return GateMatrix(Matrix::Identity(2, 2));
}

GateMatrix H() {
    Matrix m(2, 2);
    m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    return GateMatrix(m);
}

GateMatrix X() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return GateMatrix(m);
}

GateMatrix Z() {
    return diag2(1, -1);
}

GateMatrix R(Angle theta) {
    return diag2(1, theta.phase());
}

GateMatrix S() {
    return R(kHalfPi);
}

GateMatrix Sdg() {
    return R(-kHalfPi);
}

GateMatrix T() {
    return R(kMinusQuarterPi);
}

GateMatrix Tdg() {
    return R(kQuarterPi);
}

GateMatrix CZ() {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1;
    return GateMatrix(m);
}

GateMatrix CNOT() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return GateMatrix(m);
}

}  // namespace gates

}  // namespace blinddelegate::qsim
