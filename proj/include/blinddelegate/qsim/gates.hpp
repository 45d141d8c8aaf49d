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

#include <Eigen/Dense>
#include <complex>

#include "blinddelegate/qsim/angle.hpp"

namespace blinddelegate::qsim {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// A 2x2 or 4x4 unitary. Construction rejects anything else.
///
/// For a 4x4 gate acting on targets {t0, t1}, t0 is the high bit of the
/// matrix index, so CNOT() on {control, target} is the textbook matrix.
class GateMatrix {
   public:
    explicit GateMatrix(Matrix m);

    const Matrix &matrix() const {
        return m_;
    }
    int num_qubits() const {
        return m_.rows() == 2 ? 1 : 2;
    }
    GateMatrix adjoint() const;
    GateMatrix operator*(const GateMatrix &other) const;

   private:
    Matrix m_;
};

Matrix identity_matrix(int num_qubits);
/// a (x) b with a on the high bits.
Matrix kron(const Matrix &a, const Matrix &b);

/// True iff a = e^{i phi} b for some phi, within tol in Frobenius norm.
bool equal_up_to_phase(const Matrix &a, const Matrix &b, double tol);

namespace gates {
GateMatrix I();
GateMatrix H();
GateMatrix X();
GateMatrix Z();
/// R_theta = diag(1, e^{i theta}).
GateMatrix R(Angle theta);
GateMatrix S();
GateMatrix Sdg();
/// T = R_{-pi/4}.
GateMatrix T();
GateMatrix Tdg();
GateMatrix CZ();
/// Control on the first target.
GateMatrix CNOT();
}  // namespace gates

}  // namespace blinddelegate::qsim
