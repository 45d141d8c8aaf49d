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

#include "blinddelegate/pauli/frame.hpp"

#include <stdexcept>

namespace blinddelegate::pauli {

using qsim::Matrix;

Matrix PauliFrame::matrix() const {
    Matrix m = Matrix::Identity(2, 2);
    if (x) {
        m = qsim::gates::X().matrix() * m;
    }
    if (z) {
        m = m * qsim::gates::Z().matrix();
    }
    return m;
}

std::string PauliFrame::name() const {
    if (x && z) {
        return "XZ";
    }
    if (x) {
        return "X";
    }
    if (z) {
        return "Z";
    }
    return "I";
}

PauliFrame propagate_through_H(PauliFrame frame) {
    return {frame.z, frame.x};
}

std::pair<PauliFrame, qsim::Angle> propagate_through_R(PauliFrame frame, qsim::Angle theta) {
    return {frame, frame.x ? -theta : theta};
}

Matrix frames_matrix(const std::vector<PauliFrame> &frames) {
    Matrix m = Matrix::Identity(1, 1);
    for (const auto &f : frames) {
        m = qsim::kron(m, f.matrix());
    }
    return m;
}

std::optional<std::vector<PauliFrame>> match_left_pauli(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("match_left_pauli: size mismatch");
    }
    int n = a.rows() == 2 ? 1 : a.rows() == 4 ? 2 : -1;
    if (n < 0) {
        throw std::invalid_argument("match_left_pauli: only 1 or 2 qubits");
    }
    std::vector<PauliFrame> frames(n);
    int combos = 1 << (2 * n);
    for (int c = 0; c < combos; c++) {
        for (int w = 0; w < n; w++) {
            frames[w] = kAllFrames[(c >> (2 * w)) & 3];
        }
        if (qsim::equal_up_to_phase(a, frames_matrix(frames) * b, tol)) {
            return frames;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<PauliFrame>> as_pauli(const Matrix &m, double tol) {
    return match_left_pauli(m, Matrix::Identity(m.rows(), m.cols()), tol);
}

}  // namespace blinddelegate::pauli
