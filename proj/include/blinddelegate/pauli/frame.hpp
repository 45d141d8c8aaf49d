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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blinddelegate/qsim/angle.hpp"
#include "blinddelegate/qsim/gates.hpp"

namespace blinddelegate::pauli {

/// Pauli byproduct X^x Z^z with the phase dropped.
struct PauliFrame {
    bool x = false;
    bool z = false;

    static constexpr PauliFrame I() {
        return {false, false};
    }
    static constexpr PauliFrame X() {
        return {true, false};
    }
    static constexpr PauliFrame Z() {
        return {false, true};
    }
    static constexpr PauliFrame XZ() {
        return {true, true};
    }

    constexpr PauliFrame operator^(PauliFrame o) const {
        return {x != o.x, z != o.z};
    }
    constexpr PauliFrame &operator^=(PauliFrame o) {
        x = x != o.x;
        z = z != o.z;
        return *this;
    }
    constexpr bool operator==(const PauliFrame &) const = default;
    constexpr bool is_identity() const {
        return !x && !z;
    }

    /// X^x Z^z as a 2x2 matrix.
    qsim::Matrix matrix() const;
    /// "I", "X", "Z" or "XZ".
    std::string name() const;
};

inline constexpr PauliFrame kAllFrames[4] = {PauliFrame::I(), PauliFrame::X(), PauliFrame::Z(), PauliFrame::XZ()};

/// H P = P' H: swaps the bits.
PauliFrame propagate_through_H(PauliFrame frame);

/// R_theta P = P R_theta' up to phase: an X flips theta, Z commutes.
std::pair<PauliFrame, qsim::Angle> propagate_through_R(PauliFrame frame, qsim::Angle theta);

/// Tensor product of per-wire frames; frames[0] is the high factor.
qsim::Matrix frames_matrix(const std::vector<PauliFrame> &frames);

/// Finds P with a = e^{i phi} P b, P a tensor product of one-qubit frames
/// (frames[0] on the high bits). Works for 2x2 and 4x4.
std::optional<std::vector<PauliFrame>> match_left_pauli(const qsim::Matrix &a, const qsim::Matrix &b, double tol = 1e-10);

/// If m is proportional to a Pauli string, returns it.
std::optional<std::vector<PauliFrame>> as_pauli(const qsim::Matrix &m, double tol = 1e-10);

}  // namespace blinddelegate::pauli
