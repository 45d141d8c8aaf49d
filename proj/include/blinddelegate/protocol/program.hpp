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

#include <string>
#include <variant>
#include <vector>

#include "blinddelegate/pauli/frame.hpp"
#include "blinddelegate/qsim/angle.hpp"

namespace blinddelegate::protocol {

/// One Protocol 2 round on `wire`. Alice's computational angle is `base`,
/// or `alt` when round `watch` (a global round index) reported m = 1.
struct RoundStep {
    int wire = 0;
    qsim::Angle base;
    int watch = -1;
    qsim::Angle alt;
    bool operator==(const RoundStep &) const = default;
};

/// Bob's CZ between two wire qubits. Public, no messages.
struct BridgeStep {
    int wire_a = 0;
    int wire_b = 0;
    bool operator==(const BridgeStep &) const = default;
};

/// Alice-side frame correction: frames[wires[i]] ^= table[index][i], where
/// index packs the m bits of `rounds` (rounds[0] is bit 0).
struct FrameStep {
    std::vector<int> wires;
    std::vector<int> rounds;
    std::vector<std::vector<pauli::PauliFrame>> table;

    const std::vector<pauli::PauliFrame> &lookup(const std::vector<int> &m_bits) const;
    bool operator==(const FrameStep &) const = default;
};

using Step = std::variant<RoundStep, BridgeStep, FrameStep>;

struct AngleProgram {
    int num_wires = 1;
    std::vector<Step> steps;

    int num_rounds() const;
    /// Throws std::invalid_argument on bad wires, forward watches or table sizes.
    void validate() const;
};

/// Alice's computational angle for the next round given all earlier m bits.
qsim::Angle computational_angle(const RoundStep &step, const std::vector<int> &m_history);

/// Angle Alice actually measures at: a Z in the wire frame flips the sign.
qsim::Angle masked_angle(qsim::Angle phi, pauli::PauliFrame frame);

/// Frame after Z^a R X^m H acted on a wire whose frame was `before`.
/// Sign flips of quarter turns are not frame changes; they show up in the
/// realized rotation R_{(-1)^m phi} and are settled by the block's FrameStep.
pauli::PauliFrame round_frame_update(pauli::PauliFrame before, qsim::Angle phi, int a, int m);

/// CZ(a, b) P_a P_b = P'_a P'_b CZ(a, b).
void bridge_frame_update(std::vector<pauli::PauliFrame> &frames, int wire_a, int wire_b);

/// Rotation the wire actually receives in a round.
qsim::Angle realized_angle(qsim::Angle phi, int m);

/// Alice's classical bookkeeping during a run.
class AliceLedger {
   public:
    explicit AliceLedger(int num_wires);

    /// Angle to measure at for this round, from the current frame and m history.
    qsim::Angle angle_for(const RoundStep &step) const;
    qsim::Angle computational_for(const RoundStep &step) const;
    void record_round(const RoundStep &step, int a, int m);
    void apply(const BridgeStep &step);
    void apply(const FrameStep &step);

    const std::vector<pauli::PauliFrame> &frames() const {
        return frames_;
    }
    const std::vector<int> &a_bits() const {
        return a_;
    }
    const std::vector<int> &m_bits() const {
        return m_;
    }

   private:
    std::vector<pauli::PauliFrame> frames_;
    std::vector<int> a_;
    std::vector<int> m_;
};

/// Frames a run would end with, replayed symbolically from its outcome bits.
std::vector<pauli::PauliFrame> replay_frames(const AngleProgram &program, const std::vector<int> &a_bits,
                                             const std::vector<int> &m_bits);

/// One line per step, for logs and the calibrate subcommand.
std::string describe_program(const AngleProgram &program);

}  // namespace blinddelegate::protocol
