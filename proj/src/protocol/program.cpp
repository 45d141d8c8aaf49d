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

#include "blinddelegate/protocol/program.hpp"

#include <sstream>
#include <stdexcept>

namespace blinddelegate::protocol {

using pauli::PauliFrame;

const std::vector<PauliFrame> &FrameStep::lookup(const std::vector<int> &m_bits) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < rounds.size(); i++) {
        if (rounds[i] < 0 || rounds[i] >= static_cast<int>(m_bits.size())) {
            throw std::logic_error("frame step reads a round that has not happened");
        }
        index |= static_cast<std::size_t>(m_bits[rounds[i]] & 1) << i;
    }
    return table.at(index);
}

int AngleProgram::num_rounds() const {
    int n = 0;
    for (const Step &s : steps) {
        n += std::holds_alternative<RoundStep>(s);
    }
    return n;
}

void AngleProgram::validate() const {
    if (num_wires < 1) {
        throw std::invalid_argument("program needs at least one wire");
    }
    auto check_wire = [&](int w) {
        if (w < 0 || w >= num_wires) {
            throw std::invalid_argument("program step uses wire " + std::to_string(w) + " out of range");
        }
    };
    std::vector<int> round_wire;
    for (const Step &s : steps) {
        if (const auto *r = std::get_if<RoundStep>(&s)) {
            check_wire(r->wire);
            if (r->watch >= static_cast<int>(round_wire.size())) {
                throw std::invalid_argument("round watches a later round");
            }
            round_wire.push_back(r->wire);
        } else if (const auto *b = std::get_if<BridgeStep>(&s)) {
            check_wire(b->wire_a);
            check_wire(b->wire_b);
            if (b->wire_a == b->wire_b) {
                throw std::invalid_argument("bridge needs two wires");
            }
        } else {
            const auto &f = std::get<FrameStep>(s);
            for (int w : f.wires) {
                check_wire(w);
            }
            for (int r : f.rounds) {
                if (r < 0 || r >= static_cast<int>(round_wire.size())) {
                    throw std::invalid_argument("frame step reads a later round");
                }
            }
            if (f.table.size() != (std::size_t{1} << f.rounds.size())) {
                throw std::invalid_argument("frame table size does not match its rounds");
            }
            for (const auto &row : f.table) {
                if (row.size() != f.wires.size()) {
                    throw std::invalid_argument("frame table row does not match its wires");
                }
            }
        }
    }
}

qsim::Angle computational_angle(const RoundStep &step, const std::vector<int> &m_history) {
    if (step.watch < 0) {
        return step.base;
    }
    if (step.watch >= static_cast<int>(m_history.size())) {
        throw std::logic_error("round watches an outcome not yet received");
    }
    return m_history[step.watch] ? step.alt : step.base;
}

qsim::Angle masked_angle(qsim::Angle phi, PauliFrame frame) {
    return frame.z ? -phi : phi;
}

PauliFrame round_frame_update(PauliFrame before, qsim::Angle phi, int a, int m) {
    PauliFrame after;
    after.x = (m != 0) != before.z;
    after.z = before.x != (a != 0);
    if (m && phi.is_odd_half_pi()) {
        // R_{-pi/2} = Z R_{pi/2} up to phase.
        after.z = !after.z;
    }
    return after;
}

void bridge_frame_update(std::vector<PauliFrame> &frames, int wire_a, int wire_b) {
    const bool xa = frames.at(wire_a).x;
    const bool xb = frames.at(wire_b).x;
    frames[wire_a].z = frames[wire_a].z != xb;
    frames[wire_b].z = frames[wire_b].z != xa;
}

qsim::Angle realized_angle(qsim::Angle phi, int m) {
    return !phi.is_clifford() && m ? -phi : phi;
}

AliceLedger::AliceLedger(int num_wires) : frames_(num_wires) {
}

qsim::Angle AliceLedger::computational_for(const RoundStep &step) const {
    return computational_angle(step, m_);
}

qsim::Angle AliceLedger::angle_for(const RoundStep &step) const {
    return masked_angle(computational_for(step), frames_.at(step.wire));
}

void AliceLedger::record_round(const RoundStep &step, int a, int m) {
    const qsim::Angle phi = computational_for(step);
    frames_.at(step.wire) = round_frame_update(frames_[step.wire], phi, a, m);
    a_.push_back(a);
    m_.push_back(m);
}

void AliceLedger::apply(const BridgeStep &step) {
    bridge_frame_update(frames_, step.wire_a, step.wire_b);
}

void AliceLedger::apply(const FrameStep &step) {
    const auto &row = step.lookup(m_);
    for (std::size_t i = 0; i < step.wires.size(); i++) {
        frames_.at(step.wires[i]) ^= row[i];
    }
}

std::vector<PauliFrame> replay_frames(const AngleProgram &program, const std::vector<int> &a_bits,
                                      const std::vector<int> &m_bits) {
    if (static_cast<int>(a_bits.size()) != program.num_rounds() || a_bits.size() != m_bits.size()) {
        throw std::invalid_argument("outcome strings do not match the program's rounds");
    }
    AliceLedger ledger(program.num_wires);
    std::size_t r = 0;
    for (const Step &s : program.steps) {
        if (const auto *round = std::get_if<RoundStep>(&s)) {
            ledger.record_round(*round, a_bits[r], m_bits[r]);
            r++;
        } else if (const auto *b = std::get_if<BridgeStep>(&s)) {
            ledger.apply(*b);
        } else {
            ledger.apply(std::get<FrameStep>(s));
        }
    }
    return ledger.frames();
}

std::string describe_program(const AngleProgram &program) {
    std::ostringstream ss;
    int r = 0;
    for (const Step &s : program.steps) {
        if (const auto *round = std::get_if<RoundStep>(&s)) {
            ss << "round " << r++ << " wire=" << round->wire << " base=" << round->base.str();
            if (round->watch >= 0) {
                ss << " alt=" << round->alt.str() << " if m[" << round->watch << "]=1";
            }
        } else if (const auto *b = std::get_if<BridgeStep>(&s)) {
            ss << "bridge " << b->wire_a << " " << b->wire_b;
        } else {
            const auto &f = std::get<FrameStep>(s);
            ss << "frame wires=";
            for (std::size_t i = 0; i < f.wires.size(); i++) {
                ss << (i ? "," : "") << f.wires[i];
            }
            ss << " table=";
            for (std::size_t i = 0; i < f.table.size(); i++) {
                ss << (i ? "|" : "");
                for (std::size_t j = 0; j < f.table[i].size(); j++) {
                    ss << (j ? "," : "") << f.table[i][j].name();
                }
            }
        }
        ss << "\n";
    }
    return ss.str();
}

}  // namespace blinddelegate::protocol
