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

#include "blinddelegate/protocol/compiler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "blinddelegate/qsim/gates.hpp"

namespace blinddelegate::protocol {

using graphs::AngleRule;
using pauli::PauliFrame;
using qsim::Angle;
using qsim::Matrix;

namespace {

struct BlockRound {
    int slot = 0;
    AngleRule rule;  // watch is an index into the block's own round list
    bool bridge_after = false;
};

Matrix round_matrix(Angle realized) {
    return (qsim::gates::R(realized) * qsim::gates::H()).matrix();
}

Matrix on_slot(const Matrix &u, int slot, int slots) {
    if (slots == 1) {
        return u;
    }
    const Matrix id = qsim::identity_matrix(1);
    return slot == 0 ? qsim::kron(u, id) : qsim::kron(id, u);
}

// Emits the rounds and the byproduct table that makes the register hold
// frame * target on `wires` (wires[0] is the high slot of target).
void emit(AngleProgram &program, const std::vector<int> &wires, const std::vector<BlockRound> &rounds,
          const Matrix &target) {
    const int slots = static_cast<int>(wires.size());
    const int first_round = program.num_rounds();

    std::vector<int> relevant;
    for (std::size_t i = 0; i < rounds.size(); i++) {
        bool matters = !rounds[i].rule.base.is_clifford() || !rounds[i].rule.alt.is_clifford();
        for (const auto &other : rounds) {
            matters = matters || other.rule.watch == static_cast<int>(i);
        }
        if (matters) {
            relevant.push_back(static_cast<int>(i));
        }
    }

    FrameStep fix;
    fix.wires = wires;
    for (int i : relevant) {
        fix.rounds.push_back(first_round + i);
    }
    for (std::size_t index = 0; index < (std::size_t{1} << relevant.size()); index++) {
        std::vector<int> m(rounds.size(), 0);
        for (std::size_t b = 0; b < relevant.size(); b++) {
            m[relevant[b]] = (index >> b) & 1;
        }
        Matrix u = qsim::identity_matrix(slots);
        for (std::size_t i = 0; i < rounds.size(); i++) {
            const AngleRule &rule = rounds[i].rule;
            const Angle phi = rule.choose(rule.watch >= 0 ? m[rule.watch] : 0);
            u = on_slot(round_matrix(realized_angle(phi, m[i])), rounds[i].slot, slots) * u;
            if (rounds[i].bridge_after) {
                u = qsim::gates::CZ().matrix() * u;
            }
        }
        auto frames = pauli::match_left_pauli(u, target);
        if (!frames) {
            throw std::logic_error("block does not realize its target up to a Pauli");
        }
        fix.table.push_back(*frames);
    }

    for (const BlockRound &r : rounds) {
        RoundStep step{wires[r.slot], r.rule.base, -1, r.rule.alt};
        if (r.rule.watch >= 0) {
            step.watch = first_round + r.rule.watch;
        }
        program.steps.emplace_back(step);
        if (r.bridge_after) {
            program.steps.emplace_back(BridgeStep{wires[0], wires[1]});
        }
    }
    bool trivial = true;
    for (const auto &row : fix.table) {
        for (PauliFrame f : row) {
            trivial = trivial && f.is_identity();
        }
    }
    if (!trivial) {
        program.steps.emplace_back(std::move(fix));
    }
}

void emit_constant_frame(AngleProgram &program, const std::vector<int> &wires, const std::vector<PauliFrame> &frames) {
    bool trivial = true;
    for (PauliFrame f : frames) {
        trivial = trivial && f.is_identity();
    }
    if (!trivial) {
        program.steps.emplace_back(FrameStep{wires, {}, {frames}});
    }
}

Matrix swap_matrix() {
    Matrix s = Matrix::Zero(4, 4);
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1;
    return s;
}

// Single-qubit Clifford group mod Pauli, each as blocks in time order.
struct CliffordRep {
    std::vector<BlockKind> blocks;
    Matrix matrix;
};

std::vector<CliffordRep> clifford_reps() {
    const std::vector<std::vector<BlockKind>> words = {
        {}, {BlockKind::H}, {BlockKind::S}, {BlockKind::SH}, {BlockKind::S, BlockKind::H}, {BlockKind::SH, BlockKind::H}};
    std::vector<CliffordRep> reps;
    for (const auto &w : words) {
        Matrix m = qsim::identity_matrix(1);
        for (BlockKind k : w) {
            m = frozen_block(k).gate * m;
        }
        reps.push_back({w, m});
    }
    return reps;
}

TwoQubitSynthesis synthesize(GateName gate) {
    const graphs::UnitCellCalibration &cal = graphs::unit_cell_calibration();
    const Matrix &cell = cal.entry(graphs::CellOp::CZCNOT).expected;
    const std::vector<CliffordRep> reps = clifford_reps();
    std::optional<TwoQubitSynthesis> best;
    for (bool a_is_first : {true, false}) {
        Matrix target = gate_matrix(gate).matrix();
        if (!a_is_first) {
            target = swap_matrix() * target * swap_matrix();
        }
        for (const auto &pa : reps) {
            for (const auto &pb : reps) {
                for (const auto &qa : reps) {
                    for (const auto &qb : reps) {
                        const int cost = static_cast<int>(pa.blocks.size() + pb.blocks.size() + qa.blocks.size() +
                                                          qb.blocks.size());
                        if (best && cost >= best->cost()) {
                            continue;
                        }
                        const Matrix w = qsim::kron(qa.matrix, qb.matrix) * cell * qsim::kron(pa.matrix, pb.matrix);
                        auto fix = pauli::match_left_pauli(w, target);
                        if (fix) {
                            best = TwoQubitSynthesis{a_is_first, pa.blocks, pb.blocks, qa.blocks, qb.blocks, *fix};
                        }
                    }
                }
            }
        }
    }
    if (!best) {
        throw std::logic_error("no Clifford dressing turns the cell into " + gate_name_str(gate));
    }
    return *best;
}

void append_kind(AngleProgram &program, int wire, BlockKind kind) {
    const BlockRules rules = frozen_block(kind);
    append_block(program, wire, rules, rules.gate);
}

}  // namespace

std::string block_name(BlockKind kind) {
    switch (kind) {
        case BlockKind::H:
            return "H";
        case BlockKind::S:
            return "S";
        case BlockKind::SH:
            return "SH";
        case BlockKind::TH:
            return "TH";
        case BlockKind::TdgH:
            return "TdgH";
        case BlockKind::I:
            return "I";
    }
    return "?";
}

BlockRules frozen_block(BlockKind kind) {
    using namespace qsim::gates;
    const AngleRule z{qsim::kZero, -1, qsim::kZero};
    const AngleRule s{qsim::kHalfPi, -1, qsim::kZero};
    // Round 3 switches to pi/2 when round 1 reported m = 1.
    const AngleRule z_or_s{qsim::kZero, 0, qsim::kHalfPi};
    switch (kind) {
        case BlockKind::H:
            return {{z, z, z}, H().matrix()};
        case BlockKind::S:
            // H S H S H = S^dagger up to phase, i.e. Z S.
            return {{s, s, z}, S().matrix()};
        case BlockKind::SH:
            return {{s, z, z}, (S() * H()).matrix()};
        case BlockKind::TH:
            // Round 1 realizes T^dagger H when m1 = 1; round 3 then adds S.
            return {{AngleRule{qsim::kMinusQuarterPi, -1, qsim::kZero}, z, z_or_s}, (T() * H()).matrix()};
        case BlockKind::TdgH:
            return {{AngleRule{qsim::kQuarterPi, -1, qsim::kZero}, z, z_or_s}, (Tdg() * H()).matrix()};
        case BlockKind::I:
            // (SH)^3 is the identity up to phase.
            return {{s, s, s}, qsim::identity_matrix(1)};
    }
    throw std::logic_error("unknown block");
}

void append_block(AngleProgram &program, int wire, const BlockRules &rules, const Matrix &target) {
    std::vector<BlockRound> rounds;
    for (const AngleRule &r : rules.rounds) {
        rounds.push_back({0, r, false});
    }
    emit(program, {wire}, rounds, target);
}

void append_cell(AngleProgram &program, const graphs::CatalogEntry &entry, const graphs::CellPlacement &placement,
                 int wire_a, int wire_b) {
    std::vector<BlockRound> rounds;
    for (int r = 0; r < graphs::kCellRounds; r++) {
        const bool bridged = std::find(placement.bridge_columns.begin(), placement.bridge_columns.end(), r + 1) !=
                             placement.bridge_columns.end();
        for (int slot = 0; slot < 2; slot++) {
            AngleRule rule = entry.schedule.wires[slot][r];
            if (rule.watch >= 0) {
                // Per-wire round index to index in the interleaved list.
                rule.watch = 2 * rule.watch + slot;
            }
            rounds.push_back({slot, rule, slot == 1 && bridged});
        }
    }
    emit(program, {wire_a, wire_b}, rounds, entry.expected);
}

const TwoQubitSynthesis &two_qubit_synthesis(GateName gate) {
    if (!is_two_qubit(gate)) {
        throw std::invalid_argument(gate_name_str(gate) + " is not a two-qubit gate");
    }
    static const TwoQubitSynthesis cz = synthesize(GateName::CZ);
    static const TwoQubitSynthesis cnot = synthesize(GateName::CNOT);
    return gate == GateName::CZ ? cz : cnot;
}

std::vector<int> blocks_per_wire(const AngleProgram &program) {
    std::vector<int> rounds(program.num_wires, 0);
    for (const Step &s : program.steps) {
        if (const auto *r = std::get_if<RoundStep>(&s)) {
            rounds.at(r->wire)++;
        }
    }
    for (int &r : rounds) {
        r /= 3;
    }
    return rounds;
}

AngleProgram compile(const Circuit &circuit, const CompileOptions &options) {
    circuit.validate();
    AngleProgram program;
    program.num_wires = circuit.num_wires;
    for (const Gate &g : circuit.gates) {
        switch (g.name) {
            case GateName::H:
                append_kind(program, g.wire, BlockKind::H);
                break;
            case GateName::S:
                append_kind(program, g.wire, BlockKind::S);
                break;
            case GateName::Sdg:
                append_block(program, g.wire, frozen_block(BlockKind::S), qsim::gates::Sdg().matrix());
                break;
            case GateName::T:
                append_kind(program, g.wire, BlockKind::H);
                append_kind(program, g.wire, BlockKind::TH);
                break;
            case GateName::Tdg:
                append_kind(program, g.wire, BlockKind::H);
                append_kind(program, g.wire, BlockKind::TdgH);
                break;
            case GateName::X:
                emit_constant_frame(program, {g.wire}, {PauliFrame::X()});
                break;
            case GateName::Z:
                emit_constant_frame(program, {g.wire}, {PauliFrame::Z()});
                break;
            case GateName::CZ:
            case GateName::CNOT: {
                const TwoQubitSynthesis &syn = two_qubit_synthesis(g.name);
                const int a = syn.a_is_first ? g.wire : g.wire2;
                const int b = syn.a_is_first ? g.wire2 : g.wire;
                for (BlockKind k : syn.pre_a) {
                    append_kind(program, a, k);
                }
                for (BlockKind k : syn.pre_b) {
                    append_kind(program, b, k);
                }
                const auto &cal = graphs::unit_cell_calibration();
                append_cell(program, cal.entry(graphs::CellOp::CZCNOT), cal.placement, a, b);
                for (BlockKind k : syn.post_a) {
                    append_kind(program, a, k);
                }
                for (BlockKind k : syn.post_b) {
                    append_kind(program, b, k);
                }
                emit_constant_frame(program, {a, b}, syn.fix);
                break;
            }
        }
    }
    const std::vector<int> counts = blocks_per_wire(program);
    for (int w = 0; w < program.num_wires; w++) {
        for (int k = counts[w]; k < options.pad_blocks_to; k++) {
            append_kind(program, w, BlockKind::I);
        }
    }
    program.validate();
    return program;
}

}  // namespace blinddelegate::protocol
