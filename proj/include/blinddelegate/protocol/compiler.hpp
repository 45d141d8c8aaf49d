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

#include <array>
#include <string>
#include <vector>

#include "blinddelegate/graphs/unit_cell.hpp"
#include "blinddelegate/protocol/circuit.hpp"
#include "blinddelegate/protocol/program.hpp"

namespace blinddelegate::protocol {

/// Three-round single-wire blocks, named by the gate they realize mod Pauli.
enum class BlockKind { H, S, SH, TH, TdgH, I };

std::string block_name(BlockKind kind);

/// Frozen base angles and adaptation of a block (rounds in time order) and
/// the gate it realizes up to a Pauli byproduct.
struct BlockRules {
    std::array<graphs::AngleRule, 3> rounds;
    qsim::Matrix gate;
};

BlockRules frozen_block(BlockKind kind);

struct CompileOptions {
    /// Append identity blocks until every wire has this many blocks.
    int pad_blocks_to = 0;
};

/// Gate-by-gate compilation: one-qubit gates become blocks, X and Z become
/// frame flips, CZ and CNOT become a calibrated unit cell dressed with
/// one-qubit Clifford blocks. Throws std::invalid_argument on a bad circuit.
AngleProgram compile(const Circuit &circuit, const CompileOptions &options = {});

/// Appends one block on `wire` whose byproduct table is computed so the
/// register afterwards holds (frame) * target. `rules` must realize target mod Pauli.
void append_block(AngleProgram &program, int wire, const BlockRules &rules, const qsim::Matrix &target);

/// Appends a calibrated catalog cell on (wire_a, wire_b); the register
/// afterwards holds (frame) * entry.expected on those wires.
void append_cell(AngleProgram &program, const graphs::CatalogEntry &entry, const graphs::CellPlacement &placement,
                 int wire_a, int wire_b);

/// Plan for a two-qubit gate: one-qubit Clifford words (each a list of
/// blocks in time order) before and after the CZ*CNOT cell, plus the Pauli
/// left over. `a_is_first` says whether the gate's first wire plays cell wire A.
struct TwoQubitSynthesis {
    bool a_is_first = true;
    std::vector<BlockKind> pre_a;
    std::vector<BlockKind> pre_b;
    std::vector<BlockKind> post_a;
    std::vector<BlockKind> post_b;
    std::vector<pauli::PauliFrame> fix;
    int cost() const {
        return static_cast<int>(pre_a.size() + pre_b.size() + post_a.size() + post_b.size());
    }
};

/// Cheapest synthesis of CZ or CNOT (first wire = control) from the cell.
const TwoQubitSynthesis &two_qubit_synthesis(GateName gate);

/// Blocks per wire in a compiled program (a cell counts once on each wire).
std::vector<int> blocks_per_wire(const AngleProgram &program);

}  // namespace blinddelegate::protocol
