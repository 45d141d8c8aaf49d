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

#include "blinddelegate/graphs/graph_spec.hpp"
#include "blinddelegate/qsim/angle.hpp"
#include "blinddelegate/qsim/gates.hpp"

namespace blinddelegate::graphs {

/// Rounds per wire in one cell (columns 1..3; column 0 is the cell input).
inline constexpr int kCellRounds = 3;

/// Alice's angle for one round. If `watch` names an earlier round on the
/// same wire and that round's X-result was 1, `alt` replaces `base`.
struct AngleRule {
    qsim::Angle base;
    int watch = -1;
    qsim::Angle alt;

    qsim::Angle choose(int watched_m) const {
        return watch >= 0 && watched_m ? alt : base;
    }
    bool operator==(const AngleRule &) const = default;
};

using WireSchedule = std::array<AngleRule, kCellRounds>;
using CellAngles = std::array<std::array<qsim::Angle, kCellRounds>, 2>;

/// Columns (1..3) carrying a bridge edge between the two wires.
struct CellPlacement {
    std::vector<int> bridge_columns;
    bool operator==(const CellPlacement &) const = default;
};

/// Wire 0 is "A" (high bits of the 4x4 matrices), wire 1 is "B".
struct CellSchedule {
    std::array<WireSchedule, 2> wires;
};

enum class CellOp { IdentityPair, SHonA, STHonA, STdgHonA, HonA, CZCNOT };

inline constexpr CellOp kCatalog[] = {CellOp::IdentityPair, CellOp::SHonA, CellOp::STHonA,
                                      CellOp::STdgHonA,     CellOp::HonA,  CellOp::CZCNOT};

std::string cell_op_name(CellOp op);

/// Hadamards absorbed at a cell's input or output, per wire.
struct HParity {
    bool in_a = false;
    bool in_b = false;
    bool out_a = false;
    bool out_b = false;
    int weight() const {
        return in_a + in_b + out_a + out_b;
    }
};

struct CatalogEntry {
    CellOp op;
    std::string name;
    /// The catalog operation on (A, B).
    qsim::Matrix logical;
    HParity parity;
    /// (H^out_a x H^out_b) logical (H^in_a x H^in_b): what the cell actually does.
    qsim::Matrix expected;
    CellSchedule schedule;
};

struct UnitCellCalibration {
    CellPlacement placement;
    std::vector<CatalogEntry> entries;
    std::size_t schedules_tried = 0;

    const CatalogEntry &entry(CellOp op) const;
};

/// Product of the rounds R_theta H (x) R_theta H with CZ after each bridged column.
qsim::Matrix cell_unitary(const CellPlacement &placement, const CellAngles &realized);

/// Realized angles for one assignment of X-results. Rounds with an odd
/// multiple of pi/4 flip sign when their own X-result is 1; Clifford rounds
/// keep their angle because the flip is a Pauli.
CellAngles realized_angles(const CellSchedule &schedule, const std::array<std::array<int, kCellRounds>, 2> &m);

/// All distinct realized-angle assignments of a schedule.
std::vector<CellAngles> schedule_branches(const CellSchedule &schedule);

/// True iff every branch equals `target` up to a left Pauli (x) Pauli and phase (1e-10).
bool schedule_realizes(const CellPlacement &placement, const CellSchedule &schedule, const qsim::Matrix &target);

/// Exhaustive search over bridge placements, Hadamard parities and angle
/// schedules. Throws UnreachableConfiguration if nothing realizes the catalog.
UnitCellCalibration calibrate_unit_cell();

/// calibrate_unit_cell() computed once.
const UnitCellCalibration &unit_cell_calibration();

/// Two wires, columns 0..3, bridges at the placement's columns.
GraphSpec build_unit_cell(const CellPlacement &placement);
GraphSpec build_unit_cell();

struct TiledCell {
    int wire_a;
    int wire_b;
    int cell_column;
};

/// Brickwork layout: 2*cells_wide wires; even cell columns pair (0,1),(2,3)...,
/// odd ones pair (1,2),(3,4)... With only two wires every column uses (0,1).
std::vector<TiledCell> tile_cells(int cells_wide, int cells_deep);

GraphSpec tile(const CellPlacement &placement, int cells_wide, int cells_deep);
GraphSpec tile(int cells_wide, int cells_deep);

}  // namespace blinddelegate::graphs
