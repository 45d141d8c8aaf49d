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

#include "blinddelegate/graphs/unit_cell.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "blinddelegate/errors.hpp"
#include "blinddelegate/pauli/frame.hpp"

namespace blinddelegate::graphs {

using qsim::Angle;
using qsim::cd;
using qsim::Matrix;
using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;

namespace {

Mat2 round2(Angle theta) {
    // R_theta H
    const double s = 1.0 / std::sqrt(2.0);
    Mat2 m;
    m << s, s, s * theta.phase(), -s * theta.phase();
    return m;
}

Mat4 kron4(const Mat2 &a, const Mat2 &b) {
    Mat4 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return m;
}

Mat4 cz4() {
    Mat4 m = Mat4::Identity();
    m(3, 3) = -1.0;
    return m;
}

Mat4 unitary4(const CellPlacement &placement, const CellAngles &realized) {
    static const Mat4 cz = cz4();
    Mat4 u = Mat4::Identity();
    for (int r = 0; r < kCellRounds; ++r) {
        u = kron4(round2(realized[0][r]), round2(realized[1][r])) * u;
        const int column = r + 1;
        if (std::find(placement.bridge_columns.begin(), placement.bridge_columns.end(), column) !=
            placement.bridge_columns.end())
            u = cz * u;
    }
    return u;
}

const std::vector<Mat4> &paulis4() {
    static const std::vector<Mat4> all = [] {
        std::vector<Mat4> out;
        for (const auto &fa : pauli::kAllFrames)
            for (const auto &fb : pauli::kAllFrames) out.push_back(pauli::frames_matrix({fa, fb}));
        return out;
    }();
    return all;
}

// Cheap screen: u t^dagger is proportional to a Pauli iff |tr(P^dagger u t^dagger)| = 4.
bool pauli_close(const Mat4 &u, const Mat4 &target) {
    const Mat4 m = u * target.adjoint();
    for (const auto &p : paulis4())
        if (std::abs(std::abs((p.adjoint() * m).trace()) - 4.0) < 1e-8) return true;
    return false;
}

Matrix h_or_i(bool h) {
    return h ? qsim::gates::H().matrix() : qsim::identity_matrix(1);
}

Matrix logical_of(CellOp op, bool cnot_b_controls) {
    using namespace qsim::gates;
    const Matrix i2 = qsim::identity_matrix(1);
    switch (op) {
        case CellOp::IdentityPair:
            return qsim::identity_matrix(2);
        case CellOp::SHonA:
            return qsim::kron((S() * H()).matrix(), i2);
        case CellOp::STHonA:
            return qsim::kron((S() * T() * H()).matrix(), i2);
        case CellOp::STdgHonA:
            return qsim::kron((S() * Tdg() * H()).matrix(), i2);
        case CellOp::HonA:
            return qsim::kron(H().matrix(), i2);
        case CellOp::CZCNOT: {
            // CNOT with wire B controlling wire A, or the textbook orientation.
            Matrix cnot = CNOT().matrix();
            if (cnot_b_controls) {
                const Matrix swap = (Matrix(4, 4) << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1).finished();
                cnot = swap * cnot * swap;
            }
            return CZ().matrix() * cnot;
        }
    }
    throw std::logic_error("unknown cell op");
}

// Schedules in search order: Clifford-only first, then one quarter-turn
// round with an optional adaptive later round on the same wire.
std::vector<CellSchedule> candidate_schedules() {
    std::vector<CellSchedule> out;
    auto from_digits = [](int bits) {
        CellSchedule s;
        for (int i = 0; i < 2 * kCellRounds; ++i)
            s.wires[i / kCellRounds][i % kCellRounds].base = (bits >> i) & 1 ? qsim::kHalfPi : qsim::kZero;
        return s;
    };
    for (int bits = 0; bits < 64; ++bits) out.push_back(from_digits(bits));
    for (int pos = 0; pos < 2 * kCellRounds; ++pos) {
        const int wire = pos / kCellRounds;
        const int round = pos % kCellRounds;
        for (Angle t : {qsim::kMinusQuarterPi, qsim::kQuarterPi}) {
            for (int bits = 0; bits < 64; ++bits) {
                if ((bits >> pos) & 1) continue;
                CellSchedule s = from_digits(bits);
                s.wires[wire][round].base = t;
                out.push_back(s);
                for (int later = round + 1; later < kCellRounds; ++later) {
                    CellSchedule adaptive = s;
                    AngleRule &rule = adaptive.wires[wire][later];
                    rule.watch = round;
                    rule.alt = rule.base == qsim::kZero ? qsim::kHalfPi : qsim::kZero;
                    out.push_back(adaptive);
                }
            }
        }
    }
    return out;
}

std::vector<CellPlacement> candidate_placements() {
    return {{{}}, {{1}}, {{2}}, {{3}}, {{1, 2}}, {{1, 3}}, {{2, 3}}};
}

}  // namespace

std::string cell_op_name(CellOp op) {
    switch (op) {
        case CellOp::IdentityPair:
            return "I(x)I";
        case CellOp::SHonA:
            return "SH(x)I";
        case CellOp::STHonA:
            return "STH(x)I";
        case CellOp::STdgHonA:
            return "STdgH(x)I";
        case CellOp::HonA:
            return "H(x)I";
        case CellOp::CZCNOT:
            return "CZ*CNOT";
    }
    return "?";
}

const CatalogEntry &UnitCellCalibration::entry(CellOp op) const {
    for (const auto &e : entries)
        if (e.op == op) return e;
    throw std::out_of_range("catalog entry missing: " + cell_op_name(op));
}

Matrix cell_unitary(const CellPlacement &placement, const CellAngles &realized) {
    return unitary4(placement, realized);
}

CellAngles realized_angles(const CellSchedule &schedule, const std::array<std::array<int, kCellRounds>, 2> &m) {
    CellAngles out;
    for (int w = 0; w < 2; ++w) {
        for (int r = 0; r < kCellRounds; ++r) {
            const AngleRule &rule = schedule.wires[w][r];
            const Angle phi = rule.choose(rule.watch >= 0 ? m[w][rule.watch] : 0);
            out[w][r] = !phi.is_clifford() && m[w][r] ? -phi : phi;
        }
    }
    return out;
}

std::vector<CellAngles> schedule_branches(const CellSchedule &schedule) {
    // Only rounds that are quarter turns or are watched change the realized angles.
    std::vector<int> relevant;
    for (int w = 0; w < 2; ++w) {
        for (int r = 0; r < kCellRounds; ++r) {
            bool matters = !schedule.wires[w][r].base.is_clifford() || !schedule.wires[w][r].alt.is_clifford();
            for (int later = 0; later < kCellRounds; ++later)
                if (schedule.wires[w][later].watch == r) matters = true;
            if (matters) relevant.push_back(w * kCellRounds + r);
        }
    }
    std::vector<CellAngles> out;
    for (int bits = 0; bits < (1 << relevant.size()); ++bits) {
        std::array<std::array<int, kCellRounds>, 2> m{};
        for (std::size_t i = 0; i < relevant.size(); ++i)
            m[relevant[i] / kCellRounds][relevant[i] % kCellRounds] = (bits >> i) & 1;
        const CellAngles a = realized_angles(schedule, m);
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    return out;
}

bool schedule_realizes(const CellPlacement &placement, const CellSchedule &schedule, const Matrix &target) {
    for (const auto &branch : schedule_branches(schedule)) {
        if (!pauli::match_left_pauli(cell_unitary(placement, branch), target, 1e-10)) return false;
    }
    return true;
}

UnitCellCalibration calibrate_unit_cell() {
    const std::vector<CellSchedule> schedules = candidate_schedules();
    // Branches are fixed per schedule; precompute them once.
    std::vector<std::vector<CellAngles>> branches;
    branches.reserve(schedules.size());
    for (const auto &s : schedules) branches.push_back(schedule_branches(s));

    std::optional<UnitCellCalibration> best;
    int best_score = 0;
    std::size_t tried = 0;

    for (const CellPlacement &placement : candidate_placements()) {
        std::vector<std::vector<Mat4>> unitaries(schedules.size());
        for (std::size_t i = 0; i < schedules.size(); ++i)
            for (const auto &b : branches[i]) unitaries[i].push_back(unitary4(placement, b));

        for (int in_bits = 0; in_bits < 4; ++in_bits) {
            const bool in_a = in_bits & 1;
            const bool in_b = in_bits & 2;
            UnitCellCalibration cal;
            cal.placement = placement;
            bool complete = true;
            for (CellOp op : kCatalog) {
                bool found = false;
                for (bool b_controls : {true, false}) {
                    if (op != CellOp::CZCNOT && !b_controls) continue;
                    const Matrix logical = logical_of(op, b_controls);
                    for (int out_bits : {0, 1, 2, 3}) {
                        HParity parity{in_a, in_b, bool(out_bits & 1), bool(out_bits & 2)};
                        const Matrix expected = qsim::kron(h_or_i(parity.out_a), h_or_i(parity.out_b)) * logical *
                                                qsim::kron(h_or_i(in_a), h_or_i(in_b));
                        const Mat4 target = expected;
                        for (std::size_t i = 0; i < schedules.size() && !found; ++i) {
                            ++tried;
                            bool all = true;
                            for (const auto &u : unitaries[i]) {
                                if (!pauli_close(u, target)) {
                                    all = false;
                                    break;
                                }
                            }
                            if (!all || !schedule_realizes(placement, schedules[i], expected)) continue;
                            cal.entries.push_back({op, cell_op_name(op), logical, parity, expected, schedules[i]});
                            found = true;
                        }
                        if (found) break;
                    }
                    if (found) break;
                }
                if (!found) {
                    complete = false;
                    break;
                }
            }
            if (!complete) continue;
            int score = 0;
            for (const auto &e : cal.entries) score += e.parity.out_a + e.parity.out_b;
            score = score * 4 + in_a + in_b;
            if (!best || score < best_score) {
                best = std::move(cal);
                best_score = score;
            }
        }
    }
    if (!best) throw UnreachableConfiguration("no bridge placement realizes the unit-cell catalog");
    best->schedules_tried = tried;
    return *best;
}

const UnitCellCalibration &unit_cell_calibration() {
    static const UnitCellCalibration cal = calibrate_unit_cell();
    return cal;
}

GraphSpec build_unit_cell(const CellPlacement &placement) {
    return tile(placement, 1, 1);
}

GraphSpec build_unit_cell() {
    return build_unit_cell(unit_cell_calibration().placement);
}

std::vector<TiledCell> tile_cells(int cells_wide, int cells_deep) {
    if (cells_wide < 1 || cells_deep < 1) throw std::invalid_argument("tile dimensions must be positive");
    const int wires = 2 * cells_wide;
    std::vector<TiledCell> out;
    for (int c = 0; c < cells_deep; ++c) {
        const int first = wires == 2 || c % 2 == 0 ? 0 : 1;
        for (int a = first; a + 1 < wires; a += 2) out.push_back({a, a + 1, c});
    }
    return out;
}

GraphSpec tile(const CellPlacement &placement, int cells_wide, int cells_deep) {
    const int wires = 2 * cells_wide;
    const int depth = kCellRounds * cells_deep + 1;
    if (static_cast<long>(wires) * depth > kMaxGraphVertices)
        throw CapacityExceeded("tiled graph exceeds " + std::to_string(kMaxGraphVertices) + " vertices");
    GraphSpec g = GraphSpec::with_vertices(wires * depth);
    auto id = [depth](int wire, int column) { return wire * depth + column; };
    for (int w = 0; w < wires; ++w) {
        for (int c = 0; c < depth; ++c) g.places[id(w, c)] = {w, c};
        for (int c = 0; c + 1 < depth; ++c) g.add_edge(id(w, c), id(w, c + 1));
        g.inputs.insert(id(w, 0));
        g.outputs.insert(id(w, depth - 1));
    }
    for (const TiledCell &cell : tile_cells(cells_wide, cells_deep)) {
        for (int col : placement.bridge_columns) {
            const int column = kCellRounds * cell.cell_column + col;
            g.add_edge(id(cell.wire_a, column), id(cell.wire_b, column));
        }
    }
    g.validate();
    return g;
}

GraphSpec tile(int cells_wide, int cells_deep) {
    return tile(unit_cell_calibration().placement, cells_wide, cells_deep);
}

}  // namespace blinddelegate::graphs
