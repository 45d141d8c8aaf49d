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

#include <gtest/gtest.h>

#include <chrono>

#include "blinddelegate/graphs/unit_cell.hpp"
#include "test_util.hpp"

using namespace blinddelegate;
using namespace blinddelegate::graphs;
using qsim::Angle;
using testutil::cd;
using testutil::Matrix;

namespace {

Matrix kron2(const Matrix &a, const Matrix &b) {
    Matrix m(4, 4);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            for (int k = 0; k < 2; k++)
                for (int l = 0; l < 2; l++) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return m;
}

// Round model written out: (R H) x (R H), then CZ on bridged columns.
Matrix oracle_cell(const std::vector<int> &bridges, const CellAngles &angles) {
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1;
    Matrix u = Matrix::Identity(4, 4);
    for (int r = 0; r < 3; r++) {
        u = kron2(testutil::R(angles[0][r].radians()) * testutil::H(), testutil::R(angles[1][r].radians()) * testutil::H()) *
            u;
        for (int b : bridges)
            if (b == r + 1) u = cz * u;
    }
    return u;
}

std::vector<Matrix> pauli_pairs() {
    Matrix i = Matrix::Identity(2, 2);
    Matrix y = testutil::X() * testutil::Z();
    std::vector<Matrix> ones = {i, testutil::X(), testutil::Z(), y};
    std::vector<Matrix> out;
    for (const auto &a : ones)
        for (const auto &b : ones) out.push_back(kron2(a, b));
    return out;
}

// Smallest Frobenius distance between u and e^{i phi} P v over Pauli pairs P.
double pauli_distance(const Matrix &u, const Matrix &v) {
    double best = 1e9;
    for (const Matrix &p : pauli_pairs()) {
        Matrix w = p * v;
        cd overlap = (w.adjoint() * u).trace();
        cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cd(1);
        best = std::min(best, (u - phase * w).norm());
    }
    return best;
}

Matrix h_or_i(bool h) {
    return h ? testutil::H() : Matrix(Matrix::Identity(2, 2));
}

Matrix S() {
    return testutil::R(M_PI / 2);
}

Matrix T() {
    return testutil::R(-M_PI / 4);
}

Matrix oracle_logical(CellOp op) {
    Matrix i = Matrix::Identity(2, 2);
    Matrix h = testutil::H();
    switch (op) {
        case CellOp::IdentityPair:
            return Matrix::Identity(4, 4);
        case CellOp::SHonA:
            return kron2(S() * h, i);
        case CellOp::STHonA:
            return kron2(S() * T() * h, i);
        case CellOp::STdgHonA:
            return kron2(S() * T().adjoint() * h, i);
        case CellOp::HonA:
            return kron2(h, i);
        case CellOp::CZCNOT:
            break;
    }
    return Matrix();
}

}  // namespace

TEST(unit_cell, cell_unitary_matches_oracle) {
    qsim::Rng rng(7);
    for (int trial = 0; trial < 50; trial++) {
        CellAngles a;
        for (auto &w : a)
            for (auto &x : w) x = Angle(int(rng() % 8));
        std::vector<int> bridges;
        for (int c = 1; c <= 3; c++)
            if (rng() % 2) bridges.push_back(c);
        ASSERT_LT((cell_unitary({bridges}, a) - oracle_cell(bridges, a)).norm(), 1e-12);
    }
}

TEST(unit_cell, calibration_realizes_catalog) {
    auto t0 = std::chrono::steady_clock::now();
    UnitCellCalibration cal = calibrate_unit_cell();
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ASSERT_LT(seconds, 120.0);
    ASSERT_EQ(cal.entries.size(), 6u);
    ASSERT_FALSE(cal.placement.bridge_columns.empty());
    for (const CatalogEntry &e : cal.entries) {
        Matrix expected = kron2(h_or_i(e.parity.out_a), h_or_i(e.parity.out_b)) * e.logical *
                          kron2(h_or_i(e.parity.in_a), h_or_i(e.parity.in_b));
        ASSERT_LT((expected - e.expected).norm(), 1e-12) << e.name;
        if (e.op != CellOp::CZCNOT) {
            ASSERT_LT((oracle_logical(e.op) - e.logical).norm(), 1e-12) << e.name;
        }
        for (const CellAngles &branch : schedule_branches(e.schedule)) {
            ASSERT_LT(pauli_distance(oracle_cell(cal.placement.bridge_columns, branch), expected), 1e-10) << e.name;
        }
    }
}

TEST(unit_cell, cz_cnot_entry_is_entangling_pair) {
    const CatalogEntry &e = unit_cell_calibration().entry(CellOp::CZCNOT);
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1;
    // CNOT in either orientation: CZ * logical must be a permutation matrix with one off-diagonal swap.
    Matrix cnot = cz * e.logical;
    int off = 0;
    for (int r = 0; r < 4; r++)
        for (int c = 0; c < 4; c++) {
            ASSERT_LT(std::abs(std::abs(cnot(r, c)) - (std::abs(cnot(r, c)) > 0.5 ? 1.0 : 0.0)), 1e-12);
            if (r != c && std::abs(cnot(r, c)) > 0.5) off++;
        }
    ASSERT_EQ(off, 2);
    ASSERT_LT((cnot * cnot - Matrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(unit_cell, input_parity_is_shared) {
    const UnitCellCalibration &cal = unit_cell_calibration();
    for (const CatalogEntry &e : cal.entries) {
        ASSERT_EQ(e.parity.in_a, cal.entries[0].parity.in_a);
        ASSERT_EQ(e.parity.in_b, cal.entries[0].parity.in_b);
    }
}

TEST(unit_cell, sh_schedule) {
    const CatalogEntry &e = unit_cell_calibration().entry(CellOp::SHonA);
    ASSERT_EQ(e.schedule.wires[0][0].base, qsim::kHalfPi);
    ASSERT_EQ(e.schedule.wires[0][1].base, qsim::kZero);
    ASSERT_EQ(e.schedule.wires[0][2].base, qsim::kZero);
}

TEST(unit_cell, t_entries_adapt) {
    for (CellOp op : {CellOp::STHonA, CellOp::STdgHonA}) {
        const CatalogEntry &e = unit_cell_calibration().entry(op);
        int quarter_rounds = 0, adaptive = 0;
        for (const auto &wire : e.schedule.wires)
            for (const auto &rule : wire) {
                quarter_rounds += !rule.base.is_clifford();
                adaptive += rule.watch >= 0;
            }
        ASSERT_EQ(quarter_rounds, 1) << e.name;
        ASSERT_EQ(adaptive, 1) << e.name;
        ASSERT_EQ(schedule_branches(e.schedule).size(), 2u);
    }
}

TEST(unit_cell, bridgeless_zero_schedule_is_h_on_both_wires) {
    CellSchedule zero{};
    for (const CellAngles &branch : schedule_branches(zero)) {
        Matrix u = oracle_cell({}, branch);
        ASSERT_LT(pauli_distance(u, kron2(testutil::H(), testutil::H())), 1e-10);
        ASSERT_LT((cell_unitary({{}}, branch) - u).norm(), 1e-12);
    }
    // H on A with the wire-B input Hadamard absorbed.
    ASSERT_TRUE(schedule_realizes({{}}, zero, kron2(testutil::H(), Matrix::Identity(2, 2)) *
                                                   kron2(Matrix::Identity(2, 2), testutil::H())));
}

TEST(unit_cell, wrong_target_is_rejected) {
    const UnitCellCalibration &cal = unit_cell_calibration();
    const CatalogEntry &sh = cal.entry(CellOp::SHonA);
    const CatalogEntry &h = cal.entry(CellOp::HonA);
    ASSERT_FALSE(schedule_realizes(cal.placement, sh.schedule, h.expected));
    ASSERT_FALSE(schedule_realizes(cal.placement, h.schedule, sh.expected));
}

TEST(unit_cell, realized_angles_flip_quarter_turns_only) {
    CellSchedule s{};
    s.wires[0][0].base = qsim::kMinusQuarterPi;
    s.wires[0][1].base = qsim::kHalfPi;
    s.wires[0][2] = {qsim::kZero, 0, qsim::kHalfPi};
    CellAngles a = realized_angles(s, {{{1, 1, 1}, {1, 1, 1}}});
    ASSERT_EQ(a[0][0], qsim::kQuarterPi);
    ASSERT_EQ(a[0][1], qsim::kHalfPi);
    ASSERT_EQ(a[0][2], qsim::kHalfPi);
    CellAngles b = realized_angles(s, {{{0, 1, 1}, {0, 0, 0}}});
    ASSERT_EQ(b[0][0], qsim::kMinusQuarterPi);
    ASSERT_EQ(b[0][2], qsim::kZero);
}

// Two Clifford cells in sequence: byproducts of the first commute through
// the second up to another Pauli, so the product is pinned mod Pauli.
TEST(unit_cell, two_clifford_cells_compose) {
    const UnitCellCalibration &cal = unit_cell_calibration();
    const std::vector<CellOp> clifford = {CellOp::IdentityPair, CellOp::SHonA, CellOp::HonA, CellOp::CZCNOT};
    for (CellOp first : clifford) {
        for (CellOp second : clifford) {
            const CatalogEntry &e1 = cal.entry(first);
            const CatalogEntry &e2 = cal.entry(second);
            for (const CellAngles &b1 : schedule_branches(e1.schedule))
                for (const CellAngles &b2 : schedule_branches(e2.schedule)) {
                    Matrix u = oracle_cell(cal.placement.bridge_columns, b2) * oracle_cell(cal.placement.bridge_columns, b1);
                    ASSERT_LT(pauli_distance(u, e2.expected * e1.expected), 1e-10) << e1.name << " then " << e2.name;
                }
        }
    }
}
