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

#include "blinddelegate/pauli/word.hpp"
#include "blinddelegate/protocol/compiler.hpp"
#include "blinddelegate/protocol/protocol2.hpp"
#include "test_util.hpp"

using namespace blinddelegate;
using namespace blinddelegate::protocol;
using pauli::PauliFrame;
using qsim::Angle;
using testutil::cd;
using testutil::Matrix;

namespace {

std::vector<RoundStep> rounds_of(const AngleProgram &p) {
    std::vector<RoundStep> out;
    for (const Step &s : p.steps) {
        if (const auto *r = std::get_if<RoundStep>(&s)) {
            out.push_back(*r);
        }
    }
    return out;
}

Matrix S() {
    return testutil::R(M_PI / 2);
}

Matrix T() {
    return testutil::R(-M_PI / 4);
}

Matrix oracle_gate(BlockKind k) {
    const Matrix h = testutil::H();
    switch (k) {
        case BlockKind::H:
            return h;
        case BlockKind::S:
            return S();
        case BlockKind::SH:
            return S() * h;
        case BlockKind::TH:
            return T() * h;
        case BlockKind::TdgH:
            return T().adjoint() * h;
        case BlockKind::I:
            return Matrix::Identity(2, 2);
    }
    return Matrix();
}

double overlap(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b) {
    return std::abs(a.dot(b));
}

std::vector<int> bits(int value, int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; i++) {
        out[i] = (value >> i) & 1;
    }
    return out;
}

std::vector<pauli::Letter> angle_letters(Angle theta) {
    using pauli::Letter;
    switch (theta.k()) {
        case 0:
            return {};
        case 1:
            return {Letter::Tdg};
        case 7:
            return {Letter::T};
        case 2:
            return {Letter::S};
        case 6:
            return {Letter::Sdg};
        case 4:
            return {Letter::Z};
    }
    ADD_FAILURE() << "unexpected angle " << theta.str();
    return {};
}

}  // namespace

TEST(compiler, s_block_angles) {
    AngleProgram p = compile(circuit_from_string("S 0\n"));
    auto r = rounds_of(p);
    ASSERT_EQ(r.size(), 3u);
    ASSERT_EQ(r[0].base, qsim::kHalfPi);
    ASSERT_EQ(r[1].base, qsim::kHalfPi);
    ASSERT_EQ(r[2].base, qsim::kZero);
}

TEST(compiler, h_block_angles) {
    auto r = rounds_of(compile(circuit_from_string("H 0\n")));
    ASSERT_EQ(r.size(), 3u);
    for (const auto &x : r) {
        ASSERT_EQ(x.base, qsim::kZero);
        ASSERT_EQ(x.watch, -1);
    }
}

TEST(compiler, t_is_h_block_then_th_block) {
    auto r = rounds_of(compile(circuit_from_string("T 0\n")));
    ASSERT_EQ(r.size(), 6u);
    ASSERT_EQ(r[0].base, qsim::kZero);
    ASSERT_EQ(r[3].base, qsim::kMinusQuarterPi);
    ASSERT_EQ(r[5].watch, 3);
    ASSERT_EQ(r[5].base, qsim::kZero);
    ASSERT_EQ(r[5].alt, qsim::kHalfPi);
}

TEST(compiler, paulis_are_free) {
    AngleProgram p = compile(circuit_from_string("X 0\nZ 0\nX 0\n"));
    ASSERT_EQ(p.num_rounds(), 0);
    ASSERT_EQ(replay_frames(p, {}, {}), std::vector<PauliFrame>{PauliFrame::Z()});
}

// Every (a, m) string of a block leaves gate * psi after frame correction.
TEST(compiler, blocks_deterministic_over_all_outcomes) {
    qsim::Rng rng(21);
    for (BlockKind kind : {BlockKind::H, BlockKind::S, BlockKind::SH, BlockKind::TH, BlockKind::TdgH, BlockKind::I}) {
        AngleProgram p;
        BlockRules rules = frozen_block(kind);
        append_block(p, 0, rules, rules.gate);
        for (int trial = 0; trial < 3; trial++) {
            qsim::StateVector psi = qsim::random_state(1, rng);
            Eigen::VectorXcd want = oracle_gate(kind) * testutil::vec(psi);
            for (int bitsval = 0; bitsval < 64; bitsval++) {
                OutcomeSource src = OutcomeSource::scripted(bits(bitsval, 6));
                RunResult r = run_protocol2(p, psi, {}, src);
                ASSERT_NEAR(overlap(testutil::vec(corrected_output(r)), want), 1.0, 1e-10)
                    << block_name(kind) << " string " << bitsval;
                ASSERT_NEAR(r.path_probability, 1.0 / 64, 1e-12);
            }
        }
    }
}

// The explicit word Z^a R X^m H ... reduces to (frame) * gate with the same frame Alice tracks.
TEST(compiler, frames_agree_with_reduced_words) {
    using pauli::Letter;
    for (BlockKind kind : {BlockKind::H, BlockKind::S, BlockKind::SH, BlockKind::TH, BlockKind::TdgH, BlockKind::I}) {
        AngleProgram p;
        BlockRules rules = frozen_block(kind);
        append_block(p, 0, rules, rules.gate);
        const auto rounds = rounds_of(p);
        for (int bitsval = 0; bitsval < 64; bitsval++) {
            std::vector<int> a(3), m(3);
            for (int i = 0; i < 3; i++) {
                a[i] = (bitsval >> (2 * i)) & 1;
                m[i] = (bitsval >> (2 * i + 1)) & 1;
            }
            AliceLedger ledger(1);
            pauli::CliffordTWord word;
            for (int i = 0; i < 3; i++) {
                const Angle theta = ledger.angle_for(rounds[i]);
                std::vector<Letter> letters;
                if (a[i]) {
                    letters.push_back(Letter::Z);
                }
                for (Letter l : angle_letters(theta)) {
                    letters.push_back(l);
                }
                if (m[i]) {
                    letters.push_back(Letter::X);
                }
                letters.push_back(Letter::H);
                word = pauli::CliffordTWord(letters) * word;
                ledger.record_round(rounds[i], a[i], m[i]);
            }
            pauli::Reduction red = pauli::reduce(word);
            ASSERT_TRUE(pauli::same_class(red.canonical, rules.gate)) << block_name(kind);
            auto frame = pauli::match_left_pauli(word.matrix(), rules.gate);
            ASSERT_TRUE(frame.has_value());
            ASSERT_EQ(replay_frames(p, a, m)[0], (*frame)[0]) << block_name(kind) << " " << word.str();
        }
    }
}

TEST(compiler, two_qubit_synthesis_is_exact) {
    const auto &cal = graphs::unit_cell_calibration();
    Matrix swap = Matrix::Zero(4, 4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
    Matrix cnot = Matrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1;
    for (GateName g : {GateName::CZ, GateName::CNOT}) {
        const TwoQubitSynthesis &syn = two_qubit_synthesis(g);
        auto word = [](const std::vector<BlockKind> &ks) {
            Matrix m = Matrix::Identity(2, 2);
            for (BlockKind k : ks) {
                m = oracle_gate(k) * m;
            }
            return m;
        };
        auto kron = [](const Matrix &a, const Matrix &b) { return blinddelegate::qsim::kron(a, b); };
        Matrix w = kron(word(syn.post_a), word(syn.post_b)) * cal.entry(graphs::CellOp::CZCNOT).expected *
                   kron(word(syn.pre_a), word(syn.pre_b));
        Matrix fix = kron(syn.fix[0].matrix(), syn.fix[1].matrix());
        Matrix target = g == GateName::CZ ? cz : cnot;
        if (!syn.a_is_first) {
            target = swap * target * swap;
        }
        Matrix got = fix * w;
        cd phase = (target.adjoint() * got).trace() / 4.0;
        ASSERT_NEAR(std::abs(phase), 1.0, 1e-10);
        ASSERT_LT((got - phase * target).norm(), 1e-10);
    }
}

// Calibrated schedules replayed through the compiler give the catalog unitaries.
TEST(compiler, cell_replay_matches_catalog) {
    const auto &cal = graphs::unit_cell_calibration();
    qsim::Rng rng(33);
    for (const auto &entry : cal.entries) {
        AngleProgram p;
        p.num_wires = 2;
        append_cell(p, entry, cal.placement, 0, 1);
        for (int trial = 0; trial < 20; trial++) {
            qsim::StateVector psi = qsim::random_state(2, rng);
            OutcomeSource src = OutcomeSource::sampled(trial);
            RunResult r = run_protocol2(p, psi, {}, src);
            // Wire 0 is qubit 0 (low bit) while the catalog puts wire A high.
            Matrix swap = Matrix::Zero(4, 4);
            swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
            Eigen::VectorXcd want = swap * entry.expected * swap * testutil::vec(psi);
            ASSERT_NEAR(overlap(testutil::vec(corrected_output(r)), want), 1.0, 1e-10) << entry.name;
        }
    }
}

TEST(compiler, padding_hides_gate_count) {
    CompileOptions pad{2};
    AngleProgram h = compile(circuit_from_string("H 0\n"), pad);
    AngleProgram t = compile(circuit_from_string("T 0\n"), pad);
    ASSERT_EQ(h.num_rounds(), t.num_rounds());
    ASSERT_EQ(blocks_per_wire(h), std::vector<int>{2});
    AngleProgram two = compile(circuit_from_string("H 0\nT 0\n"), CompileOptions{4});
    ASSERT_EQ(blocks_per_wire(two), std::vector<int>{4});
    qsim::Rng rng(2);
    qsim::StateVector psi = qsim::random_state(1, rng);
    OutcomeSource src = OutcomeSource::sampled(3);
    RunResult r = run_protocol2(t, psi, {}, src);
    Eigen::VectorXcd want = T() * testutil::vec(psi);
    ASSERT_NEAR(overlap(testutil::vec(corrected_output(r)), want), 1.0, 1e-10);
}

TEST(compiler, validate_catches_bad_programs) {
    AngleProgram p;
    p.steps.emplace_back(RoundStep{0, qsim::kZero, 0, qsim::kZero});
    ASSERT_THROW(p.validate(), std::invalid_argument);
    AngleProgram q;
    q.steps.emplace_back(RoundStep{1, qsim::kZero, -1, qsim::kZero});
    ASSERT_THROW(q.validate(), std::invalid_argument);
    AngleProgram f;
    f.steps.emplace_back(RoundStep{0, qsim::kZero, -1, qsim::kZero});
    f.steps.emplace_back(FrameStep{{0}, {0}, {{PauliFrame::X()}}});
    ASSERT_THROW(f.validate(), std::invalid_argument);
}

TEST(compiler, frame_rules) {
    // x' = m xor z, z' = x xor a, plus Z when an odd multiple of pi/2 was flipped.
    for (PauliFrame f : pauli::kAllFrames) {
        for (int a = 0; a < 2; a++) {
            for (int m = 0; m < 2; m++) {
                PauliFrame g = round_frame_update(f, qsim::kZero, a, m);
                ASSERT_EQ(g.x, bool(m) != f.z);
                ASSERT_EQ(g.z, f.x != bool(a));
                PauliFrame s = round_frame_update(f, qsim::kHalfPi, a, m);
                ASSERT_EQ(s.z, g.z != bool(m));
            }
        }
    }
    std::vector<PauliFrame> frames = {PauliFrame::X(), PauliFrame::I()};
    bridge_frame_update(frames, 0, 1);
    ASSERT_EQ(frames[0], PauliFrame::X());
    ASSERT_EQ(frames[1], PauliFrame::Z());
    ASSERT_EQ(masked_angle(qsim::kMinusQuarterPi, PauliFrame::Z()), qsim::kQuarterPi);
    ASSERT_EQ(masked_angle(qsim::kMinusQuarterPi, PauliFrame::X()), qsim::kMinusQuarterPi);
    ASSERT_EQ(realized_angle(qsim::kQuarterPi, 1), qsim::kMinusQuarterPi);
    ASSERT_EQ(realized_angle(qsim::kHalfPi, 1), qsim::kHalfPi);
}
