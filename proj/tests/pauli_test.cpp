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

#include <functional>

#include "blinddelegate/errors.hpp"
#include "blinddelegate/pauli/pauli.hpp"
#include "test_util.hpp"

using namespace blinddelegate;
using namespace blinddelegate::pauli;
using qsim::Angle;
using qsim::Matrix;

namespace {

// Products of letters computed without CliffordTWord::matrix.
Matrix brute_matrix(const std::vector<Letter> &letters) {
    Matrix m = Matrix::Identity(2, 2);
    for (Letter l : letters) {
        Matrix f;
        switch (l) {
            case Letter::H:
                f = testutil::H();
                break;
            case Letter::S:
                f = testutil::R(M_PI / 2);
                break;
            case Letter::Sdg:
                f = testutil::R(-M_PI / 2);
                break;
            case Letter::T:
                f = testutil::R(-M_PI / 4);
                break;
            case Letter::Tdg:
                f = testutil::R(M_PI / 4);
                break;
            case Letter::X:
                f = testutil::X();
                break;
            case Letter::Z:
                f = testutil::Z();
                break;
        }
        m = m * f;
    }
    return m;
}

void for_each_word(int max_len, const std::function<void(const std::vector<Letter> &)> &fn) {
    std::vector<Letter> w;
    std::function<void()> rec = [&] {
        if (!w.empty()) {
            fn(w);
        }
        if (static_cast<int>(w.size()) == max_len) {
            return;
        }
        for (int l = 0; l < 7; l++) {
            w.push_back(static_cast<Letter>(l));
            rec();
            w.pop_back();
        }
    };
    rec();
}

}  // namespace

TEST(frame, propagate_through_h) {
    ASSERT_EQ(propagate_through_H(PauliFrame::X()), PauliFrame::Z());
    ASSERT_EQ(propagate_through_H(PauliFrame::I()), PauliFrame::I());
    ASSERT_EQ(propagate_through_H(PauliFrame::XZ()), PauliFrame::XZ());
    for (PauliFrame p : kAllFrames) {
        Matrix lhs = testutil::H() * p.matrix();
        Matrix rhs = propagate_through_H(p).matrix() * testutil::H();
        ASSERT_TRUE(qsim::equal_up_to_phase(lhs, rhs, 1e-12));
    }
}

TEST(frame, propagate_through_r) {
    auto [f1, t1] = propagate_through_R(PauliFrame::X(), qsim::kHalfPi);
    ASSERT_EQ(f1, PauliFrame::X());
    ASSERT_EQ(t1, Angle(6));
    for (int k = 0; k < 8; k++) {
        ASSERT_EQ(propagate_through_R(PauliFrame::Z(), Angle(k)).second, Angle(k));
    }
    ASSERT_EQ(propagate_through_R(PauliFrame::I(), qsim::kMinusQuarterPi).second, qsim::kMinusQuarterPi);
    for (PauliFrame p : kAllFrames) {
        for (int k = 0; k < 8; k++) {
            auto [f, t] = propagate_through_R(p, Angle(k));
            Matrix lhs = testutil::R(k * M_PI / 4) * p.matrix();
            Matrix rhs = f.matrix() * testutil::R(t.k() * M_PI / 4);
            ASSERT_TRUE(qsim::equal_up_to_phase(lhs, rhs, 1e-12));
        }
    }
}

TEST(frame, xor_composition) {
    ASSERT_EQ(PauliFrame::X() ^ PauliFrame::Z(), PauliFrame::XZ());
    ASSERT_EQ(PauliFrame::XZ() ^ PauliFrame::XZ(), PauliFrame::I());
    ASSERT_EQ(PauliFrame::XZ().name(), "XZ");
}

TEST(frame, match_left_pauli_two_qubits) {
    Matrix cz = qsim::gates::CZ().matrix();
    std::vector<PauliFrame> p{PauliFrame::X(), PauliFrame::Z()};
    auto found = match_left_pauli(frames_matrix(p) * cz, cz);
    ASSERT_TRUE(found.has_value());
    ASSERT_EQ((*found)[0], PauliFrame::X());
    ASSERT_EQ((*found)[1], PauliFrame::Z());
    ASSERT_FALSE(match_left_pauli(qsim::gates::CNOT().matrix(), cz).has_value());
}

TEST(word, parse_and_print) {
    ASSERT_EQ(CliffordTWord::parse("S Tdg H").str(), "STdgH");
    ASSERT_EQ(CliffordTWord::parse("STdgH"), CliffordTWord::parse("S Tdg H"));
    ASSERT_EQ(CliffordTWord::parse("ST†H"), CliffordTWord::parse("STdgH"));
    ASSERT_TRUE(CliffordTWord::parse("I").empty());
    ASSERT_THROW(CliffordTWord::parse("SQ"), ParseError);
}

TEST(word, rightmost_acts_first) {
    // S H |0> = S |+>: the H acts first.
    Matrix v = CliffordTWord::parse("SH").matrix() * testutil::ket(1, 0);
    Matrix want = testutil::R(M_PI / 2) * testutil::H() * testutil::ket(1, 0);
    ASSERT_LT((v - want).norm(), 1e-12);
}

TEST(reduce, examples) {
    auto r1 = reduce(CliffordTWord::parse("HHH"));
    ASSERT_EQ(r1.frame, PauliFrame::I());
    ASSERT_EQ(r1.name, "H");
    auto r2 = reduce(CliffordTWord::parse("H SH SH"));
    ASSERT_EQ(r2.frame, PauliFrame::Z());
    ASSERT_EQ(r2.name, "S");
    auto r3 = reduce(CliffordTWord::parse("SH H TdgH"));
    ASSERT_EQ(r3.name, "TH");
}

TEST(reduce, soundness_exhaustive_to_length_6) {
    std::size_t count = 0;
    for_each_word(6, [&](const std::vector<Letter> &w) {
        auto r = reduce(CliffordTWord(w));
        Matrix got = r.frame.matrix() * r.canonical;
        ASSERT_TRUE(qsim::equal_up_to_phase(got, brute_matrix(w), 1e-12)) << CliffordTWord(w).str();
        count++;
    });
    ASSERT_EQ(count, 7u + 49 + 343 + 2401 + 16807 + 117649);
}

TEST(identities, all_ten_hold_exhaustively) {
    const auto &ids = composition_identities();
    ASSERT_EQ(ids.size(), 10u);
    for (const auto &id : ids) {
        auto check = check_identity(id.lhs, id.rhs);
        ASSERT_TRUE(check.holds) << id.name << " dev " << check.max_deviation;
        ASSERT_LT(check.max_deviation, 1e-10);
        std::size_t want = 1;
        for (const auto &f : id.lhs.factors) {
            want *= slot_values(f.slot).size();
        }
        ASSERT_EQ(check.assignments, want) << id.name;
    }
}

TEST(identities, names_round_trip) {
    ASSERT_EQ(composition_identities()[0].name, "(PH)(PH)(PH)=PH");
    ASSERT_EQ(FramedWord::parse("(PS)(PSTH)(P'H)").str(), "(PS)(PSTH)(P'H)");
    ASSERT_EQ(FramedWord::parse("(PS)(PSTdgH)(P''H)").factors[2].slot, PauliSlot::ZorXZ);
}

TEST(identities, false_relation_rejected) {
    ASSERT_FALSE(verify_identity(FramedWord::parse("(PH)(PH)(PH)"), CliffordTWord::parse("T")));
}

TEST(identities, slot_restrictions_are_needed) {
    // Without the restriction on the last slot, the T relations break.
    ASSERT_FALSE(verify_identity(FramedWord::parse("(PS)(PSTH)(PH)"), CliffordTWord::parse("T")));
    ASSERT_FALSE(verify_identity(FramedWord::parse("(PS)(PSTdgH)(PH)"), CliffordTWord::parse("T")));
    // The complementary restriction gives the other class.
    ASSERT_FALSE(verify_identity(FramedWord::parse("(PS)(PSTH)(P''H)"), CliffordTWord::parse("T")));
}

TEST(propagation, agrees_with_reduce_to_length_4) {
    for_each_word(4, [&](const std::vector<Letter> &w) {
        CliffordTWord word(w);
        for (PauliFrame p : kAllFrames) {
            auto [p2, word2] = propagate_through_word(word, p);
            Matrix lhs = word.matrix() * p.matrix();
            Matrix rhs = p2.matrix() * word2.matrix();
            ASSERT_TRUE(qsim::equal_up_to_phase(lhs, rhs, 1e-12)) << word.str() << " " << p.name();
            auto ra = reduce(word * CliffordTWord::from_frame(p));
            auto rb = reduce(CliffordTWord::from_frame(p2) * word2);
            ASSERT_TRUE(same_class(ra.canonical, rb.canonical));
            ASSERT_TRUE(qsim::equal_up_to_phase(ra.frame.matrix() * ra.canonical, rb.frame.matrix() * rb.canonical, 1e-12));
        }
    });
}
