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

#include "blinddelegate/errors.hpp"
#include "blinddelegate/protocol/channel.hpp"
#include "blinddelegate/protocol/circuit.hpp"
#include "blinddelegate/protocol/message.hpp"
#include "blinddelegate/protocol/protocol2.hpp"
#include "test_util.hpp"

using namespace blinddelegate;
using namespace blinddelegate::protocol;
using testutil::Matrix;

TEST(channel, lossless_always_arrives) {
    Channel ch({0.0, 3});
    for (int i = 0; i < 1000; i++) {
        ASSERT_EQ(ch.transmit(), Delivery::Arrived);
    }
    ASSERT_EQ(ch.deliver(), 0);
}

TEST(channel, total_loss_hits_retry_cap) {
    Channel ch({1.0, 3, 100});
    ASSERT_THROW(ch.deliver(), RetryCapExceeded);
    Link link({1.0, 3, 100}, {});
    std::vector<Message> messages;
    ASSERT_THROW(link.deliver(1, messages), RetryCapExceeded);
    ASSERT_EQ(messages.size(), 200u);
    for (std::size_t i = 0; i < messages.size(); i++) {
        ASSERT_EQ(messages[i].kind, i % 2 ? MessageKind::LostResend : MessageKind::QubitSent);
    }
}

TEST(channel, loss_rate_concentrates) {
    Channel ch({0.5, 11});
    int lost = 0;
    const int n = 10000;
    for (int i = 0; i < n; i++) {
        lost += ch.transmit() == Delivery::Lost;
    }
    ASSERT_NEAR(double(lost) / n, 0.5, 0.02);
}

TEST(channel, seeded_and_validated) {
    Channel a({0.3, 5}), b({0.3, 5});
    for (int i = 0; i < 200; i++) {
        ASSERT_EQ(a.transmit(), b.transmit());
    }
    ASSERT_THROW(Channel({1.5, 0}), std::invalid_argument);
    ASSERT_THROW(Channel({-0.1, 0}), std::invalid_argument);
    ASSERT_THROW(Channel({0.1, 0, 0}), std::invalid_argument);
}

TEST(message, directions_and_payloads) {
    ASSERT_EQ(Message::qubit_sent(1).direction, Direction::BobToAlice);
    ASSERT_EQ(Message::lost_resend(1).direction, Direction::AliceToBob);
    ASSERT_EQ(Message::arrived(1).direction, Direction::AliceToBob);
    ASSERT_EQ(*Message::x_result(2, 1).payload, 1);
    ASSERT_EQ(*Message::teleport_result(2, 1, 0).payload, 2);
    ASSERT_THROW(Message::x_result(1, 2), std::invalid_argument);
    Message wrong{1, Direction::BobToAlice, MessageKind::LostResend, std::nullopt};
    ASSERT_THROW(wrong.validate(), std::invalid_argument);
    Message missing{1, Direction::BobToAlice, MessageKind::XResult, std::nullopt};
    ASSERT_THROW(missing.validate(), std::invalid_argument);
    Message extra{1, Direction::AliceToBob, MessageKind::Arrived, 0};
    ASSERT_THROW(extra.validate(), std::invalid_argument);
}

TEST(message, line_format) {
    ASSERT_EQ(format_message(Message::x_result(3, 1)), "r=3 d=B2A k=X_RESULT p=1");
    ASSERT_EQ(format_message(Message::lost_resend(4)), "r=4 d=A2B k=LOST_RESEND p=-");
    for (const Message &m : {Message::qubit_sent(1), Message::arrived(1), Message::x_result(1, 0), Message::done(9),
                             Message::teleport_result(2, 1, 1)}) {
        ASSERT_EQ(parse_message(format_message(m)), m);
    }
    ASSERT_THROW(parse_message("r=1 d=A2B k=QUBIT_SENT p=-"), std::invalid_argument);
    ASSERT_THROW(parse_message("r=1 d=B2A k=NOPE p=-"), std::invalid_argument);
    ASSERT_THROW(parse_message("r=1 d=B2A k=QUBIT_SENT"), std::invalid_argument);
}

TEST(message, transcript_round_trip) {
    Transcript t{{"tp", 18446744073709551615ull, 0.3}, {Message::qubit_sent(1), Message::arrived(1)}};
    const std::string text = transcript_to_string(t);
    ASSERT_EQ(text.substr(0, text.find('\n')), "run protocol=tp seed=18446744073709551615 loss=0.3");
    ASSERT_EQ(transcript_from_string(text), t);
    ASSERT_EQ(format_real(0.1 + 0.2), "0.30000000000000004");
    ASSERT_EQ(format_real(0), "0");
}

TEST(message, transcript_errors_name_the_line) {
    try {
        transcript_from_string("run protocol=2 seed=1 loss=0\nr=1 d=A2B k=QUBIT_SENT p=-\n");
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    ASSERT_THROW(transcript_from_string("run protocol=3 seed=1 loss=0\n"), ParseError);
    ASSERT_THROW(transcript_from_string(""), ParseError);
}

TEST(message, rounds_monotone) {
    ASSERT_TRUE(rounds_monotone({Message::qubit_sent(1), Message::arrived(1), Message::qubit_sent(2)}));
    ASSERT_FALSE(rounds_monotone({Message::qubit_sent(2), Message::qubit_sent(1)}));
}

TEST(circuit, parse_file_format) {
    Circuit c = circuit_from_string("# demo\nH 0\nSDG 1   # trailing comment\n\nCNOT 0 1\nTDG 0\n");
    ASSERT_EQ(c.num_wires, 2);
    ASSERT_EQ(c.gates.size(), 4u);
    ASSERT_EQ(c.gates[1].name, GateName::Sdg);
    ASSERT_EQ(c.gates[2].wire2, 1);
    ASSERT_EQ(circuit_from_string(circuit_to_string(c)), c);
}

TEST(circuit, parse_errors) {
    ASSERT_THROW(circuit_from_string("RX 0\n"), ParseError);
    ASSERT_THROW(circuit_from_string("CZ 0\n"), ParseError);
    ASSERT_THROW(circuit_from_string("CZ 1 1\n"), ParseError);
    ASSERT_THROW(circuit_from_string("H 0 1\n"), ParseError);
    ASSERT_THROW(circuit_from_string("H -1\n"), ParseError);
    ASSERT_THROW(read_circuit_file("/nonexistent/c.txt"), ParseError);
    try {
        circuit_from_string("H 0\nFOO 0\n");
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_NE(std::string(e.what()).find("line 2"), std::string::npos);
        ASSERT_NE(std::string(e.what()).find("FOO"), std::string::npos);
    }
}

TEST(circuit, reference_simulation_matches_matrices) {
    Matrix cnot = Matrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
    Matrix s = testutil::R(M_PI / 2);
    Matrix t = testutil::R(-M_PI / 4);
    qsim::Rng rng(4);
    Circuit c = circuit_from_string("H 0\nCNOT 0 1\nT 1\nSDG 0\nX 1\nCNOT 1 0\nZ 0\n");
    qsim::StateVector in = qsim::random_state(2, rng);
    Eigen::VectorXcd v = testutil::vec(in);
    v = testutil::embed1(testutil::H(), 0, 2) * v;
    v = testutil::embed2(cnot, 0, 1, 2) * v;
    v = testutil::embed1(t, 1, 2) * v;
    v = testutil::embed1(s.adjoint(), 0, 2) * v;
    v = testutil::embed1(testutil::X(), 1, 2) * v;
    v = testutil::embed2(cnot, 1, 0, 2) * v;
    v = testutil::embed1(testutil::Z(), 0, 2) * v;
    ASSERT_LT((testutil::vec(simulate_circuit(c, in)) - v).norm(), 1e-12);
}

TEST(circuit, random_circuits_respect_width) {
    qsim::Rng rng(9);
    for (int i = 0; i < 100; i++) {
        Circuit c = random_circuit(1, 4, rng);
        for (const Gate &g : c.gates) {
            ASSERT_FALSE(is_two_qubit(g.name));
        }
    }
    bool saw_two = false;
    for (int i = 0; i < 100; i++) {
        for (const Gate &g : random_circuit(2, 4, rng).gates) {
            saw_two = saw_two || is_two_qubit(g.name);
        }
    }
    ASSERT_TRUE(saw_two);
}
