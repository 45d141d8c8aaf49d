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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace blinddelegate::protocol {

enum class Direction { AliceToBob, BobToAlice };

enum class MessageKind { QubitSent, Arrived, LostResend, XResult, Done, TeleportResult };

/// QUBIT_SENT and TELEPORT_RESULT go Bob to Alice, ARRIVED / LOST_RESEND /
/// DONE go Alice to Bob. X_RESULT carries one bit, TELEPORT_RESULT two
/// (b1 in the high bit), every other kind none.
struct Message {
    int round = 0;
    Direction direction = Direction::AliceToBob;
    MessageKind kind = MessageKind::Done;
    std::optional<int> payload;

    static Message qubit_sent(int round);
    static Message arrived(int round);
    static Message lost_resend(int round);
    static Message x_result(int round, int m);
    static Message done(int round);
    static Message teleport_result(int round, int b1, int b2);

    /// Throws std::invalid_argument when direction or payload do not fit the kind.
    void validate() const;

    bool operator==(const Message &) const = default;
};

std::string kind_name(MessageKind kind);
std::string direction_name(Direction d);

/// r=<round> d=<A2B|B2A> k=<kind> p=<payload|->
std::string format_message(const Message &msg);
Message parse_message(const std::string &line);

struct TranscriptHeader {
    /// "1", "2" or "tp".
    std::string protocol = "2";
    std::uint64_t seed = 0;
    double loss = 0.0;
    bool operator==(const TranscriptHeader &) const = default;
};

struct Transcript {
    TranscriptHeader header;
    std::vector<Message> messages;
    bool operator==(const Transcript &) const = default;
};

/// Shortest round-tripping decimal form, so files are byte-stable.
std::string format_real(double x);

void write_transcript(std::ostream &out, const Transcript &t);
std::string transcript_to_string(const Transcript &t);
/// Throws ParseError with the line number.
Transcript read_transcript(std::istream &in);
Transcript transcript_from_string(const std::string &text);

/// Rounds never decrease along the transcript.
bool rounds_monotone(const std::vector<Message> &messages);

}  // namespace blinddelegate::protocol
