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

#include "blinddelegate/protocol/message.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::protocol {

namespace {

struct KindInfo {
    MessageKind kind;
    const char *name;
    Direction direction;
    int payload_bits;
};

constexpr KindInfo kKinds[] = {
    {MessageKind::QubitSent, "QUBIT_SENT", Direction::BobToAlice, 0},
    {MessageKind::Arrived, "ARRIVED", Direction::AliceToBob, 0},
    {MessageKind::LostResend, "LOST_RESEND", Direction::AliceToBob, 0},
    {MessageKind::XResult, "X_RESULT", Direction::BobToAlice, 1},
    {MessageKind::Done, "DONE", Direction::AliceToBob, 0},
    {MessageKind::TeleportResult, "TELEPORT_RESULT", Direction::BobToAlice, 2},
};

const KindInfo &info(MessageKind kind) {
    for (const auto &k : kKinds) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw std::logic_error("unknown message kind");
}

Message make(int round, MessageKind kind, std::optional<int> payload = std::nullopt) {
    Message m{round, info(kind).direction, kind, payload};
    m.validate();
    return m;
}

bool parse_int(const std::string &s, long long &out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::string field(const std::string &token, const std::string &key) {
    if (token.rfind(key + "=", 0) != 0) {
        throw std::invalid_argument("expected field '" + key + "='");
    }
    return token.substr(key.size() + 1);
}

}  // namespace

Message Message::qubit_sent(int round) {
    return make(round, MessageKind::QubitSent);
}

Message Message::arrived(int round) {
    return make(round, MessageKind::Arrived);
}

Message Message::lost_resend(int round) {
    return make(round, MessageKind::LostResend);
}

Message Message::x_result(int round, int m) {
    return make(round, MessageKind::XResult, m);
}

Message Message::done(int round) {
    return make(round, MessageKind::Done);
}

Message Message::teleport_result(int round, int b1, int b2) {
    return make(round, MessageKind::TeleportResult, (b1 << 1) | b2);
}

void Message::validate() const {
    const KindInfo &k = info(kind);
    if (round < 0) {
        throw std::invalid_argument("negative round");
    }
    if (direction != k.direction) {
        throw std::invalid_argument(std::string(k.name) + " has the wrong direction");
    }
    if (k.payload_bits == 0 && payload) {
        throw std::invalid_argument(std::string(k.name) + " carries no payload");
    }
    if (k.payload_bits > 0 && (!payload || *payload < 0 || *payload >= (1 << k.payload_bits))) {
        throw std::invalid_argument(std::string(k.name) + " needs a " + std::to_string(k.payload_bits) + "-bit payload");
    }
}

std::string kind_name(MessageKind kind) {
    return info(kind).name;
}

std::string direction_name(Direction d) {
    return d == Direction::AliceToBob ? "A2B" : "B2A";
}

std::string format_message(const Message &msg) {
    std::string p = msg.payload ? std::to_string(*msg.payload) : "-";
    return "r=" + std::to_string(msg.round) + " d=" + direction_name(msg.direction) + " k=" + kind_name(msg.kind) +
           " p=" + p;
}

Message parse_message(const std::string &line) {
    std::istringstream ls(line);
    std::string r, d, k, p, extra;
    if (!(ls >> r >> d >> k >> p) || (ls >> extra)) {
        throw std::invalid_argument("message needs exactly r= d= k= p= fields");
    }
    Message m;
    long long value = 0;
    if (!parse_int(field(r, "r"), value)) {
        throw std::invalid_argument("bad round");
    }
    m.round = static_cast<int>(value);
    std::string dir = field(d, "d");
    if (dir == "A2B") {
        m.direction = Direction::AliceToBob;
    } else if (dir == "B2A") {
        m.direction = Direction::BobToAlice;
    } else {
        throw std::invalid_argument("bad direction '" + dir + "'");
    }
    std::string kind = field(k, "k");
    bool known = false;
    for (const auto &ki : kKinds) {
        if (kind == ki.name) {
            m.kind = ki.kind;
            known = true;
        }
    }
    if (!known) {
        throw std::invalid_argument("unknown kind '" + kind + "'");
    }
    std::string payload = field(p, "p");
    if (payload != "-") {
        if (!parse_int(payload, value)) {
            throw std::invalid_argument("bad payload");
        }
        m.payload = static_cast<int>(value);
    }
    m.validate();
    return m;
}

std::string format_real(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) {
        throw std::logic_error("to_chars failed");
    }
    return std::string(buf, ptr);
}

void write_transcript(std::ostream &out, const Transcript &t) {
    out << "run protocol=" << t.header.protocol << " seed=" << t.header.seed << " loss=" << format_real(t.header.loss)
        << "\n";
    for (const Message &m : t.messages) {
        out << format_message(m) << "\n";
    }
}

std::string transcript_to_string(const Transcript &t) {
    std::ostringstream ss;
    write_transcript(ss, t);
    return ss.str();
}

Transcript read_transcript(std::istream &in) {
    Transcript t;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    auto fail = [&](const std::string &why) {
        throw ParseError("transcript line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        if (!have_header) {
            std::istringstream ls(line);
            std::string run, proto, seed, loss, extra;
            if (!(ls >> run >> proto >> seed >> loss) || (ls >> extra) || run != "run") {
                fail("expected 'run protocol= seed= loss=' header");
            }
            try {
                t.header.protocol = field(proto, "protocol");
                if (t.header.protocol != "1" && t.header.protocol != "2" && t.header.protocol != "tp") {
                    fail("protocol must be 1, 2 or tp");
                }
                const std::string s = field(seed, "seed");
                auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), t.header.seed);
                if (ec != std::errc() || ptr != s.data() + s.size()) {
                    fail("bad seed");
                }
                const std::string l = field(loss, "loss");
                auto [lptr, lec] = std::from_chars(l.data(), l.data() + l.size(), t.header.loss);
                if (lec != std::errc() || lptr != l.data() + l.size()) {
                    fail("bad loss");
                }
            } catch (const std::invalid_argument &e) {
                fail(e.what());
            }
            have_header = true;
            continue;
        }
        try {
            t.messages.push_back(parse_message(line));
        } catch (const std::invalid_argument &e) {
            fail(e.what());
        }
    }
    if (!have_header) {
        throw ParseError("transcript is empty");
    }
    return t;
}

Transcript transcript_from_string(const std::string &text) {
    std::istringstream ss(text);
    return read_transcript(ss);
}

bool rounds_monotone(const std::vector<Message> &messages) {
    for (std::size_t i = 1; i < messages.size(); i++) {
        if (messages[i].round < messages[i - 1].round) {
            return false;
        }
    }
    return true;
}

}  // namespace blinddelegate::protocol
