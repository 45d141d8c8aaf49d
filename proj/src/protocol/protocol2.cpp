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

#include "blinddelegate/protocol/protocol2.hpp"

#include <stdexcept>

#include "blinddelegate/errors.hpp"
#include "blinddelegate/qsim/gates.hpp"
#include "labeled_state.hpp"

namespace blinddelegate::protocol {

Link::Link(const ChannelModel &channel, const LinkOptions &options)
    : channel_(channel), options_(options), mask_rng_(options.mask_seed) {
}

Link::Delivery Link::deliver(int round, std::vector<Message> &messages) {
    MeasuringDevice *device = options_.device;
    for (int tries = 0; tries < channel_.model().retry_cap; tries++) {
        messages.push_back(Message::qubit_sent(round));
        const bool lost = channel_.transmit() == protocol::Delivery::Lost;
        if (options_.countermeasure) {
            // Reports depend only on b and the true loss; the device is
            // consulted only when Alice means to use the particle.
            const int b = qsim::random_bit(mask_rng_);
            if (b == 0 || lost) {
                messages.push_back(Message::lost_resend(round));
                continue;
            }
            const bool spoiled = device && device->fake_loss();
            messages.push_back(Message::arrived(round));
            return {tries, spoiled};
        }
        if (lost || (device && device->fake_loss())) {
            messages.push_back(Message::lost_resend(round));
            continue;
        }
        messages.push_back(Message::arrived(round));
        return {tries, false};
    }
    throw RetryCapExceeded("round " + std::to_string(round) + ": particle lost " +
                           std::to_string(channel_.model().retry_cap) + " times");
}

RoundOutput round2_step(const qsim::StateVector &reg, int wire, qsim::Angle theta, Link &link,
                        OutcomeSource &outcomes, int round) {
    const int n = reg.num_qubits();
    if (wire < 0 || wire >= n) {
        throw std::invalid_argument("wire out of range");
    }
    if (n + 2 > qsim::kMaxQubits) {
        throw CapacityExceeded("register too large for a protocol round");
    }
    RoundOutput out{0, 0, reg, {}, 0, false};
    const Link::Delivery d = link.deliver(round, out.messages);
    out.retransmissions = d.retransmissions;
    out.spoiled = d.spoiled;

    std::vector<int> labels(n);
    for (int i = 0; i < n; i++) {
        labels[i] = i;
    }
    const int alice = n;
    const int bob = n + 1;
    detail::LabeledState s(reg, labels);
    s.append(qsim::StateVector::bell_pair(), {alice, bob});

    if (d.spoiled) {
        // The device never measured; Alice's half decoheres unobserved.
        out.a = s.measure_z(alice, outcomes);
    } else {
        out.a = s.measure_rotated(alice, theta, outcomes);
        if (link.device()) {
            link.device()->observe(theta);
        }
    }
    s.apply(qsim::gates::CZ(), {wire, bob});
    out.m = s.measure_rotated(wire, qsim::kZero, outcomes);
    s.move_to(bob, wire);
    out.register_state = s.state();
    out.messages.push_back(Message::x_result(round, out.m));
    return out;
}

RunResult run_protocol2(const AngleProgram &program, const qsim::StateVector &input, const ChannelModel &channel,
                        OutcomeSource &outcomes, const LinkOptions &options) {
    program.validate();
    if (input.num_qubits() != program.num_wires) {
        throw std::invalid_argument("input state does not match the program's wires");
    }
    Link link(channel, options);
    AliceLedger ledger(program.num_wires);
    qsim::StateVector reg = input;
    RunResult result;
    int round = 0;
    for (const Step &step : program.steps) {
        if (const auto *r = std::get_if<RoundStep>(&step)) {
            round++;
            if (link.device()) {
                link.device()->next_round();
            }
            RoundOutput out = round2_step(reg, r->wire, ledger.angle_for(*r), link, outcomes, round);
            ledger.record_round(*r, out.a, out.m);
            reg = std::move(out.register_state);
            result.transcript.insert(result.transcript.end(), out.messages.begin(), out.messages.end());
            result.retransmission_count += out.retransmissions;
            result.spoiled_rounds += out.spoiled;
        } else if (const auto *b = std::get_if<BridgeStep>(&step)) {
            reg = qsim::apply_gate(reg, qsim::gates::CZ(), {b->wire_a, b->wire_b});
            ledger.apply(*b);
        } else {
            ledger.apply(std::get<FrameStep>(step));
        }
    }
    result.transcript.push_back(Message::done(round));
    result.output_state = reg;
    result.a_bits = ledger.a_bits();
    result.m_bits = ledger.m_bits();
    result.final_frames = ledger.frames();
    result.path_probability = outcomes.path_probability();
    return result;
}

qsim::StateVector corrected_output(const RunResult &result) {
    if (!result.output_state) {
        throw std::logic_error("run has no output register");
    }
    qsim::StateVector s = *result.output_state;
    for (int w = 0; w < static_cast<int>(result.final_frames.size()); w++) {
        const pauli::PauliFrame f = result.final_frames[w];
        if (f.x) {
            s = qsim::apply_gate(s, qsim::gates::X(), {w});
        }
        if (f.z) {
            s = qsim::apply_gate(s, qsim::gates::Z(), {w});
        }
    }
    return s;
}

}  // namespace blinddelegate::protocol
