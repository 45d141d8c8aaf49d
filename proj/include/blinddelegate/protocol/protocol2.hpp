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
#include <optional>
#include <vector>

#include "blinddelegate/pauli/frame.hpp"
#include "blinddelegate/protocol/channel.hpp"
#include "blinddelegate/protocol/message.hpp"
#include "blinddelegate/protocol/outcomes.hpp"
#include "blinddelegate/protocol/program.hpp"
#include "blinddelegate/qsim/state_vector.hpp"

namespace blinddelegate::protocol {

/// The measuring device in Alice's lab. Bob may have built it.
class MeasuringDevice {
   public:
    virtual ~MeasuringDevice() = default;
    /// A new round (particle) starts.
    virtual void next_round() {
    }
    /// The device is asked to detect a particle that did arrive; true means
    /// it claims the particle was lost.
    virtual bool fake_loss() = 0;
    /// Alice measured through the device at theta.
    virtual void observe(qsim::Angle theta) = 0;
};

struct LinkOptions {
    /// Alice's random-bit masking of loss reports.
    bool countermeasure = false;
    /// Stream for Alice's masking bits.
    std::uint64_t mask_seed = 0;
    MeasuringDevice *device = nullptr;
};

/// Bell halves travelling Bob to Alice: loss, Alice's reports, retries.
class Link {
   public:
    Link(const ChannelModel &channel, const LinkOptions &options);

    struct Delivery {
        int retransmissions = 0;
        /// Alice reported ARRIVED but her device never measured the particle.
        bool spoiled = false;
    };

    /// Runs the send/report loop for one particle, appending its messages.
    /// Throws RetryCapExceeded after retry_cap transmissions.
    Delivery deliver(int round, std::vector<Message> &messages);

    MeasuringDevice *device() const {
        return options_.device;
    }

   private:
    Channel channel_;
    LinkOptions options_;
    qsim::Rng mask_rng_;
};

struct RoundOutput {
    int a = 0;
    int m = 0;
    qsim::StateVector register_state;
    std::vector<Message> messages;
    int retransmissions = 0;
    bool spoiled = false;
};

/// One Protocol 2 round on `wire`: Bell pair, lossy delivery, Alice's
/// measurement at theta (outcome a), Bob's CZ and X measurement (outcome m).
/// The register's wire then holds Z^a R_theta X^m H of its old state.
RoundOutput round2_step(const qsim::StateVector &reg, int wire, qsim::Angle theta, Link &link,
                        OutcomeSource &outcomes, int round);

struct RunResult {
    /// Protocol 2: Bob's register. Protocol 1: Alice's unmeasured vertices, if any.
    std::optional<qsim::StateVector> output_state;
    std::vector<int> a_bits;
    std::vector<int> m_bits;
    /// Protocol 1 and teleport variant: raw and byproduct-corrected outcomes in plan order.
    std::vector<int> raw_outcomes;
    std::vector<int> corrected_outcomes;
    std::vector<Message> transcript;
    std::vector<pauli::PauliFrame> final_frames;
    int retransmission_count = 0;
    int spoiled_rounds = 0;
    double path_probability = 1.0;
};

/// Runs every step of the program. The result's register equals
/// (final frames) * circuit(input) up to global phase for honest runs.
RunResult run_protocol2(const AngleProgram &program, const qsim::StateVector &input, const ChannelModel &channel,
                        OutcomeSource &outcomes, const LinkOptions &link = {});

/// Register with Alice's final frames undone.
qsim::StateVector corrected_output(const RunResult &result);

}  // namespace blinddelegate::protocol
