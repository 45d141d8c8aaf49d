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
#include <vector>

#include "blinddelegate/adversary/strategy.hpp"
#include "blinddelegate/blindness/bob_view.hpp"
#include "blinddelegate/protocol/program.hpp"
#include "blinddelegate/protocol/protocol2.hpp"

namespace blinddelegate::adversary {

/// One wire, two rounds: Alice first measures at k pi/4, then at 0.
protocol::AngleProgram digit_program(int k);

/// Bob's decoder: the most likely digit in 0..7 given the run of leading
/// LOST_RESEND reports in round 2 and the known loss probability. Each
/// arrival before the last one was faked, so P(L | k) = C(L, k) (1-p)^(k+1) p^(L-k).
/// Ties go to the smaller digit; an impossible L decodes to 7.
int decode_digit(int leading_losses, double loss_prob);

/// Number of LOST_RESEND reports in `round` before its first ARRIVED.
int leading_losses(const std::vector<protocol::Message> &transcript, int round);

struct EvilDeviceRun {
    /// Digit the device captured, or -1 if it never saw a measurement.
    int secret = -1;
    int bob_guess = -1;
    bool success = false;
    protocol::RunResult result;
};

/// Runs `program` (at least two rounds) with the loss-signalling device in
/// Alice's lab and lets Bob decode the first angle from round 2's reports.
EvilDeviceRun run_with_evil_device(const protocol::AngleProgram &program, bool countermeasure,
                                   const protocol::ChannelModel &channel, std::uint64_t seed,
                                   bool fresh_device_per_round = false);

/// Bob's view when he hands Alice part of `substitute` for Protocol 1.
/// Throws std::invalid_argument if the qubit counts do not fit the angles.
blindness::BobView run_with_substituted_state(const SubstituteState &substitute,
                                              const std::vector<qsim::Angle> &alice_angles);

struct AttackStats {
    int trials = 0;
    /// Fraction of runs where Bob decoded the digit.
    double success_rate = 0.0;
    /// Miller-Madow estimate of I(k; loss reports) in bits.
    double mutual_information = 0.0;
    /// Transmissions per particle, retries included.
    double transmissions_per_particle = 0.0;
    /// Largest total variation distance, over k, between the empirical
    /// distribution of round 2's leading-loss run and its exact honest law.
    double max_tv_to_honest = 0.0;
};

/// `trials` runs of digit_program with k uniform in 0..7, each with its own
/// seeded streams. The transcript used for mutual information is the
/// sequence of loss reports (LOST_RESEND / ARRIVED with their rounds).
AttackStats attack_experiment(bool countermeasure, double loss_prob, int trials, std::uint64_t seed,
                              bool fresh_device_per_round = false);

/// Exact law of round 2's leading-loss run when reports carry no signal:
/// P(L = l) = q^l (1 - q) for l < max_len, with q the per-transmission
/// LOST probability. The last entry holds the tail mass.
std::vector<double> honest_run_length_law(bool countermeasure, double loss_prob, int max_len);

}  // namespace blinddelegate::adversary
