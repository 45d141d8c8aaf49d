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
#include <string>
#include <vector>

#include "blinddelegate/adversary/strategy.hpp"
#include "blinddelegate/blindness/bob_view.hpp"
#include "blinddelegate/protocol/circuit.hpp"

namespace blinddelegate::blindness {

inline constexpr double kMarginalTol = 1e-12;
inline constexpr double kDistributionTol = 1e-9;
inline constexpr double kSampledTvTol = 0.01;

/// One report line. Negative indices print as '-'.
struct CheckLine {
    std::string check;
    int secret_i = -1;
    int secret_j = -1;
    int povm = -1;
    double max_dev = 0.0;
    bool pass = false;

    /// check=<name> secrets=<i>,<j> povm=<idx> max_dev=<float> pass=<bool>
    std::string format() const;
};

struct Report {
    std::vector<CheckLine> lines;

    bool all_pass() const;
    double max_deviation(const std::string &check) const;
    std::string to_string() const;
};

struct CertifyOptions {
    int n_povms = 4;
    std::uint64_t seed = 0;
    protocol::ChannelModel channel;
    Protocol2ViewOptions view;
};

/// Plan for a substituting Bob: Alice measures every qubit he does not keep,
/// in ascending order, with linear-cluster feed-forward. Throws
/// std::invalid_argument when the qubit count does not fit the angles.
protocol::MeasurementPlan substitute_plan(const adversary::SubstituteState &substitute,
                                          const std::vector<qsim::Angle> &angles);

/// Protocol 1: each secret is Alice's angle vector. Honest Bob prepares the
/// linear cluster one vertex longer than the vectors; a substituting Bob
/// hands over his state and Alice measures every qubit he does not keep.
/// Throws std::invalid_argument on fewer than two secrets, unequal lengths,
/// a substitute whose size does not fit, or the loss-signal strategy.
Report certify_b1_b2(const std::vector<std::vector<qsim::Angle>> &secrets, const adversary::AdversaryStrategy &bob,
                     const CertifyOptions &options = {});

/// Protocol 2: each secret is a circuit on |0...0>, compiled and padded to a
/// common block count. Only honest Bob applies here; the loss-signal device
/// is assessed by the attack scenarios.
Report certify_b1_b2(const std::vector<protocol::Circuit> &secrets, const adversary::AdversaryStrategy &bob,
                     const CertifyOptions &options = {});

/// Pairwise comparison of bob_view_protocol2_round over all eight angles.
Report round_view_report();

/// Runs every secret with sampled outcomes under one shared channel stream
/// and compares the loss-report sequences. Honest loss reports must not
/// depend on the secret.
Report loss_independence_report(const std::vector<protocol::Circuit> &secrets, const protocol::ChannelModel &channel,
                                int runs, std::uint64_t seed);

}  // namespace blinddelegate::blindness
