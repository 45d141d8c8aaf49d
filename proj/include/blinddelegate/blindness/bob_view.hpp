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
#include <map>
#include <string>
#include <vector>

#include "blinddelegate/blindness/povm.hpp"
#include "blinddelegate/protocol/channel.hpp"
#include "blinddelegate/protocol/message.hpp"
#include "blinddelegate/protocol/program.hpp"
#include "blinddelegate/protocol/protocol1.hpp"
#include "blinddelegate/qsim/density_matrix.hpp"

namespace blinddelegate::blindness {

using TranscriptDist = std::map<std::string, double>;

/// Everything Bob holds after a run, averaged over what only Alice knows.
struct BobView {
    /// Bob's quantum state averaged over all transcripts.
    qsim::DensityMatrix marginal;
    /// Probability of each classical transcript (messages joined by newlines).
    TranscriptDist transcript_dist;
    /// Unnormalized Bob state per transcript. Empty for sampled views.
    std::map<std::string, qsim::Matrix> conditional;
    /// False when transcript_dist is a sample estimate.
    bool exact = true;

    /// Throws std::invalid_argument if probabilities do not sum to 1 within 1e-12
    /// (exact views only) or the conditional states disagree with them.
    void validate() const;
};

std::string transcript_key(const std::vector<protocol::Message> &messages);

/// Protocol 1 on an arbitrary joint state: Alice measures the plan's vertices
/// (qubit indices of `joint`) with feed-forward, Bob keeps the rest. The
/// marginal is the sum over every outcome branch of Bob's unnormalized state.
BobView bob_view_protocol1(const qsim::DensityMatrix &joint, const protocol::MeasurementPlan &plan);
/// Alice measures qubits 0..k-1 at `alice_angles` with linear-cluster feed-forward.
BobView bob_view_protocol1(const qsim::DensityMatrix &joint, const std::vector<qsim::Angle> &alice_angles);

/// Bob's half of a Bell pair after Alice measures the other half at theta,
/// averaged over her outcome.
qsim::DensityMatrix bob_view_protocol2_round(qsim::Angle theta);

struct Protocol2ViewOptions {
    /// Enumerate every (a, m) branch when 2 * rounds is at most this.
    int max_exact_bits = 12;
    /// Sampled runs otherwise.
    int trials = 100000;
    std::uint64_t seed = 0;
};

/// Protocol 2 run of `program` on |0...0>: Bob's register and transcript
/// (loss reports, X results, DONE). Loss follows `channel`; an exact view
/// replays the same channel stream on every branch.
BobView bob_view_protocol2(const protocol::AngleProgram &program, const protocol::ChannelModel &channel,
                           const Protocol2ViewOptions &options = {});

/// P(m_r = 1) for every round r, by exact enumeration. Needs 2 * rounds <= 20.
std::vector<double> m_bit_probabilities(const protocol::AngleProgram &program,
                                        const protocol::ChannelModel &channel);

/// p_j = Tr(Pi_j marginal). Throws std::invalid_argument on a dimension mismatch.
std::vector<double> povm_distribution(const BobView &view, const Povm &povm);

/// Largest entrywise difference of the marginals.
double marginal_deviation(const BobView &a, const BobView &b);
/// Largest probability difference over the union of transcripts.
double transcript_deviation(const BobView &a, const BobView &b);
/// Total variation distance between the transcript distributions.
double transcript_tv(const BobView &a, const BobView &b);
/// Largest entrywise difference of the per-transcript states.
double conditional_deviation(const BobView &a, const BobView &b);
/// Largest |p(t, j) - p'(t, j)| with p(t, j) = Tr(Pi_j rho_t). Views without
/// conditional states fall back to the marginal distribution.
double povm_deviation(const BobView &a, const BobView &b, const Povm &povm);

}  // namespace blinddelegate::blindness
