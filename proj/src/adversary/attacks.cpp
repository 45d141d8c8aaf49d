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

#include "blinddelegate/adversary/attacks.hpp"

#include <cmath>
#include <stdexcept>

#include "blinddelegate/adversary/evil_device.hpp"
#include "blinddelegate/adversary/mutual_information.hpp"
#include "blinddelegate/blindness/certify.hpp"
#include "blinddelegate/qsim/random.hpp"

namespace blinddelegate::adversary {

namespace {

constexpr int kDigits = 8;

double log_likelihood(int run, int k, double p) {
    if (run < k) {
        return -INFINITY;
    }
    const int extra = run - k;
    if (extra > 0 && p <= 0) {
        return -INFINITY;
    }
    if (p >= 1) {
        return -INFINITY;
    }
    const double log_binom = std::lgamma(run + 1.0) - std::lgamma(k + 1.0) - std::lgamma(extra + 1.0);
    return log_binom + (k + 1) * std::log1p(-p) + (extra > 0 ? extra * std::log(p) : 0.0);
}

std::string loss_reports(const std::vector<protocol::Message> &transcript) {
    std::string out;
    for (const protocol::Message &m : transcript) {
        if (m.kind == protocol::MessageKind::LostResend) {
            out += std::to_string(m.round) + "L";
        } else if (m.kind == protocol::MessageKind::Arrived) {
            out += std::to_string(m.round) + "A";
        }
    }
    return out;
}

}  // namespace

protocol::AngleProgram digit_program(int k) {
    protocol::AngleProgram p;
    p.num_wires = 1;
    p.steps.push_back(protocol::RoundStep{0, qsim::Angle(k), -1, qsim::Angle(k)});
    p.steps.push_back(protocol::RoundStep{0, qsim::kZero, -1, qsim::kZero});
    return p;
}

int decode_digit(int leading, double loss_prob) {
    int best = kDigits - 1;
    double best_ll = -INFINITY;
    for (int k = 0; k < kDigits; k++) {
        const double ll = log_likelihood(leading, k, loss_prob);
        // Exact ties happen, e.g. L = 9 at p = 0.3; keep the smaller digit.
        if (ll > best_ll + 1e-12) {
            best_ll = ll;
            best = k;
        }
    }
    return best;
}

int leading_losses(const std::vector<protocol::Message> &transcript, int round) {
    int run = 0;
    for (const protocol::Message &m : transcript) {
        if (m.round != round) {
            continue;
        }
        if (m.kind == protocol::MessageKind::Arrived) {
            break;
        }
        run += m.kind == protocol::MessageKind::LostResend;
    }
    return run;
}

EvilDeviceRun run_with_evil_device(const protocol::AngleProgram &program, bool countermeasure,
                                   const protocol::ChannelModel &channel, std::uint64_t seed,
                                   bool fresh_device_per_round) {
    if (program.num_rounds() < 2) {
        throw std::invalid_argument("the attack needs at least two rounds");
    }
    EvilDevice device(fresh_device_per_round);
    protocol::LinkOptions link{countermeasure, qsim::derive_seed(seed, 1), &device};
    protocol::OutcomeSource outcomes = protocol::OutcomeSource::sampled(qsim::derive_seed(seed, 0));
    EvilDeviceRun run;
    run.result =
        protocol::run_protocol2(program, qsim::StateVector::zero(program.num_wires), channel, outcomes, link);
    run.secret = device.first_digit().value_or(-1);
    run.bob_guess = decode_digit(leading_losses(run.result.transcript, 2), channel.loss_prob);
    run.success = run.secret >= 0 && run.bob_guess == run.secret;
    return run;
}

blindness::BobView run_with_substituted_state(const SubstituteState &substitute,
                                              const std::vector<qsim::Angle> &alice_angles) {
    return blindness::bob_view_protocol1(substitute.state, blindness::substitute_plan(substitute, alice_angles));
}

std::vector<double> honest_run_length_law(bool countermeasure, double loss_prob, int max_len) {
    const double q = countermeasure ? 0.5 + 0.5 * loss_prob : loss_prob;
    std::vector<double> law(max_len + 1);
    double tail = 1.0;
    for (int l = 0; l < max_len; l++) {
        law[l] = std::pow(q, l) * (1 - q);
        tail -= law[l];
    }
    law[max_len] = tail;
    return law;
}

AttackStats attack_experiment(bool countermeasure, double loss_prob, int trials, std::uint64_t seed,
                              bool fresh_device_per_round) {
    if (trials < 1) {
        throw std::invalid_argument("attack experiment needs trials >= 1");
    }
    constexpr int kMaxLen = 16;
    qsim::Rng digits(qsim::derive_seed(seed, 0));
    std::vector<std::pair<int, std::string>> samples;
    std::vector<std::vector<int>> runs(kDigits, std::vector<int>(kMaxLen + 1, 0));
    std::vector<int> per_digit(kDigits, 0);
    int successes = 0;
    long transmissions = 0;
    long particles = 0;
    for (int t = 0; t < trials; t++) {
        const int k = static_cast<int>(digits() % kDigits);
        const std::uint64_t trial_seed = qsim::derive_seed(seed, static_cast<std::uint64_t>(t) + 1);
        protocol::ChannelModel ch{loss_prob, qsim::derive_seed(trial_seed, 2)};
        EvilDeviceRun run = run_with_evil_device(digit_program(k), countermeasure, ch, trial_seed,
                                                 fresh_device_per_round);
        successes += run.success;
        samples.emplace_back(k, loss_reports(run.result.transcript));
        const int rounds = static_cast<int>(run.result.m_bits.size());
        transmissions += rounds + run.result.retransmission_count;
        particles += rounds;
        runs[k][std::min(leading_losses(run.result.transcript, 2), kMaxLen)]++;
        per_digit[k]++;
    }
    AttackStats stats;
    stats.trials = trials;
    stats.success_rate = static_cast<double>(successes) / trials;
    stats.transmissions_per_particle = static_cast<double>(transmissions) / particles;
    stats.mutual_information = trials >= 100 ? estimate_mutual_information(samples).bits : 0.0;
    const std::vector<double> law = honest_run_length_law(countermeasure, loss_prob, kMaxLen);
    for (int k = 0; k < kDigits; k++) {
        if (per_digit[k] == 0) {
            continue;
        }
        double tv = 0;
        for (int l = 0; l <= kMaxLen; l++) {
            tv += std::abs(static_cast<double>(runs[k][l]) / per_digit[k] - law[l]);
        }
        stats.max_tv_to_honest = std::max(stats.max_tv_to_honest, tv / 2);
    }
    return stats;
}

}  // namespace blinddelegate::adversary
