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

#include "blinddelegate/blindness/bob_view.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "blinddelegate/errors.hpp"
#include "blinddelegate/protocol/outcomes.hpp"
#include "blinddelegate/protocol/protocol2.hpp"
#include "blinddelegate/qsim/random.hpp"

namespace blinddelegate::blindness {

namespace {

double max_abs(const qsim::Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

qsim::DensityMatrix normalized(int num_qubits, const qsim::Matrix &m) {
    const double tr = m.trace().real();
    if (tr <= 0) {
        throw std::invalid_argument("Bob's state has zero weight");
    }
    qsim::Matrix h = (m + m.adjoint()) / (2.0 * tr);
    return qsim::DensityMatrix(num_qubits, h);
}

struct Protocol1Branches {
    const protocol::MeasurementPlan &plan;
    std::vector<int> corrected;  // by qubit of the joint state
    qsim::Matrix acc;

    // `labels[i]` is the joint-state qubit stored at position i of `rho`.
    void run(const qsim::Matrix &rho, std::vector<int> labels, std::size_t step_index) {
        if (step_index == plan.steps.size()) {
            acc += rho;
            return;
        }
        const protocol::VertexMeasurement &step = plan.steps[step_index];
        int x = 0;
        for (int v : step.x_deps) {
            x ^= corrected.at(v);
        }
        const qsim::Angle theta = x ? -step.angle : step.angle;
        const auto pos = std::find(labels.begin(), labels.end(), step.vertex) - labels.begin();
        std::vector<int> rest = labels;
        rest.erase(rest.begin() + pos);
        for (int s = 0; s < 2; s++) {
            qsim::Matrix post = qsim::project_rotated_unnormalized(rho, static_cast<int>(labels.size()),
                                                                   static_cast<int>(pos), theta, s);
            int z = s;
            for (int v : step.z_deps) {
                z ^= corrected.at(v);
            }
            corrected[step.vertex] = z;
            run(post, rest, step_index + 1);
        }
        corrected[step.vertex] = -1;
    }
};

// Calls `visit` on every outcome branch of a Protocol 2 run on |0...0>.
void enumerate_protocol2(const protocol::AngleProgram &program, const protocol::ChannelModel &channel,
                         int max_bits, const std::function<void(const protocol::RunResult &)> &visit) {
    const int bits = 2 * program.num_rounds();
    if (bits > max_bits) {
        throw std::invalid_argument("too many outcome bits to enumerate");
    }
    const qsim::StateVector input = qsim::StateVector::zero(program.num_wires);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); code++) {
        std::vector<int> script(bits);
        for (int i = 0; i < bits; i++) {
            script[i] = static_cast<int>((code >> i) & 1);
        }
        protocol::OutcomeSource outcomes = protocol::OutcomeSource::scripted(script);
        try {
            visit(protocol::run_protocol2(program, input, channel, outcomes));
        } catch (const DegenerateMeasurement &) {
            // zero-weight branch
        }
    }
}

}  // namespace

void BobView::validate() const {
    double total = 0;
    for (const auto &[key, p] : transcript_dist) {
        if (p < 0) {
            throw std::invalid_argument("negative transcript probability");
        }
        total += p;
    }
    if (exact && std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("transcript probabilities do not sum to 1");
    }
    for (const auto &[key, rho] : conditional) {
        auto it = transcript_dist.find(key);
        if (it == transcript_dist.end() || std::abs(rho.trace().real() - it->second) > 1e-12) {
            throw std::invalid_argument("conditional state disagrees with transcript probability");
        }
    }
}

std::string transcript_key(const std::vector<protocol::Message> &messages) {
    std::string out;
    for (const protocol::Message &m : messages) {
        out += protocol::format_message(m);
        out += '\n';
    }
    return out;
}

BobView bob_view_protocol1(const qsim::DensityMatrix &joint, const protocol::MeasurementPlan &plan) {
    const int n = joint.num_qubits();
    std::set<int> alice;
    for (const protocol::VertexMeasurement &s : plan.steps) {
        if (s.vertex < 0 || s.vertex >= n || !alice.insert(s.vertex).second) {
            throw std::invalid_argument("plan does not match the joint state");
        }
        for (const auto *deps : {&s.x_deps, &s.z_deps}) {
            for (int d : *deps) {
                if (!alice.count(d) || d == s.vertex) {
                    throw std::invalid_argument("plan depends on a qubit not measured yet");
                }
            }
        }
    }
    const int bob_qubits = n - static_cast<int>(alice.size());
    std::vector<int> labels(n);
    for (int q = 0; q < n; q++) {
        labels[q] = q;
    }
    const int bob_dim = 1 << bob_qubits;
    Protocol1Branches branches{plan, std::vector<int>(n, -1), qsim::Matrix::Zero(bob_dim, bob_dim)};
    branches.run(joint.matrix(), labels, 0);

    std::vector<protocol::Message> sent;
    for (std::size_t r = 1; r <= plan.steps.size(); r++) {
        sent.push_back(protocol::Message::qubit_sent(static_cast<int>(r)));
    }
    return BobView{normalized(bob_qubits, branches.acc), {{transcript_key(sent), 1.0}}, {}, true};
}

BobView bob_view_protocol1(const qsim::DensityMatrix &joint, const std::vector<qsim::Angle> &alice_angles) {
    if (static_cast<int>(alice_angles.size()) > joint.num_qubits()) {
        throw std::invalid_argument("more angles than qubits");
    }
    return bob_view_protocol1(joint, protocol::linear_cluster_plan(alice_angles));
}

qsim::DensityMatrix bob_view_protocol2_round(qsim::Angle theta) {
    const qsim::DensityMatrix pair = qsim::DensityMatrix::from_pure(qsim::StateVector::bell_pair());
    qsim::Matrix acc = qsim::Matrix::Zero(2, 2);
    for (int a = 0; a < 2; a++) {
        // Alice holds qubit 0.
        acc += qsim::project_rotated_unnormalized(pair.matrix(), 2, 0, theta, a);
    }
    return normalized(1, acc);
}

BobView bob_view_protocol2(const protocol::AngleProgram &program, const protocol::ChannelModel &channel,
                           const Protocol2ViewOptions &options) {
    program.validate();
    const int n = program.num_wires;
    const int d = 1 << n;
    if (2 * program.num_rounds() <= options.max_exact_bits) {
        std::map<std::string, qsim::Matrix> conditional;
        qsim::Matrix total = qsim::Matrix::Zero(d, d);
        enumerate_protocol2(program, channel, options.max_exact_bits, [&](const protocol::RunResult &r) {
            const Eigen::Map<const Eigen::VectorXcd> psi(r.output_state->amplitudes().data(), d);
            const qsim::Matrix rho = r.path_probability * (psi * psi.adjoint());
            auto [it, fresh] = conditional.try_emplace(transcript_key(r.transcript), qsim::Matrix::Zero(d, d));
            it->second += rho;
            total += rho;
        });
        TranscriptDist dist;
        for (const auto &[key, rho] : conditional) {
            dist[key] = rho.trace().real();
        }
        return BobView{normalized(n, total), std::move(dist), std::move(conditional), true};
    }
    if (options.trials < 1) {
        throw std::invalid_argument("sampled view needs trials >= 1");
    }
    TranscriptDist dist;
    qsim::Matrix total = qsim::Matrix::Zero(d, d);
    const qsim::StateVector input = qsim::StateVector::zero(n);
    for (int t = 0; t < options.trials; t++) {
        protocol::ChannelModel ch = channel;
        ch.rng_seed = qsim::derive_seed(channel.rng_seed, static_cast<std::uint64_t>(t));
        protocol::OutcomeSource outcomes =
            protocol::OutcomeSource::sampled(qsim::derive_seed(options.seed, static_cast<std::uint64_t>(t)));
        const protocol::RunResult r = protocol::run_protocol2(program, input, ch, outcomes);
        const Eigen::Map<const Eigen::VectorXcd> psi(r.output_state->amplitudes().data(), d);
        total += psi * psi.adjoint();
        dist[transcript_key(r.transcript)] += 1.0 / options.trials;
    }
    return BobView{normalized(n, total), std::move(dist), {}, false};
}

std::vector<double> m_bit_probabilities(const protocol::AngleProgram &program,
                                        const protocol::ChannelModel &channel) {
    program.validate();
    std::vector<double> p(program.num_rounds(), 0.0);
    enumerate_protocol2(program, channel, 20, [&](const protocol::RunResult &r) {
        for (std::size_t i = 0; i < r.m_bits.size(); i++) {
            p[i] += r.path_probability * r.m_bits[i];
        }
    });
    return p;
}

std::vector<double> povm_distribution(const BobView &view, const Povm &povm) {
    const qsim::Matrix &rho = view.marginal.matrix();
    if (povm.dim() != rho.rows()) {
        throw std::invalid_argument("POVM dimension " + std::to_string(povm.dim()) + " does not match Bob's state " +
                                    std::to_string(rho.rows()));
    }
    std::vector<double> p;
    for (const qsim::Matrix &e : povm.elements) {
        p.push_back((e * rho).trace().real());
    }
    return p;
}

double marginal_deviation(const BobView &a, const BobView &b) {
    if (a.marginal.num_qubits() != b.marginal.num_qubits()) {
        throw std::invalid_argument("views differ in dimension");
    }
    return max_abs(a.marginal.matrix() - b.marginal.matrix());
}

double transcript_deviation(const BobView &a, const BobView &b) {
    double dev = 0;
    for (const auto &[key, p] : a.transcript_dist) {
        auto it = b.transcript_dist.find(key);
        dev = std::max(dev, std::abs(p - (it == b.transcript_dist.end() ? 0.0 : it->second)));
    }
    for (const auto &[key, p] : b.transcript_dist) {
        if (!a.transcript_dist.count(key)) {
            dev = std::max(dev, p);
        }
    }
    return dev;
}

double transcript_tv(const BobView &a, const BobView &b) {
    double sum = 0;
    for (const auto &[key, p] : a.transcript_dist) {
        auto it = b.transcript_dist.find(key);
        sum += std::abs(p - (it == b.transcript_dist.end() ? 0.0 : it->second));
    }
    for (const auto &[key, p] : b.transcript_dist) {
        if (!a.transcript_dist.count(key)) {
            sum += p;
        }
    }
    return sum / 2;
}

double conditional_deviation(const BobView &a, const BobView &b) {
    if (a.marginal.num_qubits() != b.marginal.num_qubits()) {
        throw std::invalid_argument("views differ in dimension");
    }
    double dev = 0;
    for (const auto &[key, rho] : a.conditional) {
        auto it = b.conditional.find(key);
        dev = std::max(dev, it == b.conditional.end() ? max_abs(rho) : max_abs(rho - it->second));
    }
    for (const auto &[key, rho] : b.conditional) {
        if (!a.conditional.count(key)) {
            dev = std::max(dev, max_abs(rho));
        }
    }
    return dev;
}

double povm_deviation(const BobView &a, const BobView &b, const Povm &povm) {
    if (a.conditional.empty() || b.conditional.empty()) {
        const std::vector<double> pa = povm_distribution(a, povm);
        const std::vector<double> pb = povm_distribution(b, povm);
        double dev = 0;
        for (std::size_t j = 0; j < pa.size(); j++) {
            dev = std::max(dev, std::abs(pa[j] - pb[j]));
        }
        return dev;
    }
    if (povm.dim() != a.marginal.matrix().rows() || povm.dim() != b.marginal.matrix().rows()) {
        throw std::invalid_argument("POVM dimension does not match Bob's state");
    }
    std::set<std::string> keys;
    for (const auto *view : {&a, &b}) {
        for (const auto &[key, rho] : view->conditional) {
            keys.insert(key);
        }
    }
    auto prob = [&](const BobView &v, const std::string &key, const qsim::Matrix &e) {
        auto it = v.conditional.find(key);
        return it == v.conditional.end() ? 0.0 : (e * it->second).trace().real();
    };
    double dev = 0;
    for (const std::string &key : keys) {
        for (const qsim::Matrix &e : povm.elements) {
            dev = std::max(dev, std::abs(prob(a, key, e) - prob(b, key, e)));
        }
    }
    return dev;
}

}  // namespace blinddelegate::blindness
