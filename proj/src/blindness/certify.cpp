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

#include "blinddelegate/blindness/certify.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "blinddelegate/graphs/graph_state.hpp"
#include "blinddelegate/protocol/compiler.hpp"
#include "blinddelegate/protocol/protocol2.hpp"

namespace blinddelegate::blindness {

namespace {

std::string index_or_dash(int i) {
    return i < 0 ? "-" : std::to_string(i);
}

std::string format_dev(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::scientific, 3);
    return std::string(buf, res.ptr);
}

void require_pairs(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("blindness needs at least two secrets");
    }
}

// The pairwise checks shared by both protocols.
void compare_views(const std::vector<BobView> &views, const std::vector<Povm> &povms, bool cq, Report &report) {
    for (int i = 0; i < static_cast<int>(views.size()); i++) {
        for (int j = i + 1; j < static_cast<int>(views.size()); j++) {
            const BobView &a = views[i];
            const BobView &b = views[j];
            const bool exact = a.exact && b.exact;
            const double m = marginal_deviation(a, b);
            report.lines.push_back({"marginal", i, j, -1, m, exact ? m < kMarginalTol : true});
            if (exact) {
                const double t = transcript_deviation(a, b);
                report.lines.push_back({"transcript", i, j, -1, t, t < kDistributionTol});
            } else {
                const double tv = transcript_tv(a, b);
                report.lines.push_back({"transcript_tv", i, j, -1, tv, tv < kSampledTvTol});
            }
            if (cq && exact) {
                const double c = conditional_deviation(a, b);
                report.lines.push_back({"cq_state", i, j, -1, c, c < kDistributionTol});
            }
            for (int k = 0; k < static_cast<int>(povms.size()); k++) {
                const double p = povm_deviation(a, b, povms[k]);
                report.lines.push_back({"povm", i, j, k, p, exact ? p < kDistributionTol : true});
            }
        }
    }
}

}  // namespace

protocol::MeasurementPlan substitute_plan(const adversary::SubstituteState &sub, const std::vector<qsim::Angle> &angles) {
    const int n = sub.state.num_qubits();
    std::vector<int> alice;
    for (int q = 0; q < n; q++) {
        if (std::find(sub.bob_qubits.begin(), sub.bob_qubits.end(), q) == sub.bob_qubits.end()) {
            alice.push_back(q);
        }
    }
    for (int q : sub.bob_qubits) {
        if (q < 0 || q >= n) {
            throw std::invalid_argument("substitute keeps a qubit out of range");
        }
    }
    if (alice.size() != angles.size()) {
        throw std::invalid_argument("dimension mismatch: substitute leaves " + std::to_string(alice.size()) +
                                    " qubits for " + std::to_string(angles.size()) + " angles");
    }
    protocol::MeasurementPlan plan = protocol::linear_cluster_plan(angles);
    for (protocol::VertexMeasurement &s : plan.steps) {
        s.vertex = alice[s.vertex];
        for (auto *deps : {&s.x_deps, &s.z_deps}) {
            for (int &d : *deps) {
                d = alice[d];
            }
        }
    }
    return plan;
}

std::string CheckLine::format() const {
    std::string out = "check=" + check + " secrets=" + index_or_dash(secret_i) + "," + index_or_dash(secret_j) +
                      " povm=" + index_or_dash(povm) + " max_dev=" + format_dev(max_dev) +
                      " pass=" + (pass ? "true" : "false");
    return out;
}

bool Report::all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine &l) { return l.pass; });
}

double Report::max_deviation(const std::string &check) const {
    double dev = 0;
    for (const CheckLine &l : lines) {
        if (l.check == check) {
            dev = std::max(dev, l.max_dev);
        }
    }
    return dev;
}

std::string Report::to_string() const {
    std::string out;
    for (const CheckLine &l : lines) {
        out += l.format();
        out += '\n';
    }
    return out;
}

Report certify_b1_b2(const std::vector<std::vector<qsim::Angle>> &secrets, const adversary::AdversaryStrategy &bob,
                     const CertifyOptions &options) {
    require_pairs(secrets.size());
    for (const auto &s : secrets) {
        if (s.size() != secrets[0].size()) {
            throw std::invalid_argument("angle vectors differ in length");
        }
    }
    std::vector<BobView> views;
    if (std::holds_alternative<adversary::Honest>(bob)) {
        const int n = static_cast<int>(secrets[0].size()) + 1;
        const graphs::ResourceState rs = graphs::build_graph_state(graphs::linear_cluster(n));
        const qsim::DensityMatrix joint = qsim::DensityMatrix::from_pure(rs.state());
        for (const auto &s : secrets) {
            views.push_back(bob_view_protocol1(joint, s));
        }
    } else if (const auto *sub = std::get_if<adversary::SubstituteState>(&bob)) {
        for (const auto &s : secrets) {
            views.push_back(bob_view_protocol1(sub->state, substitute_plan(*sub, s)));
        }
    } else {
        throw std::invalid_argument("the loss-signal device does not apply to Protocol 1");
    }
    Report report;
    compare_views(views, canonical_povms(views[0].marginal.num_qubits(), options.n_povms, options.seed), false, report);
    return report;
}

Report certify_b1_b2(const std::vector<protocol::Circuit> &secrets, const adversary::AdversaryStrategy &bob,
                     const CertifyOptions &options) {
    require_pairs(secrets.size());
    if (!std::holds_alternative<adversary::Honest>(bob)) {
        throw std::invalid_argument("Protocol 2 certification covers honest Bob; use the attack scenarios");
    }
    int blocks = 0;
    for (const protocol::Circuit &c : secrets) {
        if (c.num_wires != secrets[0].num_wires) {
            throw std::invalid_argument("secret circuits differ in wire count");
        }
        for (int b : protocol::blocks_per_wire(protocol::compile(c))) {
            blocks = std::max(blocks, b);
        }
    }
    std::vector<protocol::AngleProgram> programs;
    for (const protocol::Circuit &c : secrets) {
        programs.push_back(protocol::compile(c, {blocks}));
    }
    std::vector<BobView> views;
    Report report;
    for (int i = 0; i < static_cast<int>(programs.size()); i++) {
        views.push_back(bob_view_protocol2(programs[i], options.channel, options.view));
        if (2 * programs[i].num_rounds() <= options.view.max_exact_bits) {
            double dev = 0;
            for (double p : m_bit_probabilities(programs[i], options.channel)) {
                dev = std::max(dev, std::abs(p - 0.5));
            }
            report.lines.push_back({"m_uniform", i, -1, -1, dev, dev < kMarginalTol});
        }
    }
    compare_views(views, canonical_povms(secrets[0].num_wires, options.n_povms, options.seed), true, report);
    return report;
}

Report round_view_report() {
    std::vector<qsim::DensityMatrix> views;
    Report report;
    const qsim::Matrix mixed = qsim::Matrix::Identity(2, 2) / 2.0;
    for (int k = 0; k < 8; k++) {
        views.push_back(bob_view_protocol2_round(qsim::Angle(k)));
        const double dev = (views.back().matrix() - mixed).cwiseAbs().maxCoeff();
        report.lines.push_back({"round_mixed", k, -1, -1, dev, dev < kMarginalTol});
    }
    for (int i = 0; i < 8; i++) {
        for (int j = i + 1; j < 8; j++) {
            const double dev = (views[i].matrix() - views[j].matrix()).norm();
            report.lines.push_back({"round_view", i, j, -1, dev, dev < kMarginalTol});
        }
    }
    return report;
}

Report loss_independence_report(const std::vector<protocol::Circuit> &secrets, const protocol::ChannelModel &channel,
                                int runs, std::uint64_t seed) {
    require_pairs(secrets.size());
    std::vector<protocol::AngleProgram> programs;
    for (const protocol::Circuit &c : secrets) {
        programs.push_back(protocol::compile(c));
    }
    auto loss_reports = [](const protocol::RunResult &r) {
        std::vector<protocol::Message> out;
        for (const protocol::Message &m : r.transcript) {
            if (m.kind == protocol::MessageKind::LostResend || m.kind == protocol::MessageKind::Arrived) {
                out.push_back(m);
            }
        }
        return out;
    };
    Report report;
    for (int i = 0; i < static_cast<int>(programs.size()); i++) {
        for (int j = i + 1; j < static_cast<int>(programs.size()); j++) {
            // Compare over the rounds both programs share.
            const int rounds = std::min(programs[i].num_rounds(), programs[j].num_rounds());
            int mismatches = 0;
            for (int t = 0; t < runs; t++) {
                protocol::ChannelModel ch = channel;
                ch.rng_seed = qsim::derive_seed(channel.rng_seed, static_cast<std::uint64_t>(t));
                std::vector<std::vector<protocol::Message>> seen;
                for (int which : {i, j}) {
                    protocol::OutcomeSource outcomes = protocol::OutcomeSource::sampled(
                        qsim::derive_seed(seed, static_cast<std::uint64_t>(t) * 2 + (which == j)));
                    const qsim::StateVector input = qsim::StateVector::zero(programs[which].num_wires);
                    std::vector<protocol::Message> reports =
                        loss_reports(protocol::run_protocol2(programs[which], input, ch, outcomes));
                    std::erase_if(reports, [&](const protocol::Message &m) { return m.round > rounds; });
                    seen.push_back(std::move(reports));
                }
                mismatches += seen[0] != seen[1];
            }
            const double rate = runs > 0 ? static_cast<double>(mismatches) / runs : 0.0;
            report.lines.push_back({"loss_independence", i, j, -1, rate, mismatches == 0});
        }
    }
    return report;
}

}  // namespace blinddelegate::blindness
