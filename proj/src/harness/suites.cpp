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

#include "blinddelegate/harness/suites.hpp"

#include <cmath>
#include <stdexcept>

#include "blinddelegate/adversary/attacks.hpp"
#include "blinddelegate/graphs/graph_state.hpp"
#include "blinddelegate/graphs/unit_cell.hpp"
#include "blinddelegate/pauli/frame.hpp"
#include "blinddelegate/pauli/identities.hpp"
#include "blinddelegate/protocol/compiler.hpp"
#include "blinddelegate/protocol/protocol2.hpp"
#include "blinddelegate/qsim/random.hpp"

namespace blinddelegate::harness {

namespace {

constexpr double kStateTol = 1e-10;

void add(Report &r, const std::string &check, double dev, bool pass, int i = -1, int j = -1) {
    r.lines.push_back({check, i, j, -1, dev, pass});
}

void append(Report &into, const Report &from) {
    into.lines.insert(into.lines.end(), from.lines.begin(), from.lines.end());
}

double infidelity(const qsim::StateVector &a, const qsim::StateVector &b) {
    return std::max(0.0, 1.0 - qsim::fidelity(a, b));
}

// Frobenius distance from a to the nearest e^{i phi} P b; infinity if no Pauli fits.
double pauli_distance(const qsim::Matrix &a, const qsim::Matrix &b) {
    const auto frames = pauli::match_left_pauli(a, b);
    if (!frames) {
        return INFINITY;
    }
    const qsim::Matrix pb = pauli::frames_matrix(*frames) * b;
    const qsim::cd overlap = (pb.adjoint() * a).trace();
    const qsim::cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : qsim::cd(1);
    return (a - phase * pb).norm();
}

std::vector<int> bits_of(int value, int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; i++) {
        out[i] = (value >> i) & 1;
    }
    return out;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {"identities", "round",      "blocks", "blindness",
                                                   "unitcell",   "stabilizer", "attack"};
    return names;
}

const std::vector<std::string> &default_suites() {
    static const std::vector<std::string> names = {"identities", "round",    "blocks",
                                                   "blindness",  "unitcell", "stabilizer"};
    return names;
}

Report identities_suite() {
    Report r;
    for (const pauli::NamedIdentity &id : pauli::composition_identities()) {
        const pauli::IdentityCheck c = pauli::check_identity(id.lhs, id.rhs);
        add(r, "identity:" + id.name, c.max_deviation, c.holds && c.assignments > 0);
    }
    return r;
}

Report round_suite(std::uint64_t seed) {
    Report r;
    qsim::Rng rng(qsim::derive_seed(seed, 101));
    for (int k = 0; k < 8; k++) {
        const qsim::Angle theta(k);
        double dev = 0;
        for (int trial = 0; trial < 50; trial++) {
            const qsim::StateVector psi = qsim::random_state(1, rng);
            for (int a = 0; a < 2; a++) {
                for (int m = 0; m < 2; m++) {
                    protocol::Link link(protocol::ChannelModel{}, {});
                    protocol::OutcomeSource outcomes = protocol::OutcomeSource::scripted({a, m});
                    const protocol::RoundOutput out = protocol::round2_step(psi, 0, theta, link, outcomes, 1);
                    qsim::GateMatrix u = qsim::gates::H();
                    if (m) {
                        u = qsim::gates::X() * u;
                    }
                    u = qsim::gates::R(theta) * u;
                    if (a) {
                        u = qsim::gates::Z() * u;
                    }
                    dev = std::max(dev, infidelity(out.register_state, qsim::apply_gate(psi, u, {0})));
                }
            }
        }
        add(r, "round", dev, dev < kStateTol, k);
    }
    return r;
}

Report blocks_suite(std::uint64_t seed) {
    Report r;
    qsim::Rng rng(qsim::derive_seed(seed, 102));
    for (protocol::BlockKind kind : {protocol::BlockKind::H, protocol::BlockKind::S, protocol::BlockKind::SH,
                                     protocol::BlockKind::TH, protocol::BlockKind::TdgH, protocol::BlockKind::I}) {
        protocol::AngleProgram p;
        const protocol::BlockRules rules = protocol::frozen_block(kind);
        protocol::append_block(p, 0, rules, rules.gate);
        double dev = 0;
        for (int trial = 0; trial < 3; trial++) {
            const qsim::StateVector psi = qsim::random_state(1, rng);
            const qsim::StateVector want = qsim::apply_gate(psi, qsim::GateMatrix(rules.gate), {0});
            for (int code = 0; code < 64; code++) {
                protocol::OutcomeSource outcomes = protocol::OutcomeSource::scripted(bits_of(code, 6));
                const protocol::RunResult run = protocol::run_protocol2(p, psi, {}, outcomes);
                dev = std::max(dev, infidelity(protocol::corrected_output(run), want));
            }
        }
        add(r, "block:" + protocol::block_name(kind), dev, dev < kStateTol);
    }
    return r;
}

Report blindness_suite(std::uint64_t seed, double loss) {
    using qsim::Angle;
    Report r;
    const std::vector<std::vector<Angle>> p1 = {
        {Angle(0), Angle(2), Angle(7)}, {Angle(1), Angle(4), Angle(0)}, {Angle(3), Angle(3), Angle(3)},
        {Angle(6), Angle(5), Angle(4)}, {Angle(0), Angle(0), Angle(0)},
    };
    blindness::CertifyOptions opt;
    opt.seed = seed;
    for (CheckLine l : blindness::certify_b1_b2(p1, adversary::Honest{}, opt).lines) {
        l.check = "p1:" + l.check;
        r.lines.push_back(l);
    }
    qsim::Rng rng(qsim::derive_seed(seed, 103));
    const std::vector<std::vector<Angle>> short_secrets = {{Angle(0), Angle(3)}, {Angle(4), Angle(1)}, {Angle(7), Angle(6)}};
    for (int t = 0; t < 20; t++) {
        adversary::SubstituteState sub{qsim::random_density_matrix(4, rng), {0, 2}};
        const Report sr = blindness::certify_b1_b2(short_secrets, sub, opt);
        add(r, "p1_substitute:" + std::to_string(t), sr.max_deviation("povm") + sr.max_deviation("marginal"),
            sr.all_pass());
    }
    std::vector<protocol::Circuit> p2;
    for (const char *text : {"H 0\n", "T 0\n", "X 0\nH 0\n", "S 0\n", "TDG 0\n"}) {
        p2.push_back(protocol::circuit_from_string(text));
    }
    opt.channel = protocol::ChannelModel{loss, qsim::derive_seed(seed, 104)};
    for (CheckLine l : blindness::certify_b1_b2(p2, adversary::Honest{}, opt).lines) {
        l.check = "p2:" + l.check;
        r.lines.push_back(l);
    }
    append(r, blindness::round_view_report());
    if (loss < 1.0) {
        append(r, blindness::loss_independence_report(p2, {loss, qsim::derive_seed(seed, 105)}, 50, seed));
    }
    return r;
}

Report unitcell_suite(std::uint64_t seed) {
    Report r;
    const graphs::UnitCellCalibration &cal = graphs::unit_cell_calibration();
    for (const graphs::CatalogEntry &e : cal.entries) {
        double dev = 0;
        for (const graphs::CellAngles &branch : graphs::schedule_branches(e.schedule)) {
            dev = std::max(dev, pauli_distance(graphs::cell_unitary(cal.placement, branch), e.expected));
        }
        add(r, "cell:" + e.name, dev, dev < kStateTol);
    }
    // Composition at the unitary level: any cell followed by a Clifford one.
    const graphs::CellOp clifford[] = {graphs::CellOp::IdentityPair, graphs::CellOp::SHonA, graphs::CellOp::HonA,
                                       graphs::CellOp::CZCNOT};
    double compose = 0;
    for (graphs::CellOp first : graphs::kCatalog) {
        for (graphs::CellOp second : clifford) {
            const graphs::CatalogEntry &e1 = cal.entry(first);
            const graphs::CatalogEntry &e2 = cal.entry(second);
            for (const graphs::CellAngles &b1 : graphs::schedule_branches(e1.schedule)) {
                for (const graphs::CellAngles &b2 : graphs::schedule_branches(e2.schedule)) {
                    const qsim::Matrix u =
                        graphs::cell_unitary(cal.placement, b2) * graphs::cell_unitary(cal.placement, b1);
                    compose = std::max(compose, pauli_distance(u, e2.expected * e1.expected));
                }
            }
        }
    }
    add(r, "cell_compose", compose, compose < kStateTol);
    // Two cells in sequence through Protocol 2 with sampled outcomes.
    qsim::Rng rng(qsim::derive_seed(seed, 106));
    double run_dev = 0;
    for (graphs::CellOp first : graphs::kCatalog) {
        for (graphs::CellOp second : graphs::kCatalog) {
            protocol::AngleProgram p;
            p.num_wires = 2;
            protocol::append_cell(p, cal.entry(first), cal.placement, 0, 1);
            protocol::append_cell(p, cal.entry(second), cal.placement, 0, 1);
            const qsim::StateVector psi = qsim::random_state(2, rng);
            const qsim::Matrix u = cal.entry(second).expected * cal.entry(first).expected;
            // Cell wire A is the high bit of the catalog matrix; it is register wire 0.
            const qsim::StateVector want = qsim::apply_gate(psi, qsim::GateMatrix(u), {0, 1});
            protocol::OutcomeSource outcomes = protocol::OutcomeSource::sampled(rng());
            const protocol::RunResult run = protocol::run_protocol2(p, psi, {}, outcomes);
            run_dev = std::max(run_dev, infidelity(protocol::corrected_output(run), want));
        }
    }
    add(r, "cell_pair_run", run_dev, run_dev < kStateTol);
    return r;
}

Report stabilizer_suite() {
    Report r;
    std::vector<std::pair<std::string, graphs::GraphSpec>> graphs_to_check;
    for (int n = 1; n <= 8; n++) {
        graphs_to_check.emplace_back("linear" + std::to_string(n), graphs::linear_cluster(n));
    }
    graphs_to_check.emplace_back("unit_cell", graphs::build_unit_cell());
    graphs_to_check.emplace_back("tile1x2", graphs::tile(1, 2));
    graphs_to_check.emplace_back("tile2x1", graphs::tile(2, 1));
    for (const auto &[name, g] : graphs_to_check) {
        const graphs::ResourceState rs = graphs::build_graph_state(g);
        const graphs::SpotCheck check = graphs::spot_check(g, rs.state());
        double dev = 0;
        for (double e : check.expectations) {
            dev = std::max(dev, std::abs(e - 1.0));
        }
        add(r, "stabilizer:" + name, dev, check.passed());
        // Drop each edge in turn; an adjacent vertex must notice.
        int undetected = 0;
        for (const auto &edge : g.edges) {
            graphs::GraphSpec cheat = g;
            cheat.edges.erase(edge);
            const graphs::SpotCheck forged = graphs::spot_check(g, graphs::build_graph_state(cheat).state());
            bool adjacent = false;
            for (int v : forged.failing) {
                adjacent |= v == edge.first || v == edge.second;
            }
            undetected += !adjacent;
        }
        if (!g.edges.empty()) {
            add(r, "tamper:" + name, undetected, undetected == 0);
        }
    }
    return r;
}

Report attack_suite(std::uint64_t seed, int trials) {
    Report r;
    double recovered = 0;
    for (int k = 0; k < 8; k++) {
        const adversary::EvilDeviceRun run =
            adversary::run_with_evil_device(adversary::digit_program(k), false, {0.0, seed}, seed + k);
        recovered += run.success;
    }
    add(r, "attack_recovery", recovered / 8, recovered == 8);
    const adversary::AttackStats off = adversary::attack_experiment(false, 0.0, trials, seed);
    const adversary::AttackStats on = adversary::attack_experiment(true, 0.0, trials, seed);
    add(r, "attack_mi_without_countermeasure", off.mutual_information, std::abs(off.mutual_information - 3.0) < 0.05);
    add(r, "attack_mi_with_countermeasure", on.mutual_information, on.mutual_information < 0.02);
    add(r, "countermeasure_cost", on.transmissions_per_particle,
        std::abs(on.transmissions_per_particle - 2.0) < 0.1);
    return r;
}

Report run_suite(const std::string &name, std::uint64_t seed, double loss, int trials) {
    if (name == "identities") {
        return identities_suite();
    }
    if (name == "round") {
        return round_suite(seed);
    }
    if (name == "blocks") {
        return blocks_suite(seed);
    }
    if (name == "blindness") {
        return blindness_suite(seed, loss);
    }
    if (name == "unitcell") {
        return unitcell_suite(seed);
    }
    if (name == "stabilizer") {
        return stabilizer_suite();
    }
    if (name == "attack") {
        return attack_suite(seed, trials);
    }
    throw std::invalid_argument("unknown check suite: " + name);
}

}  // namespace blinddelegate::harness
