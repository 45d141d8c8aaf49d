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

#include "blinddelegate/harness/scenario.hpp"

#include <filesystem>
#include <fstream>

#include "blinddelegate/adversary/attacks.hpp"
#include "blinddelegate/adversary/evil_device.hpp"
#include "blinddelegate/errors.hpp"
#include "blinddelegate/graphs/graph_state.hpp"
#include "blinddelegate/graphs/unit_cell.hpp"
#include "blinddelegate/harness/suites.hpp"
#include "blinddelegate/protocol/compiler.hpp"
#include "blinddelegate/protocol/protocol1.hpp"
#include "blinddelegate/protocol/protocol2.hpp"
#include "blinddelegate/qsim/random.hpp"

namespace blinddelegate::harness {

namespace {

std::string header_line(const ScenarioConfig &c) {
    std::string out = "# blinddelegate " + command_name(c.command);
    if (c.protocol) {
        out += " protocol=" + protocol_tag(*c.protocol);
    }
    out += " seed=" + std::to_string(c.seed) + " loss=" + protocol::format_real(c.loss_prob);
    out += " adversary=" + c.adversary + " countermeasure=" + (c.countermeasure ? "on" : "off");
    return out + "\n";
}

std::string rule_text(const graphs::AngleRule &rule) {
    std::string out = std::to_string(rule.base.k());
    if (rule.watch >= 0) {
        out += "|" + std::to_string(rule.alt.k()) + "@m" + std::to_string(rule.watch);
    }
    return out;
}

std::string schedule_text(const graphs::CellSchedule &s) {
    std::string out;
    for (int w = 0; w < 2; w++) {
        out += w == 0 ? "A=" : " B=";
        for (int r = 0; r < graphs::kCellRounds; r++) {
            out += (r ? "," : "") + rule_text(s.wires[w][r]);
        }
    }
    return out;
}

struct RunOutput {
    protocol::Transcript transcript;
    Report report;
};

RunOutput run_protocol(const ScenarioConfig &c) {
    const protocol::Circuit circuit = protocol::read_circuit_file(c.circuit_path);
    const protocol::ChannelModel channel{c.loss_prob, qsim::derive_seed(c.seed, 2), c.retry_cap};
    protocol::OutcomeSource outcomes = protocol::OutcomeSource::sampled(qsim::derive_seed(c.seed, 1));
    const qsim::StateVector reference = protocol::simulate_circuit(circuit, qsim::StateVector::zero(circuit.num_wires));
    RunOutput out;
    out.transcript.header = {protocol_tag(*c.protocol), c.seed, c.loss_prob};

    if (*c.protocol == ProtocolKind::Two) {
        std::optional<adversary::EvilDevice> device;
        if (c.adversary != "honest") {
            device.emplace(c.adversary == "fresh-device");
        }
        const protocol::LinkOptions link{c.countermeasure, qsim::derive_seed(c.seed, 3), device ? &*device : nullptr};
        const protocol::AngleProgram program = protocol::compile(circuit);
        const protocol::RunResult r =
            protocol::run_protocol2(program, qsim::StateVector::zero(circuit.num_wires), channel, outcomes, link);
        out.transcript.messages = r.transcript;
        const double dev = std::max(0.0, 1.0 - qsim::fidelity(protocol::corrected_output(r), reference));
        out.report.lines.push_back({"correctness", -1, -1, -1, dev, dev < 1e-9});
        out.report.lines.push_back({"spoiled_rounds", -1, -1, -1, static_cast<double>(r.spoiled_rounds),
                                    r.spoiled_rounds == 0});
        return out;
    }

    if (circuit.num_wires != 1) {
        throw std::invalid_argument("protocols 1 and tp run one-wire circuits on a linear cluster");
    }
    const std::vector<qsim::Angle> angles = protocol::cluster_angles_for(circuit);
    const graphs::ResourceState rs = graphs::build_graph_state(graphs::linear_cluster(static_cast<int>(angles.size())));
    const protocol::MeasurementPlan plan = protocol::linear_cluster_plan(angles);
    const protocol::RunResult r = *c.protocol == ProtocolKind::One
                                      ? protocol::run_protocol1(rs, plan, outcomes)
                                      : protocol::run_teleport_variant(rs, plan, channel, outcomes);
    out.transcript.messages = r.transcript;
    // The last corrected outcome is the circuit's Z readout; it must be possible.
    const int readout = r.corrected_outcomes.back();
    const double p = std::norm(reference[readout]);
    out.report.lines.push_back({"readout", readout, -1, -1, 1.0 - p, p > 1e-9});
    return out;
}

void append(Report &into, const Report &from) {
    into.lines.insert(into.lines.end(), from.lines.begin(), from.lines.end());
}

ScenarioResult execute(const ScenarioConfig &c) {
    ScenarioResult result;
    std::string info;
    Report report;
    switch (c.command) {
        case Command::Run: {
            RunOutput run = run_protocol(c);
            result.transcript = protocol::transcript_to_string(run.transcript);
            report = run.report;
            for (const std::string &name : c.checks) {
                append(report, run_suite(name, c.seed, c.loss_prob, c.trials));
            }
            break;
        }
        case Command::Verify: {
            const std::vector<std::string> &names = c.checks.empty() ? default_suites() : c.checks;
            for (const std::string &name : names) {
                append(report, run_suite(name, c.seed, c.loss_prob, c.trials));
            }
            break;
        }
        case Command::Calibrate: {
            const graphs::UnitCellCalibration cal = graphs::calibrate_unit_cell();
            std::string bridges;
            for (int b : cal.placement.bridge_columns) {
                bridges += (bridges.empty() ? "" : ",") + std::to_string(b);
            }
            info += "# bridges=" + bridges + " schedules_tried=" + std::to_string(cal.schedules_tried) + "\n";
            for (const graphs::CatalogEntry &e : cal.entries) {
                info += "# entry " + e.name + " in=" + std::to_string(e.parity.in_a) + std::to_string(e.parity.in_b) +
                        " out=" + std::to_string(e.parity.out_a) + std::to_string(e.parity.out_b) + " " +
                        schedule_text(e.schedule) + "\n";
            }
            append(report, unitcell_suite(c.seed));
            break;
        }
        case Command::Attack: {
            const bool fresh = c.adversary == "fresh-device";
            const adversary::AttackStats s =
                adversary::attack_experiment(c.countermeasure, c.loss_prob, c.trials, c.seed, fresh);
            info += "# trials=" + std::to_string(s.trials) + " success_rate=" + protocol::format_real(s.success_rate) +
                    " transmissions_per_particle=" + protocol::format_real(s.transmissions_per_particle) + "\n";
            // Blindness holds iff the loss reports carry no information about k.
            report.lines.push_back({"attack_mi", -1, -1, -1, s.mutual_information, s.mutual_information < 0.02});
            report.lines.push_back({"attack_success", -1, -1, -1, s.success_rate, s.success_rate < 0.125 + 0.05});
            break;
        }
    }
    result.report = header_line(c) + info + report.to_string();
    result.exit_code = report.all_pass() ? kExitPass : kExitCheckFailed;
    if (result.exit_code != kExitPass) {
        result.message = "one or more checks failed";
    }
    return result;
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig &config) {
    ScenarioResult result;
    try {
        result = execute(config);
    } catch (const RetryCapExceeded &e) {
        return {kExitAborted, "", "", std::string("protocol aborted: ") + e.what()};
    } catch (const ParseError &e) {
        return {kExitUsage, "", "", std::string("bad circuit: ") + e.what()};
    } catch (const CapacityExceeded &e) {
        return {kExitUsage, "", "", std::string("too large: ") + e.what()};
    } catch (const std::invalid_argument &e) {
        return {kExitUsage, "", "", std::string("invalid scenario: ") + e.what()};
    }
    if (!config.out_dir.empty()) {
        const std::filesystem::path dir(config.out_dir);
        std::filesystem::create_directories(dir);
        if (!result.transcript.empty()) {
            write_file(dir / "transcript.txt", result.transcript);
        }
        write_file(dir / "report.txt", result.report);
    }
    return result;
}

}  // namespace blinddelegate::harness
