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

#include "blinddelegate/protocol/protocol1.hpp"

#include <set>
#include <stdexcept>

#include "blinddelegate/qsim/gates.hpp"
#include "labeled_state.hpp"

namespace blinddelegate::protocol {

namespace {

struct Feedforward {
    std::vector<int> corrected;  // by vertex id, -1 until measured

    qsim::Angle angle(const VertexMeasurement &step) const {
        int x = 0;
        for (int v : step.x_deps) {
            x ^= corrected.at(v);
        }
        return x ? -step.angle : step.angle;
    }
    int correct(const VertexMeasurement &step, int raw) const {
        int z = raw;
        for (int v : step.z_deps) {
            z ^= corrected.at(v);
        }
        return z;
    }
};

detail::LabeledState vertex_register(const graphs::ResourceState &resource) {
    std::vector<int> labels(resource.graph().num_vertices);
    for (int v = 0; v < resource.graph().num_vertices; v++) {
        labels[v] = v;
    }
    return detail::LabeledState(resource.state(), labels);
}

template <class MeasureFn>
RunResult run_plan(const graphs::ResourceState &resource, const MeasurementPlan &plan, detail::LabeledState &reg,
                   MeasureFn measure) {
    plan.validate(resource.graph());
    RunResult result;
    Feedforward ff{std::vector<int>(resource.graph().num_vertices, -1)};
    int round = 0;
    for (const VertexMeasurement &step : plan.steps) {
        round++;
        const int raw = measure(step, ff.angle(step), round, result);
        const int corrected = ff.correct(step, raw);
        ff.corrected[step.vertex] = corrected;
        result.raw_outcomes.push_back(raw);
        result.corrected_outcomes.push_back(corrected);
    }
    if (!reg.empty()) {
        result.output_state = reg.state();
    }
    return result;
}

}  // namespace

void MeasurementPlan::validate(const graphs::GraphSpec &graph) const {
    std::set<int> done;
    for (const VertexMeasurement &s : steps) {
        if (s.vertex < 0 || s.vertex >= graph.num_vertices) {
            throw std::invalid_argument("plan vertex out of range");
        }
        if (done.count(s.vertex)) {
            throw std::invalid_argument("plan measures vertex " + std::to_string(s.vertex) + " twice");
        }
        for (const auto *deps : {&s.x_deps, &s.z_deps}) {
            for (int d : *deps) {
                if (!done.count(d)) {
                    throw std::invalid_argument("plan depends on a vertex not measured yet");
                }
            }
        }
        done.insert(s.vertex);
    }
    for (int v = 0; v < graph.num_vertices; v++) {
        if (!graph.outputs.count(v) && !done.count(v)) {
            throw std::invalid_argument("plan skips non-output vertex " + std::to_string(v));
        }
    }
}

MeasurementPlan linear_cluster_plan(const std::vector<qsim::Angle> &angles) {
    MeasurementPlan plan;
    for (int j = 0; j < static_cast<int>(angles.size()); j++) {
        VertexMeasurement m{j, angles[j], {}, {}};
        if (j >= 1) {
            m.x_deps.push_back(j - 1);
        }
        if (j >= 2) {
            m.z_deps.push_back(j - 2);
        }
        plan.steps.push_back(m);
    }
    return plan;
}

std::vector<qsim::Angle> cluster_angles_for(const Circuit &circuit) {
    circuit.validate();
    if (circuit.num_wires != 1) {
        throw std::invalid_argument("the linear cluster carries one wire only");
    }
    using qsim::Angle;
    // Measuring at theta applies H R_theta, so R_theta alone costs two vertices.
    std::vector<Angle> angles = {qsim::kZero};
    for (const Gate &g : circuit.gates) {
        switch (g.name) {
            case GateName::H:
                angles.push_back(qsim::kZero);
                break;
            case GateName::S:
                angles.insert(angles.end(), {qsim::kHalfPi, qsim::kZero});
                break;
            case GateName::Sdg:
                angles.insert(angles.end(), {-qsim::kHalfPi, qsim::kZero});
                break;
            case GateName::T:
                angles.insert(angles.end(), {qsim::kMinusQuarterPi, qsim::kZero});
                break;
            case GateName::Tdg:
                angles.insert(angles.end(), {qsim::kQuarterPi, qsim::kZero});
                break;
            case GateName::Z:
                angles.insert(angles.end(), {qsim::kPi, qsim::kZero});
                break;
            case GateName::X:
                // H Z H
                angles.insert(angles.end(), {qsim::kZero, qsim::kPi});
                break;
            case GateName::CZ:
            case GateName::CNOT:
                throw std::invalid_argument("two-qubit gates need more than a linear cluster");
        }
    }
    angles.insert(angles.end(), {qsim::kZero, qsim::kZero});
    return angles;
}

RunResult run_protocol1(const graphs::ResourceState &resource, const MeasurementPlan &plan, OutcomeSource &outcomes) {
    detail::LabeledState reg = vertex_register(resource);
    RunResult result = run_plan(resource, plan, reg,
                                [&](const VertexMeasurement &step, qsim::Angle theta, int round, RunResult &r) {
                                    r.transcript.push_back(Message::qubit_sent(round));
                                    return reg.measure_rotated(step.vertex, theta, outcomes);
                                });
    result.path_probability = outcomes.path_probability();
    return result;
}

RunResult run_teleport_variant(const graphs::ResourceState &resource, const MeasurementPlan &plan,
                               const ChannelModel &channel, OutcomeSource &outcomes) {
    detail::LabeledState reg = vertex_register(resource);
    Link link(channel, {});
    const int base = resource.graph().num_vertices;
    int pairs = 0;
    RunResult result = run_plan(
        resource, plan, reg, [&](const VertexMeasurement &step, qsim::Angle theta, int round, RunResult &r) {
            const Link::Delivery d = link.deliver(round, r.transcript);
            r.retransmission_count += d.retransmissions;
            const int alice = base + 2 * pairs;
            const int bob = alice + 1;
            pairs++;
            reg.append(qsim::StateVector::bell_pair(), {alice, bob});
            // Bell measurement of (particle, Bob's half).
            reg.apply(qsim::gates::CNOT(), {step.vertex, bob});
            reg.apply(qsim::gates::H(), {step.vertex});
            const int b1 = reg.measure_z(step.vertex, outcomes);
            const int b2 = reg.measure_z(bob, outcomes);
            r.transcript.push_back(Message::teleport_result(round, b1, b2));
            // Alice holds X^b2 Z^b1 |particle>: X flips her angle, Z her outcome.
            const int raw = reg.measure_rotated(alice, b2 ? -theta : theta, outcomes);
            return raw ^ b1;
        });
    result.path_probability = outcomes.path_probability();
    return result;
}

}  // namespace blinddelegate::protocol
