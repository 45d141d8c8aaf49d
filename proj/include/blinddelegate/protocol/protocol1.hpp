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

#include <vector>

#include "blinddelegate/graphs/graph_state.hpp"
#include "blinddelegate/protocol/circuit.hpp"
#include "blinddelegate/protocol/protocol2.hpp"

namespace blinddelegate::protocol {

/// Alice measures `vertex` in the basis (|0> +- e^{-i theta'}|1>)/sqrt2 with
/// theta' = (-1)^{sum of corrected outcomes of x_deps} angle, then flips her
/// outcome by the corrected outcomes of z_deps.
struct VertexMeasurement {
    int vertex = 0;
    qsim::Angle angle;
    std::vector<int> x_deps;
    std::vector<int> z_deps;
};

struct MeasurementPlan {
    std::vector<VertexMeasurement> steps;

    /// Throws std::invalid_argument if a vertex repeats, a dependency is not
    /// measured earlier, or a non-output vertex of `graph` is missing.
    void validate(const graphs::GraphSpec &graph) const;
};

/// Measures vertex j of a linear cluster at angles[j], j = 0..n-1, with the
/// usual feed-forward: x_deps {j-1}, z_deps {j-2}.
MeasurementPlan linear_cluster_plan(const std::vector<qsim::Angle> &angles);

/// Angles for a one-wire circuit on a linear cluster: vertex 0 turns |+> into
/// |0>, each gate adds its vertices, and a final H plus an X readout make the
/// last outcome the circuit's Z measurement. Throws on two-qubit gates.
std::vector<qsim::Angle> cluster_angles_for(const Circuit &circuit);

/// Bob sends vertices one at a time; Alice measures them adaptively.
RunResult run_protocol1(const graphs::ResourceState &resource, const MeasurementPlan &plan, OutcomeSource &outcomes);

/// Same plan, but each vertex reaches Alice by teleportation through a Bell
/// pair sent over the lossy channel.
RunResult run_teleport_variant(const graphs::ResourceState &resource, const MeasurementPlan &plan,
                               const ChannelModel &channel, OutcomeSource &outcomes);

}  // namespace blinddelegate::protocol
