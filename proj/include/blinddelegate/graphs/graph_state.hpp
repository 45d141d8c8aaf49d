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

#include "blinddelegate/graphs/graph_spec.hpp"
#include "blinddelegate/qsim/state_vector.hpp"

namespace blinddelegate::graphs {

/// A graph together with its graph state. The constructor checks every
/// stabilizer, which pins the state down to a global phase.
class ResourceState {
   public:
    ResourceState(GraphSpec graph, qsim::StateVector state);

    const GraphSpec &graph() const {
        return graph_;
    }
    const qsim::StateVector &state() const {
        return state_;
    }

   private:
    GraphSpec graph_;
    qsim::StateVector state_;
};

/// prod_{(i,j) in E} CZ_ij |+>^n. Throws CapacityExceeded past qsim::kMaxQubits.
ResourceState build_graph_state(const GraphSpec &graph);

/// <psi| X_v prod_{u in N(v)} Z_u |psi>.
double stabilizer_expectation(const ResourceState &resource, int vertex);
/// Same, against an arbitrary state that claims to be the graph state of `graph`.
double stabilizer_expectation(const GraphSpec &graph, const qsim::StateVector &state, int vertex);

struct SpotCheck {
    std::vector<double> expectations;
    std::vector<int> failing;
    bool passed() const {
        return failing.empty();
    }
};

/// Evaluates every vertex stabilizer analytically; failing lists vertices off +1 by more than tol.
SpotCheck spot_check(const GraphSpec &graph, const qsim::StateVector &state, double tol = 1e-12);

}  // namespace blinddelegate::graphs
