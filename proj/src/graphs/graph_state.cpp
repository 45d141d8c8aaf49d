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

#include "blinddelegate/graphs/graph_state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::graphs {

ResourceState::ResourceState(GraphSpec graph, qsim::StateVector state) : graph_(std::move(graph)), state_(std::move(state)) {
    graph_.validate();
    if (state_.num_qubits() != graph_.num_vertices) {
        throw std::invalid_argument("resource state size does not match the graph");
    }
    auto check = spot_check(graph_, state_, 1e-10);
    if (!check.passed()) {
        throw std::invalid_argument("state is not the graph state of its graph (vertex " +
                                    std::to_string(check.failing.front()) + ")");
    }
}

ResourceState build_graph_state(const GraphSpec &graph) {
    graph.validate();
    int n = graph.num_vertices;
    if (n > qsim::kMaxQubits) {
        throw CapacityExceeded("graph of " + std::to_string(n) + " vertices exceeds simulator capacity " +
                               std::to_string(qsim::kMaxQubits));
    }
    // CZ on every edge of |+>^n multiplies |x> by (-1)^{sum_edges x_u x_v}.
    std::size_t d = std::size_t{1} << n;
    double amp = 1.0 / std::sqrt(double(d));
    std::vector<qsim::cd> a(d);
    for (std::size_t x = 0; x < d; x++) {
        int parity = 0;
        for (const auto &[u, v] : graph.edges) {
            parity ^= int((x >> u) & (x >> v) & 1);
        }
        a[x] = parity ? -amp : amp;
    }
    return ResourceState(graph, qsim::StateVector(n, std::move(a)));
}

double stabilizer_expectation(const GraphSpec &graph, const qsim::StateVector &state, int vertex) {
    if (vertex < 0 || vertex >= graph.num_vertices) {
        throw std::out_of_range("vertex out of range");
    }
    if (state.num_qubits() != graph.num_vertices) {
        throw std::invalid_argument("state size does not match the graph");
    }
    std::uint64_t xbit = std::uint64_t{1} << vertex;
    std::uint64_t zmask = 0;
    for (int u : graph.neighbors(vertex)) {
        zmask |= std::uint64_t{1} << u;
    }
    qsim::cd acc = 0;
    for (std::uint64_t i = 0; i < state.size(); i++) {
        std::uint64_t j = i ^ xbit;
        double sign = (std::popcount(j & zmask) & 1) ? -1.0 : 1.0;
        acc += std::conj(state[i]) * sign * state[j];
    }
    return acc.real();
}

double stabilizer_expectation(const ResourceState &resource, int vertex) {
    return stabilizer_expectation(resource.graph(), resource.state(), vertex);
}

SpotCheck spot_check(const GraphSpec &graph, const qsim::StateVector &state, double tol) {
    SpotCheck out;
    for (int v = 0; v < graph.num_vertices; v++) {
        double e = stabilizer_expectation(graph, state, v);
        out.expectations.push_back(e);
        if (std::abs(e - 1.0) > tol) {
            out.failing.push_back(v);
        }
    }
    return out;
}

}  // namespace blinddelegate::graphs
