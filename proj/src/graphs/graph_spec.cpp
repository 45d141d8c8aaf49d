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

#include "blinddelegate/graphs/graph_spec.hpp"

#include <algorithm>
#include <stdexcept>

namespace blinddelegate::graphs {

GraphSpec GraphSpec::with_vertices(int n) {
    if (n < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    GraphSpec g;
    g.num_vertices = n;
    g.places.resize(n);
    return g;
}

void GraphSpec::add_edge(int u, int v) {
    if (u == v) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
        throw std::invalid_argument("edge references a missing vertex");
    }
    edges.insert({std::min(u, v), std::max(u, v)});
}

bool GraphSpec::has_edge(int u, int v) const {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<int> GraphSpec::neighbors(int v) const {
    std::vector<int> out;
    for (const auto &[a, b] : edges) {
        if (a == v) {
            out.push_back(b);
        } else if (b == v) {
            out.push_back(a);
        }
    }
    return out;
}

IoMark GraphSpec::mark(int v) const {
    if (inputs.count(v)) {
        return IoMark::In;
    }
    if (outputs.count(v)) {
        return IoMark::Out;
    }
    return IoMark::Mid;
}

std::optional<int> GraphSpec::vertex_at(int wire, int column) const {
    for (int v = 0; v < num_vertices; v++) {
        if (places[v].wire == wire && places[v].column == column) {
            return v;
        }
    }
    return std::nullopt;
}

int GraphSpec::num_wires() const {
    int w = 0;
    for (const auto &p : places) {
        w = std::max(w, p.wire + 1);
    }
    return w;
}

int GraphSpec::num_columns() const {
    int c = 0;
    for (const auto &p : places) {
        c = std::max(c, p.column + 1);
    }
    return c;
}

void GraphSpec::validate() const {
    if (num_vertices < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    if (static_cast<int>(places.size()) != num_vertices) {
        throw std::invalid_argument("every vertex needs exactly one (wire, column)");
    }
    for (const auto &[a, b] : edges) {
        if (a == b) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
        }
        if (a < 0 || b >= num_vertices || a > b) {
            throw std::invalid_argument("edge references a missing vertex");
        }
    }
    std::set<std::pair<int, int>> seen;
    for (const auto &p : places) {
        if (p.wire < 0 || p.column < 0) {
            throw std::invalid_argument("negative wire or column");
        }
        if (!seen.insert({p.wire, p.column}).second) {
            throw std::invalid_argument("two vertices share a (wire, column)");
        }
    }
    for (int v : inputs) {
        if (v < 0 || v >= num_vertices) {
            throw std::invalid_argument("input mark on a missing vertex");
        }
        if (outputs.count(v)) {
            throw std::invalid_argument("vertex is both input and output");
        }
    }
    for (int v : outputs) {
        if (v < 0 || v >= num_vertices) {
            throw std::invalid_argument("output mark on a missing vertex");
        }
    }
}

GraphSpec linear_cluster(int n) {
    GraphSpec g = GraphSpec::with_vertices(n);
    for (int v = 0; v < n; v++) {
        g.places[v] = {0, v};
        if (v + 1 < n) {
            g.add_edge(v, v + 1);
        }
    }
    g.inputs.insert(0);
    if (n > 1) {
        g.outputs.insert(n - 1);
    }
    return g;
}

}  // namespace blinddelegate::graphs
