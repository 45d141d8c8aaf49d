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

#include "blinddelegate/graphs/graph_io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::graphs {

void write_graph(std::ostream &out, const GraphSpec &graph) {
    graph.validate();
    out << "graph " << graph.num_vertices << "\n";
    for (const auto &[u, v] : graph.edges) {
        out << "e " << u << " " << v << "\n";
    }
    for (int v = 0; v < graph.num_vertices; v++) {
        const char *mark = graph.mark(v) == IoMark::In ? "in" : graph.mark(v) == IoMark::Out ? "out" : "mid";
        out << "v " << v << " " << graph.places[v].wire << " " << graph.places[v].column << " " << mark << "\n";
    }
}

std::string graph_to_string(const GraphSpec &graph) {
    std::ostringstream ss;
    write_graph(ss, graph);
    return ss.str();
}

GraphSpec read_graph(std::istream &in) {
    GraphSpec g;
    bool have_header = false;
    std::vector<bool> placed;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string &why) {
        throw ParseError("graph line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) {
            continue;
        }
        if (tag == "graph") {
            if (have_header) {
                fail("duplicate header");
            }
            int n = 0;
            if (!(ls >> n) || n < 1 || n > kMaxGraphVertices) {
                fail("bad vertex count");
            }
            g = GraphSpec::with_vertices(n);
            placed.assign(n, false);
            have_header = true;
        } else if (!have_header) {
            fail("expected 'graph <n>' header first");
        } else if (tag == "e") {
            int u = 0, v = 0;
            if (!(ls >> u >> v)) {
                fail("edge needs two vertex ids");
            }
            try {
                g.add_edge(u, v);
            } catch (const std::invalid_argument &e) {
                fail(e.what());
            }
        } else if (tag == "v") {
            int id = 0, wire = 0, column = 0;
            if (!(ls >> id >> wire >> column)) {
                fail("vertex needs id, wire and column");
            }
            if (id < 0 || id >= g.num_vertices) {
                fail("vertex id out of range");
            }
            if (placed[id]) {
                fail("vertex listed twice");
            }
            placed[id] = true;
            g.places[id] = {wire, column};
            std::string mark = "mid";
            ls >> mark;
            if (mark == "in") {
                g.inputs.insert(id);
            } else if (mark == "out") {
                g.outputs.insert(id);
            } else if (mark != "mid") {
                fail("unknown io mark '" + mark + "'");
            }
        } else {
            fail("unknown record '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) {
            fail("trailing field '" + extra + "'");
        }
    }
    if (!have_header) {
        throw ParseError("graph: missing header");
    }
    for (int v = 0; v < g.num_vertices; v++) {
        if (!placed[v]) {
            throw ParseError("graph: vertex " + std::to_string(v) + " has no 'v' line");
        }
    }
    try {
        g.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
    return g;
}

GraphSpec graph_from_string(const std::string &text) {
    std::istringstream ss(text);
    return read_graph(ss);
}

}  // namespace blinddelegate::graphs
