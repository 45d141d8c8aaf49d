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

#include <iosfwd>
#include <string>

#include "blinddelegate/graphs/graph_spec.hpp"

namespace blinddelegate::graphs {

/// Text form:
///   graph <num_vertices>
///   e <u> <v>
///   v <id> <wire> <column> [in|out|mid]
void write_graph(std::ostream &out, const GraphSpec &graph);
std::string graph_to_string(const GraphSpec &graph);

/// Throws ParseError with the line number on malformed input.
GraphSpec read_graph(std::istream &in);
GraphSpec graph_from_string(const std::string &text);

}  // namespace blinddelegate::graphs
