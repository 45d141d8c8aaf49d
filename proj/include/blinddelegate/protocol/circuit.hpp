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
#include <vector>

#include "blinddelegate/qsim/gates.hpp"
#include "blinddelegate/qsim/random.hpp"
#include "blinddelegate/qsim/state_vector.hpp"

namespace blinddelegate::protocol {

enum class GateName { H, S, Sdg, T, Tdg, X, Z, CZ, CNOT };

/// File spelling: H, S, SDG, T, TDG, X, Z, CZ, CNOT.
std::string gate_name_str(GateName g);
/// Throws ParseError for names outside the supported alphabet.
GateName parse_gate_name(const std::string &name);
bool is_two_qubit(GateName g);

struct Gate {
    GateName name = GateName::H;
    int wire = 0;
    /// Target for CNOT (wire is the control), partner for CZ, -1 otherwise.
    int wire2 = -1;
    bool operator==(const Gate &) const = default;
};

struct Circuit {
    int num_wires = 1;
    std::vector<Gate> gates;

    /// Throws std::invalid_argument on wires out of range or repeated in a gate.
    void validate() const;
    bool operator==(const Circuit &) const = default;
};

/// One gate per line, `<NAME> <wire> [<wire2>]`, `#` starts a comment.
/// num_wires is the larger of min_wires and the highest wire used plus one.
Circuit parse_circuit(std::istream &in, int min_wires = 1);
Circuit circuit_from_string(const std::string &text, int min_wires = 1);
/// Throws ParseError if the file cannot be opened.
Circuit read_circuit_file(const std::string &path, int min_wires = 1);
std::string circuit_to_string(const Circuit &c);

qsim::GateMatrix gate_matrix(GateName g);

/// Direct gate-by-gate simulation; wire w is qubit w.
qsim::StateVector simulate_circuit(const Circuit &c, const qsim::StateVector &input);

/// `depth` gates drawn uniformly from the alphabet (two-qubit gates only when
/// num_wires >= 2), on uniformly chosen wires.
Circuit random_circuit(int num_wires, int depth, qsim::Rng &rng);

}  // namespace blinddelegate::protocol
