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

#include "blinddelegate/protocol/circuit.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::protocol {

namespace {

constexpr GateName kAll[] = {GateName::H, GateName::S, GateName::Sdg, GateName::T,   GateName::Tdg,
                             GateName::X, GateName::Z, GateName::CZ,  GateName::CNOT};

}  // namespace

std::string gate_name_str(GateName g) {
    switch (g) {
        case GateName::H:
            return "H";
        case GateName::S:
            return "S";
        case GateName::Sdg:
            return "SDG";
        case GateName::T:
            return "T";
        case GateName::Tdg:
            return "TDG";
        case GateName::X:
            return "X";
        case GateName::Z:
            return "Z";
        case GateName::CZ:
            return "CZ";
        case GateName::CNOT:
            return "CNOT";
    }
    return "?";
}

GateName parse_gate_name(const std::string &name) {
    for (GateName g : kAll) {
        if (gate_name_str(g) == name) {
            return g;
        }
    }
    throw ParseError("unsupported gate '" + name + "'");
}

bool is_two_qubit(GateName g) {
    return g == GateName::CZ || g == GateName::CNOT;
}

void Circuit::validate() const {
    if (num_wires < 1) {
        throw std::invalid_argument("circuit needs at least one wire");
    }
    for (const Gate &g : gates) {
        if (g.wire < 0 || g.wire >= num_wires) {
            throw std::invalid_argument("gate wire out of range");
        }
        if (is_two_qubit(g.name)) {
            if (g.wire2 < 0 || g.wire2 >= num_wires || g.wire2 == g.wire) {
                throw std::invalid_argument(gate_name_str(g.name) + " needs two distinct wires");
            }
        } else if (g.wire2 != -1) {
            throw std::invalid_argument(gate_name_str(g.name) + " takes one wire");
        }
    }
}

Circuit parse_circuit(std::istream &in, int min_wires) {
    Circuit c;
    c.num_wires = min_wires;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) {
            continue;
        }
        auto fail = [&](const std::string &why) {
            throw ParseError("circuit line " + std::to_string(line_no) + ": " + why);
        };
        Gate g;
        try {
            g.name = parse_gate_name(name);
        } catch (const ParseError &e) {
            fail(e.what());
        }
        if (!(ls >> g.wire) || g.wire < 0) {
            fail("missing or negative wire");
        }
        if (is_two_qubit(g.name)) {
            if (!(ls >> g.wire2) || g.wire2 < 0) {
                fail(name + " needs a second wire");
            }
            if (g.wire2 == g.wire) {
                fail(name + " wires must differ");
            }
        }
        std::string extra;
        if (ls >> extra) {
            fail("trailing field '" + extra + "'");
        }
        c.num_wires = std::max({c.num_wires, g.wire + 1, g.wire2 + 1});
        c.gates.push_back(g);
    }
    c.validate();
    return c;
}

Circuit circuit_from_string(const std::string &text, int min_wires) {
    std::istringstream ss(text);
    return parse_circuit(ss, min_wires);
}

Circuit read_circuit_file(const std::string &path, int min_wires) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open circuit file '" + path + "'");
    }
    return parse_circuit(in, min_wires);
}

std::string circuit_to_string(const Circuit &c) {
    std::ostringstream ss;
    for (const Gate &g : c.gates) {
        ss << gate_name_str(g.name) << " " << g.wire;
        if (g.wire2 >= 0) {
            ss << " " << g.wire2;
        }
        ss << "\n";
    }
    return ss.str();
}

qsim::GateMatrix gate_matrix(GateName g) {
    using namespace qsim::gates;
    switch (g) {
        case GateName::H:
            return H();
        case GateName::S:
            return S();
        case GateName::Sdg:
            return Sdg();
        case GateName::T:
            return T();
        case GateName::Tdg:
            return Tdg();
        case GateName::X:
            return X();
        case GateName::Z:
            return Z();
        case GateName::CZ:
            return CZ();
        case GateName::CNOT:
            return CNOT();
    }
    throw std::logic_error("unknown gate");
}

qsim::StateVector simulate_circuit(const Circuit &c, const qsim::StateVector &input) {
    c.validate();
    if (input.num_qubits() != c.num_wires) {
        throw std::invalid_argument("input state does not match the circuit width");
    }
    qsim::StateVector s = input;
    for (const Gate &g : c.gates) {
        if (is_two_qubit(g.name)) {
            s = qsim::apply_gate(s, gate_matrix(g.name), {g.wire, g.wire2});
        } else {
            s = qsim::apply_gate(s, gate_matrix(g.name), {g.wire});
        }
    }
    return s;
}

Circuit random_circuit(int num_wires, int depth, qsim::Rng &rng) {
    Circuit c;
    c.num_wires = num_wires;
    const int choices = num_wires >= 2 ? 9 : 7;
    for (int i = 0; i < depth; i++) {
        Gate g;
        g.name = kAll[rng() % choices];
        g.wire = static_cast<int>(rng() % num_wires);
        if (is_two_qubit(g.name)) {
            g.wire2 = static_cast<int>((g.wire + 1 + rng() % (num_wires - 1)) % num_wires);
        }
        c.gates.push_back(g);
    }
    c.validate();
    return c;
}

}  // namespace blinddelegate::protocol
