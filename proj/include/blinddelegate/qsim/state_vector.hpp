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

#include <cstdint>
#include <span>
#include <vector>

#include "blinddelegate/qsim/angle.hpp"
#include "blinddelegate/qsim/gates.hpp"

namespace blinddelegate::qsim {

/// Largest register the dense engine accepts.
inline constexpr int kMaxQubits = 16;

/// Pure state on n qubits. Qubit q is bit q of the amplitude index.
class StateVector {
   public:
    /// Validates length 2^n and unit norm (1e-10).
    StateVector(int num_qubits, std::vector<cd> amplitudes);

    static StateVector zero(int num_qubits);
    static StateVector basis(int num_qubits, std::uint64_t index);
    static StateVector plus(int num_qubits);
    static StateVector bell_pair();

    int num_qubits() const {
        return n_;
    }
    std::size_t size() const {
        return amps_.size();
    }
    const std::vector<cd> &amplitudes() const {
        return amps_;
    }
    cd operator[](std::size_t i) const {
        return amps_[i];
    }
    double norm() const;

    /// Appends `extra` as qubits n..n+m-1.
    StateVector append(const StateVector &extra) const;

   private:
    int n_;
    std::vector<cd> amps_;
};

struct Measurement {
    int outcome;
    StateVector post;
    double prob;
};

StateVector bell_pair();

/// U|psi> with gate.matrix() acting on `targets` (targets[0] is the high bit).
StateVector apply_gate(const StateVector &state, const GateMatrix &gate, std::span<const int> targets);
StateVector apply_gate(const StateVector &state, const GateMatrix &gate, std::initializer_list<int> targets);

/// Measures in {|0> + (-1)^a e^{-i theta}|1>}/sqrt2. Outcome 0 iff rand < p0.
/// The measured qubit is removed.
Measurement measure_rotated(const StateVector &state, int qubit, Angle theta, double rand);
/// Same as measure_rotated with theta = 0.
Measurement measure_x(const StateVector &state, int qubit, double rand);
/// Computational basis measurement, qubit removed.
Measurement measure_z(const StateVector &state, int qubit, double rand);

/// Conditions on a given outcome. Throws DegenerateMeasurement on a
/// zero-weight branch.
Measurement project_rotated(const StateVector &state, int qubit, Angle theta, int outcome);
Measurement project_z(const StateVector &state, int qubit, int outcome);

/// Born probability of outcome 0 for the rotated measurement.
double prob_rotated_zero(const StateVector &state, int qubit, Angle theta);

/// New state whose qubit i is old qubit order[i].
StateVector permute_qubits(const StateVector &state, std::span<const int> order);

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

}  // namespace blinddelegate::qsim
