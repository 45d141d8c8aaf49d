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

#include "blinddelegate/qsim/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::qsim {

namespace {

void check_capacity(int n) {
    if (n < 1) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (n > kMaxQubits) {
        throw CapacityExceeded("state of " + std::to_string(n) + " qubits exceeds capacity " +
                               std::to_string(kMaxQubits));
    }
}

void check_qubit(const StateVector &s, int q) {
    if (q < 0 || q >= s.num_qubits()) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range");
    }
}

// Removes bit q from index i.
inline std::uint64_t drop_bit(std::uint64_t i, int q) {
    std::uint64_t low = i & ((std::uint64_t{1} << q) - 1);
    return ((i >> (q + 1)) << q) | low;
}

// Branch amplitudes for projecting qubit q onto the bra c0<0| + c1<1|.
std::vector<cd> project_onto(const StateVector &s, int q, cd c0, cd c1) {
    std::size_t half = s.size() / 2;
    std::vector<cd> out(half);
    std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < s.size(); i++) {
        if (i & bit) {
            continue;
        }
        out[drop_bit(i, q)] = c0 * s[i] + c1 * s[i | bit];
    }
    return out;
}

double weight(const std::vector<cd> &v) {
    double w = 0;
    for (const auto &a : v) {
        w += std::norm(a);
    }
    return w;
}

Measurement finish(std::vector<cd> branch, int n_left, int outcome) {
    if (n_left == 0) {
        // A StateVector has at least one qubit; use prob_rotated_zero for the last one.
        throw std::logic_error("cannot remove the last qubit of a register");
    }
    double p = weight(branch);
    if (p < 1e-14) {
        throw DegenerateMeasurement("outcome " + std::to_string(outcome) + " has zero probability");
    }
    double scale = 1.0 / std::sqrt(p);
    for (auto &a : branch) {
        a *= scale;
    }
    return Measurement{outcome, StateVector(n_left, std::move(branch)), p};
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<cd> amplitudes) : n_(num_qubits), amps_(std::move(amplitudes)) {
    check_capacity(n_);
    if (amps_.size() != (std::size_t{1} << n_)) {
        throw std::invalid_argument("amplitude count must be 2^num_qubits");
    }
    if (std::abs(norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("state is not normalized");
    }
}

StateVector StateVector::zero(int num_qubits) {
    return basis(num_qubits, 0);
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    check_capacity(num_qubits);
    std::vector<cd> a(std::size_t{1} << num_qubits);
    if (index >= a.size()) {
        throw std::out_of_range("basis index out of range");
    }
    a[index] = 1;
    return StateVector(num_qubits, std::move(a));
}

StateVector StateVector::plus(int num_qubits) {
    check_capacity(num_qubits);
    std::size_t d = std::size_t{1} << num_qubits;
    return StateVector(num_qubits, std::vector<cd>(d, cd(1.0 / std::sqrt(double(d)), 0)));
}

StateVector StateVector::bell_pair() {
    double r = 1.0 / std::sqrt(2.0);
    return StateVector(2, {r, 0, 0, r});
}

StateVector bell_pair() {
    return StateVector::bell_pair();
}

double StateVector::norm() const {
    return std::sqrt(weight(amps_));
}

StateVector StateVector::append(const StateVector &extra) const {
    int n = n_ + extra.n_;
    check_capacity(n);
    std::vector<cd> out(std::size_t{1} << n);
    for (std::size_t j = 0; j < extra.size(); j++) {
        for (std::size_t i = 0; i < size(); i++) {
            out[i | (j << n_)] = amps_[i] * extra.amps_[j];
        }
    }
    return StateVector(n, std::move(out));
}

StateVector apply_gate(const StateVector &state, const GateMatrix &gate, std::span<const int> targets) {
    int k = gate.num_qubits();
    if (static_cast<int>(targets.size()) != k) {
        throw std::invalid_argument("gate dimension does not match target count");
    }
    for (int t : targets) {
        check_qubit(state, t);
    }
    if (k == 2 && targets[0] == targets[1]) {
        throw std::invalid_argument("gate targets must be distinct");
    }
    const Matrix &m = gate.matrix();
    std::vector<cd> out = state.amplitudes();
    std::uint64_t mask = 0;
    for (int t : targets) {
        mask |= std::uint64_t{1} << t;
    }
    int dim = 1 << k;
    std::vector<std::uint64_t> offsets(dim);
    for (int r = 0; r < dim; r++) {
        std::uint64_t off = 0;
        for (int j = 0; j < k; j++) {
            // targets[0] is the high bit of r.
            if ((r >> (k - 1 - j)) & 1) {
                off |= std::uint64_t{1} << targets[j];
            }
        }
        offsets[r] = off;
    }
    cd in[4];
    for (std::uint64_t base = 0; base < state.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (int c = 0; c < dim; c++) {
            in[c] = state[base | offsets[c]];
        }
        for (int r = 0; r < dim; r++) {
            cd acc = 0;
            for (int c = 0; c < dim; c++) {
                acc += m(r, c) * in[c];
            }
            out[base | offsets[r]] = acc;
        }
    }
    return StateVector(state.num_qubits(), std::move(out));
}

StateVector apply_gate(const StateVector &state, const GateMatrix &gate, std::initializer_list<int> targets) {
    return apply_gate(state, gate, std::span<const int>(targets.begin(), targets.size()));
}

Measurement project_rotated(const StateVector &state, int qubit, Angle theta, int outcome) {
    check_qubit(state, qubit);
    double r = 1.0 / std::sqrt(2.0);
    // Bra of (|0> + (-1)^a e^{-i theta}|1>)/sqrt2.
    cd c1 = (outcome ? -r : r) * theta.phase();
    return finish(project_onto(state, qubit, r, c1), state.num_qubits() - 1, outcome);
}

Measurement project_z(const StateVector &state, int qubit, int outcome) {
    check_qubit(state, qubit);
    return finish(project_onto(state, qubit, outcome ? 0 : 1, outcome ? 1 : 0), state.num_qubits() - 1, outcome);
}

double prob_rotated_zero(const StateVector &state, int qubit, Angle theta) {
    check_qubit(state, qubit);
    double r = 1.0 / std::sqrt(2.0);
    return weight(project_onto(state, qubit, r, r * theta.phase()));
}

Measurement measure_rotated(const StateVector &state, int qubit, Angle theta, double rand) {
    double p0 = prob_rotated_zero(state, qubit, theta);
    return project_rotated(state, qubit, theta, rand < p0 ? 0 : 1);
}

Measurement measure_x(const StateVector &state, int qubit, double rand) {
    return measure_rotated(state, qubit, kZero, rand);
}

Measurement measure_z(const StateVector &state, int qubit, double rand) {
    check_qubit(state, qubit);
    double p0 = weight(project_onto(state, qubit, 1, 0));
    return project_z(state, qubit, rand < p0 ? 0 : 1);
}

StateVector permute_qubits(const StateVector &state, std::span<const int> order) {
    int n = state.num_qubits();
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("permutation size mismatch");
    }
    std::vector<bool> seen(n, false);
    for (int q : order) {
        check_qubit(state, q);
        if (seen[q]) {
            throw std::invalid_argument("permutation repeats a qubit");
        }
        seen[q] = true;
    }
    std::vector<cd> out(state.size());
    for (std::uint64_t i = 0; i < state.size(); i++) {
        std::uint64_t j = 0;
        for (int b = 0; b < n; b++) {
            if ((i >> order[b]) & 1) {
                j |= std::uint64_t{1} << b;
            }
        }
        out[j] = state[i];
    }
    return StateVector(n, std::move(out));
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    std::size_t best = 0;
    double best_mag = -1;
    for (std::size_t i = 0; i < a.size(); i++) {
        double mag = std::abs(a[i]) * std::abs(b[i]);
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    if (best_mag <= 0) {
        return false;
    }
    cd phase = a[best] / b[best];
    phase /= std::abs(phase);
    double err = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        err += std::norm(a[i] - phase * b[i]);
    }
    return std::sqrt(err) < tol;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("fidelity of states with different sizes");
    }
    cd ip = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        ip += std::conj(a[i]) * b[i];
    }
    return std::norm(ip);
}

}  // namespace blinddelegate::qsim
