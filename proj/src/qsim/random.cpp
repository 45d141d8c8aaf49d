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

#include "blinddelegate/qsim/random.hpp"

#include <cmath>

namespace blinddelegate::qsim {

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int random_bit(Rng &rng) {
    return static_cast<int>(rng() >> 63);
}

namespace {

// Box-Muller on our own uniform source, so draws are identical across standard libraries.
cd gaussian_pair(Rng &rng) {
    double u1 = 1.0 - uniform01(rng);
    double u2 = uniform01(rng);
    double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2 * M_PI * u2), r * std::sin(2 * M_PI * u2)};
}

}  // namespace

StateVector random_state(int num_qubits, Rng &rng) {
    std::vector<cd> a(std::size_t{1} << num_qubits);
    double w = 0;
    for (auto &x : a) {
        x = gaussian_pair(rng);
        w += std::norm(x);
    }
    double s = 1.0 / std::sqrt(w);
    for (auto &x : a) {
        x *= s;
    }
    return StateVector(num_qubits, std::move(a));
}

DensityMatrix random_density_matrix(int num_qubits, Rng &rng) {
    Eigen::Index d = Eigen::Index{1} << num_qubits;
    Matrix g(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            g(i, j) = gaussian_pair(rng);
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityMatrix(num_qubits, rho);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over (seed, stream).
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace blinddelegate::qsim
