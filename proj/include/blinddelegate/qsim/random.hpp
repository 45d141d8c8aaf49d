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
#include <random>

#include "blinddelegate/qsim/density_matrix.hpp"

namespace blinddelegate::qsim {

/// The single randomness source type; always passed explicitly.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(Rng &rng);
int random_bit(Rng &rng);

/// Haar-like random pure state (normalized complex Gaussian amplitudes).
StateVector random_state(int num_qubits, Rng &rng);
/// Full-rank random mixed state G G^dag / Tr.
DensityMatrix random_density_matrix(int num_qubits, Rng &rng);
/// Derives an independent seed for a named sub-stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace blinddelegate::qsim
