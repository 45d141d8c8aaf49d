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
#include <vector>

#include "blinddelegate/qsim/random.hpp"

namespace blinddelegate::blindness {

/// A measurement Bob might perform: PSD elements summing to identity.
struct Povm {
    std::vector<qsim::Matrix> elements;

    int dim() const;
    /// Throws std::invalid_argument on an empty set, mixed dimensions, a
    /// non-Hermitian or non-PSD element, or completeness off by more than 1e-12.
    void validate() const;

    static Povm computational(int num_qubits);
    static Povm x_basis(int num_qubits);
    /// The single element {I}.
    static Povm trivial(int num_qubits);
    /// Normalized Ginibre POVM: A_i = G_i G_i^dag, then S^{-1/2} A_i S^{-1/2}.
    static Povm random(int num_qubits, int num_elements, qsim::Rng &rng);
};

/// Computational, X basis, then `n_random` random POVMs from `seed`.
std::vector<Povm> canonical_povms(int num_qubits, int n_random, std::uint64_t seed);

}  // namespace blinddelegate::blindness
