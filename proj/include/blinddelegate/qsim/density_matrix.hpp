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

#include <vector>

#include "blinddelegate/qsim/state_vector.hpp"

namespace blinddelegate::qsim {

/// Mixed state on n >= 0 qubits, same bit order as StateVector.
class DensityMatrix {
   public:
    /// Validates Hermiticity (1e-12), unit trace (1e-12), eigenvalues >= -1e-10.
    DensityMatrix(int num_qubits, Matrix entries);

    static DensityMatrix from_pure(const StateVector &state);
    static DensityMatrix maximally_mixed(int num_qubits);

    int num_qubits() const {
        return n_;
    }
    const Matrix &matrix() const {
        return m_;
    }
    double distance(const DensityMatrix &other) const;

   private:
    int n_;
    Matrix m_;
};

/// Reduced state on `keep` (kept qubits retain their relative order).
DensityMatrix partial_trace(const StateVector &state, std::vector<int> keep);
DensityMatrix partial_trace(const DensityMatrix &rho, std::vector<int> keep);

/// Unnormalized partial trace keeping `keep`; allows an empty keep set.
Matrix reduced_matrix(const StateVector &state, std::vector<int> keep);

struct MixedMeasurement {
    int outcome;
    double prob;
    /// Normalized post-measurement state with the qubit removed.
    DensityMatrix post;
};

/// Rotated-basis projection on a density matrix (same basis as measure_rotated).
MixedMeasurement project_rotated(const DensityMatrix &rho, int qubit, Angle theta, int outcome);

/// Unnormalized <b|rho|b> on the remaining qubits.
Matrix project_rotated_unnormalized(const Matrix &rho, int num_qubits, int qubit, Angle theta, int outcome);

}  // namespace blinddelegate::qsim
