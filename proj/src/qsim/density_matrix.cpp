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

#include "blinddelegate/qsim/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::qsim {

namespace {

void normalize_keep(std::vector<int> &keep, int n, bool allow_empty) {
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw std::invalid_argument("keep set repeats a qubit");
    }
    if (keep.empty() && !allow_empty) {
        throw std::invalid_argument("partial trace needs a nonempty keep set");
    }
    for (int q : keep) {
        if (q < 0 || q >= n) {
            throw std::out_of_range("keep index out of range");
        }
    }
}

// Splits a full index into (kept bits packed low, traced bits packed low).
struct Splitter {
    std::vector<int> keep, trace;

    Splitter(int n, const std::vector<int> &k) : keep(k) {
        for (int q = 0; q < n; q++) {
            if (!std::binary_search(keep.begin(), keep.end(), q)) {
                trace.push_back(q);
            }
        }
    }

    std::uint64_t join(std::uint64_t kept, std::uint64_t traced) const {
        std::uint64_t i = 0;
        for (std::size_t b = 0; b < keep.size(); b++) {
            if ((kept >> b) & 1) {
                i |= std::uint64_t{1} << keep[b];
            }
        }
        for (std::size_t b = 0; b < trace.size(); b++) {
            if ((traced >> b) & 1) {
                i |= std::uint64_t{1} << trace[b];
            }
        }
        return i;
    }
};

}  // namespace

DensityMatrix::DensityMatrix(int num_qubits, Matrix entries) : n_(num_qubits), m_(std::move(entries)) {
    if (n_ < 0 || n_ > kMaxQubits) {
        throw CapacityExceeded("density matrix size out of range");
    }
    Eigen::Index d = Eigen::Index{1} << n_;
    if (m_.rows() != d || m_.cols() != d) {
        throw std::invalid_argument("density matrix must be 2^n x 2^n");
    }
    if ((m_ - m_.adjoint()).norm() > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - cd(1, 0)) > 1e-12) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    Matrix herm = (m_ + m_.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &state) {
    Eigen::Map<const Eigen::VectorXcd> v(state.amplitudes().data(), static_cast<Eigen::Index>(state.size()));
    return DensityMatrix(state.num_qubits(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
    Eigen::Index d = Eigen::Index{1} << num_qubits;
    return DensityMatrix(num_qubits, Matrix::Identity(d, d) / double(d));
}

double DensityMatrix::distance(const DensityMatrix &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("density matrices differ in size");
    }
    return (m_ - other.m_).norm();
}

Matrix reduced_matrix(const StateVector &state, std::vector<int> keep) {
    normalize_keep(keep, state.num_qubits(), true);
    Splitter sp(state.num_qubits(), keep);
    std::uint64_t dk = std::uint64_t{1} << sp.keep.size();
    std::uint64_t dt = std::uint64_t{1} << sp.trace.size();
    Matrix out = Matrix::Zero(dk, dk);
    for (std::uint64_t e = 0; e < dt; e++) {
        Eigen::VectorXcd col(dk);
        for (std::uint64_t i = 0; i < dk; i++) {
            col[i] = state[sp.join(i, e)];
        }
        out += col * col.adjoint();
    }
    return out;
}

DensityMatrix partial_trace(const StateVector &state, std::vector<int> keep) {
    normalize_keep(keep, state.num_qubits(), false);
    int k = static_cast<int>(keep.size());
    return DensityMatrix(k, reduced_matrix(state, std::move(keep)));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::vector<int> keep) {
    normalize_keep(keep, rho.num_qubits(), false);
    Splitter sp(rho.num_qubits(), keep);
    std::uint64_t dk = std::uint64_t{1} << sp.keep.size();
    std::uint64_t dt = std::uint64_t{1} << sp.trace.size();
    Matrix out = Matrix::Zero(dk, dk);
    const Matrix &m = rho.matrix();
    for (std::uint64_t i = 0; i < dk; i++) {
        for (std::uint64_t j = 0; j < dk; j++) {
            cd acc = 0;
            for (std::uint64_t e = 0; e < dt; e++) {
                acc += m(sp.join(i, e), sp.join(j, e));
            }
            out(i, j) = acc;
        }
    }
    return DensityMatrix(static_cast<int>(sp.keep.size()), out);
}

Matrix project_rotated_unnormalized(const Matrix &rho, int num_qubits, int qubit, Angle theta, int outcome) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    double r = 1.0 / std::sqrt(2.0);
    cd c[2] = {r, (outcome ? -r : r) * theta.phase()};
    std::uint64_t d = std::uint64_t{1} << (num_qubits - 1);
    std::uint64_t low = (std::uint64_t{1} << qubit) - 1;
    auto lift = [&](std::uint64_t i, int b) {
        return ((i & ~low) << 1) | (std::uint64_t(b) << qubit) | (i & low);
    };
    Matrix out = Matrix::Zero(d, d);
    for (std::uint64_t i = 0; i < d; i++) {
        for (std::uint64_t j = 0; j < d; j++) {
            cd acc = 0;
            for (int bi = 0; bi < 2; bi++) {
                for (int bj = 0; bj < 2; bj++) {
                    acc += c[bi] * rho(lift(i, bi), lift(j, bj)) * std::conj(c[bj]);
                }
            }
            out(i, j) = acc;
        }
    }
    return out;
}

MixedMeasurement project_rotated(const DensityMatrix &rho, int qubit, Angle theta, int outcome) {
    Matrix m = project_rotated_unnormalized(rho.matrix(), rho.num_qubits(), qubit, theta, outcome);
    double p = m.trace().real();
    if (p < 1e-14) {
        throw DegenerateMeasurement("outcome has zero probability");
    }
    return MixedMeasurement{outcome, p, DensityMatrix(rho.num_qubits() - 1, m / p)};
}

}  // namespace blinddelegate::qsim
