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

#include "blinddelegate/blindness/povm.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

#include "blinddelegate/qsim/gates.hpp"

namespace blinddelegate::blindness {

namespace {

qsim::Matrix projector(const Eigen::VectorXcd &v) {
    return v * v.adjoint();
}

Eigen::VectorXcd gaussian_matrix_column(int dim, qsim::Rng &rng) {
    std::normal_distribution<double> normal;
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; i++) {
        v[i] = qsim::cd(normal(rng), normal(rng));
    }
    return v;
}

}  // namespace

int Povm::dim() const {
    return elements.empty() ? 0 : static_cast<int>(elements[0].rows());
}

void Povm::validate() const {
    if (elements.empty()) {
        throw std::invalid_argument("POVM has no elements");
    }
    const int d = dim();
    qsim::Matrix sum = qsim::Matrix::Zero(d, d);
    for (const qsim::Matrix &e : elements) {
        if (e.rows() != d || e.cols() != d) {
            throw std::invalid_argument("POVM elements differ in dimension");
        }
        if ((e - e.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
            throw std::invalid_argument("POVM element is not Hermitian");
        }
        Eigen::SelfAdjointEigenSolver<qsim::Matrix> eig(e, Eigen::EigenvaluesOnly);
        if (eig.eigenvalues().minCoeff() < -1e-10) {
            throw std::invalid_argument("POVM element is not positive semidefinite");
        }
        sum += e;
    }
    if ((sum - qsim::Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("POVM elements do not sum to identity");
    }
}

Povm Povm::computational(int num_qubits) {
    const int d = 1 << num_qubits;
    Povm p;
    for (int i = 0; i < d; i++) {
        p.elements.push_back(projector(Eigen::VectorXcd::Unit(d, i)));
    }
    return p;
}

Povm Povm::x_basis(int num_qubits) {
    const int d = 1 << num_qubits;
    qsim::Matrix h = qsim::Matrix::Identity(1, 1);
    for (int q = 0; q < num_qubits; q++) {
        h = qsim::kron(qsim::gates::H().matrix(), h);
    }
    Povm p;
    for (int i = 0; i < d; i++) {
        p.elements.push_back(projector(h.col(i)));
    }
    return p;
}

Povm Povm::trivial(int num_qubits) {
    const int d = 1 << num_qubits;
    return Povm{{qsim::Matrix::Identity(d, d)}};
}

Povm Povm::random(int num_qubits, int num_elements, qsim::Rng &rng) {
    if (num_elements < 1) {
        throw std::invalid_argument("POVM needs at least one element");
    }
    const int d = 1 << num_qubits;
    std::vector<qsim::Matrix> raw;
    qsim::Matrix sum = qsim::Matrix::Zero(d, d);
    for (int k = 0; k < num_elements; k++) {
        qsim::Matrix g(d, d);
        for (int c = 0; c < d; c++) {
            g.col(c) = gaussian_matrix_column(d, rng);
        }
        raw.push_back(g * g.adjoint());
        sum += raw.back();
    }
    Eigen::SelfAdjointEigenSolver<qsim::Matrix> eig(sum);
    const qsim::Matrix inv_sqrt = eig.eigenvectors() *
                                  eig.eigenvalues().cwiseSqrt().cwiseInverse().cast<qsim::cd>().asDiagonal() *
                                  eig.eigenvectors().adjoint();
    Povm p;
    for (const qsim::Matrix &a : raw) {
        qsim::Matrix e = inv_sqrt * a * inv_sqrt;
        p.elements.push_back((e + e.adjoint()) / 2.0);
    }
    return p;
}

std::vector<Povm> canonical_povms(int num_qubits, int n_random, std::uint64_t seed) {
    std::vector<Povm> out{Povm::computational(num_qubits), Povm::x_basis(num_qubits)};
    for (int k = 0; k < n_random; k++) {
        qsim::Rng rng(qsim::derive_seed(seed, static_cast<std::uint64_t>(k)));
        out.push_back(Povm::random(num_qubits, 4, rng));
    }
    return out;
}

}  // namespace blinddelegate::blindness
