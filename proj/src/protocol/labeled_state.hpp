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

// Private helper: a register whose qubits are addressed by stable labels
// while measurements remove them.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "blinddelegate/protocol/outcomes.hpp"
#include "blinddelegate/qsim/state_vector.hpp"

namespace blinddelegate::protocol::detail {

class LabeledState {
   public:
    LabeledState(qsim::StateVector state, std::vector<int> labels) : state_(std::move(state)), labels_(std::move(labels)) {
        if (static_cast<int>(labels_.size()) != state_->num_qubits()) {
            throw std::logic_error("label count does not match the register");
        }
    }

    int index(int label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) {
            throw std::logic_error("no qubit with label " + std::to_string(label));
        }
        return static_cast<int>(it - labels_.begin());
    }

    bool empty() const {
        return !state_.has_value();
    }
    const qsim::StateVector &state() const {
        return *state_;
    }
    const std::vector<int> &labels() const {
        return labels_;
    }

    /// New qubits go on top, labelled in order.
    void append(const qsim::StateVector &extra, const std::vector<int> &labels) {
        state_ = state_->append(extra);
        labels_.insert(labels_.end(), labels.begin(), labels.end());
    }

    void apply(const qsim::GateMatrix &gate, std::initializer_list<int> labels) {
        std::vector<int> targets;
        for (int l : labels) {
            targets.push_back(index(l));
        }
        state_ = qsim::apply_gate(*state_, gate, targets);
    }

    /// Rotated-basis measurement; outcome 0 projects on (|0> + e^{i theta}|1>)/sqrt2.
    int measure_rotated(int label, qsim::Angle theta, OutcomeSource &outcomes) {
        const int q = index(label);
        const int outcome = outcomes.next(qsim::prob_rotated_zero(*state_, q, theta));
        remove(q, [&] { return qsim::project_rotated(*state_, q, theta, outcome).post; });
        return outcome;
    }

    int measure_z(int label, OutcomeSource &outcomes) {
        const int q = index(label);
        double p0 = 0.0;
        for (std::size_t i = 0; i < state_->size(); i++) {
            if (((i >> q) & 1) == 0) {
                p0 += std::norm((*state_)[i]);
            }
        }
        const int outcome = outcomes.next(p0);
        remove(q, [&] { return qsim::project_z(*state_, q, outcome).post; });
        return outcome;
    }

    /// Moves `label` to position `pos`, shifting the others up.
    void move_to(int label, int pos) {
        const int from = index(label);
        std::vector<int> order;
        for (int i = 0; i < static_cast<int>(labels_.size()); i++) {
            if (i != from) {
                order.push_back(i);
            }
        }
        order.insert(order.begin() + pos, from);
        std::vector<int> new_labels;
        for (int i : order) {
            new_labels.push_back(labels_[i]);
        }
        state_ = qsim::permute_qubits(*state_, order);
        labels_ = std::move(new_labels);
    }

   private:
    template <class Project>
    void remove(int q, Project project) {
        if (labels_.size() == 1) {
            state_.reset();
        } else {
            state_ = project();
        }
        labels_.erase(labels_.begin() + q);
    }

    std::optional<qsim::StateVector> state_;
    std::vector<int> labels_;
};

}  // namespace blinddelegate::protocol::detail
