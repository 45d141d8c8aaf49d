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

#include <string>
#include <variant>
#include <vector>

#include "blinddelegate/qsim/density_matrix.hpp"

namespace blinddelegate::adversary {

struct Honest {};

/// Bob hands Alice part of an arbitrary state instead of the resource and
/// keeps `bob_qubits` for himself.
struct SubstituteState {
    qsim::DensityMatrix state;
    std::vector<int> bob_qubits;
};

/// Bob built Alice's measuring device and lets it signal through fake loss
/// reports. A fresh device per round forgets everything it saw.
struct LossSignalDevice {
    bool fresh_device_per_round = false;
};

using AdversaryStrategy = std::variant<Honest, SubstituteState, LossSignalDevice>;

/// "honest", "substitute" or "loss-signal".
std::string strategy_name(const AdversaryStrategy &strategy);

}  // namespace blinddelegate::adversary
