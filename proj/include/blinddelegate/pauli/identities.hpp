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
#include <vector>

#include "blinddelegate/pauli/word.hpp"

namespace blinddelegate::pauli {

/// Which Pauli frames a P slot ranges over.
enum class PauliSlot { Any, IorX, ZorXZ };

std::vector<PauliFrame> slot_values(PauliSlot slot);

/// One parenthesized factor (P w).
struct FramedFactor {
    PauliSlot slot = PauliSlot::Any;
    CliffordTWord word;
};

/// Product of framed factors, written order (rightmost acts first).
struct FramedWord {
    std::vector<FramedFactor> factors;

    /// "(PS)(PSTH)(P'H)" style; P' marks IorX, P'' marks ZorXZ.
    static FramedWord parse(const std::string &text);
    std::string str() const;
};

struct IdentityCheck {
    bool holds = false;
    std::size_t assignments = 0;
    /// Largest distance from the closest P * rhs over all assignments.
    double max_deviation = 0;
};

/// Checks lhs = P * rhs (some Pauli P, global phase free) for every
/// assignment of frames to the slots of lhs.
IdentityCheck check_identity(const FramedWord &lhs, const CliffordTWord &rhs);
bool verify_identity(const FramedWord &lhs, const CliffordTWord &rhs);

struct NamedIdentity {
    std::string name;
    FramedWord lhs;
    CliffordTWord rhs;
};

/// The ten composition relations behind the deterministic gate blocks and
/// the universality of the unit-cell catalog.
const std::vector<NamedIdentity> &composition_identities();

}  // namespace blinddelegate::pauli
