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
#include <optional>
#include <vector>

#include "blinddelegate/qsim/random.hpp"

namespace blinddelegate::protocol {

/// Where measurement outcomes come from: a seeded stream (outcome 0 iff
/// uniform < p0) or a fixed script used to enumerate branches. Tracks the
/// probability of the path taken.
class OutcomeSource {
   public:
    static OutcomeSource sampled(std::uint64_t seed);
    /// Outcomes are consumed in the order measurements happen.
    static OutcomeSource scripted(std::vector<int> outcomes);

    int next(double p0);

    double path_probability() const {
        return probability_;
    }
    bool is_scripted() const {
        return !rng_.has_value();
    }
    /// Scripted outcomes not yet consumed.
    std::size_t remaining() const;

   private:
    OutcomeSource() = default;
    std::optional<qsim::Rng> rng_;
    std::vector<int> script_;
    std::size_t cursor_ = 0;
    double probability_ = 1.0;
};

}  // namespace blinddelegate::protocol
