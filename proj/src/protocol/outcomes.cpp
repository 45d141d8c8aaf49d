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

#include "blinddelegate/protocol/outcomes.hpp"

#include <stdexcept>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::protocol {

OutcomeSource OutcomeSource::sampled(std::uint64_t seed) {
    OutcomeSource s;
    s.rng_.emplace(seed);
    return s;
}

OutcomeSource OutcomeSource::scripted(std::vector<int> outcomes) {
    OutcomeSource s;
    s.script_ = std::move(outcomes);
    return s;
}

int OutcomeSource::next(double p0) {
    int outcome = 0;
    if (rng_) {
        outcome = qsim::uniform01(*rng_) < p0 ? 0 : 1;
    } else {
        if (cursor_ >= script_.size()) {
            throw std::logic_error("outcome script exhausted");
        }
        outcome = script_[cursor_++] & 1;
    }
    const double p = outcome == 0 ? p0 : 1.0 - p0;
    if (p < 1e-14) {
        throw DegenerateMeasurement("scripted outcome has zero probability");
    }
    probability_ *= p;
    return outcome;
}

std::size_t OutcomeSource::remaining() const {
    return script_.size() - cursor_;
}

}  // namespace blinddelegate::protocol
