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

#include "blinddelegate/adversary/strategy.hpp"

namespace blinddelegate::adversary {

std::string strategy_name(const AdversaryStrategy &strategy) {
    switch (strategy.index()) {
        case 0:
            return "honest";
        case 1:
            return "substitute";
        default:
            return "loss-signal";
    }
}

}  // namespace blinddelegate::adversary
