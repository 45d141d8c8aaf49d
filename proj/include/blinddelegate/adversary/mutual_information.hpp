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
#include <utility>
#include <vector>

namespace blinddelegate::adversary {

struct MiEstimate {
    /// Plug-in estimate with the Miller-Madow correction, in bits.
    double bits = 0.0;
    /// Uncorrected plug-in estimate, in bits.
    double plug_in = 0.0;
    int samples = 0;
};

/// I(secret; transcript) from (secret, transcript) samples. A transcript or
/// secret that never varies gives exactly 0. Throws std::invalid_argument on
/// an empty sample set or fewer than 100 samples.
MiEstimate estimate_mutual_information(const std::vector<std::pair<int, std::string>> &samples);

}  // namespace blinddelegate::adversary
