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

#include "blinddelegate/adversary/mutual_information.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace blinddelegate::adversary {

namespace {

// Plug-in entropy in bits and the number of occupied cells.
template <class Key>
std::pair<double, int> entropy(const std::map<Key, int> &counts, int n) {
    double h = 0;
    for (const auto &[key, c] : counts) {
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return {h, static_cast<int>(counts.size())};
}

}  // namespace

MiEstimate estimate_mutual_information(const std::vector<std::pair<int, std::string>> &samples) {
    if (samples.empty()) {
        throw std::invalid_argument("empty alphabet: no samples");
    }
    if (samples.size() < 100) {
        throw std::invalid_argument("mutual information needs at least 100 samples");
    }
    const int n = static_cast<int>(samples.size());
    std::map<int, int> secrets;
    std::map<std::string, int> transcripts;
    std::map<std::pair<int, std::string>, int> joint;
    for (const auto &s : samples) {
        secrets[s.first]++;
        transcripts[s.second]++;
        joint[s]++;
    }
    MiEstimate out;
    out.samples = n;
    if (secrets.size() == 1 || transcripts.size() == 1) {
        return out;
    }
    const auto [hs, ms] = entropy(secrets, n);
    const auto [ht, mt] = entropy(transcripts, n);
    const auto [hj, mj] = entropy(joint, n);
    out.plug_in = hs + ht - hj;
    // Miller-Madow adds (m - 1) / (2 n ln 2) bits to each entropy.
    const double c = 1.0 / (2.0 * n * std::log(2.0));
    out.bits = out.plug_in + c * ((ms - 1) + (mt - 1) - (mj - 1));
    return out;
}

}  // namespace blinddelegate::adversary
