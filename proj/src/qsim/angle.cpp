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

#include "blinddelegate/qsim/angle.hpp"

#include <cmath>
#include <numbers>

namespace blinddelegate::qsim {

double Angle::radians() const {
    return k_ * std::numbers::pi / 4.0;
}

std::complex<double> Angle::phase() const {
    constexpr double r = std::numbers::sqrt2 / 2.0;
    static const std::complex<double> table[8] = {
        {1, 0}, {r, r}, {0, 1}, {-r, r}, {-1, 0}, {-r, -r}, {0, -1}, {r, -r},
    };
    return table[k_];
}

std::string Angle::str() const {
    switch (k_) {
        case 0:
            return "0";
        case 1:
            return "pi/4";
        case 2:
            return "pi/2";
        case 3:
            return "3pi/4";
        case 4:
            return "pi";
        case 5:
            return "-3pi/4";
        case 6:
            return "-pi/2";
        default:
            return "-pi/4";
    }
}

}  // namespace blinddelegate::qsim
