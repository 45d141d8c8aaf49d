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

#include <complex>
#include <string>

namespace blinddelegate::qsim {

/// Measurement angle k*pi/4. Arithmetic wraps mod 8.
class Angle {
   public:
    constexpr Angle() = default;
    constexpr explicit Angle(int k) : k_(((k % 8) + 8) % 8) {
    }

    constexpr int k() const {
        return k_;
    }
    double radians() const;
    /// e^{i theta}, exact for the eight grid points.
    std::complex<double> phase() const;

    /// Multiple of pi/2: the round is Clifford and needs no adaptation.
    constexpr bool is_clifford() const {
        return k_ % 2 == 0;
    }
    /// Odd multiple of pi/2: flipping its sign costs a Z.
    constexpr bool is_odd_half_pi() const {
        return k_ % 4 == 2;
    }

    constexpr Angle operator-() const {
        return Angle(-k_);
    }
    constexpr Angle operator+(Angle other) const {
        return Angle(k_ + other.k_);
    }
    constexpr Angle operator-(Angle other) const {
        return Angle(k_ - other.k_);
    }
    constexpr bool operator==(const Angle &) const = default;

    /// "0", "pi/4", "-pi/4", "pi/2", ... using the signed representative.
    std::string str() const;

   private:
    int k_ = 0;
};

inline constexpr Angle kZero{0};
inline constexpr Angle kQuarterPi{1};
inline constexpr Angle kHalfPi{2};
inline constexpr Angle kPi{4};
inline constexpr Angle kMinusQuarterPi{7};

}  // namespace blinddelegate::qsim
