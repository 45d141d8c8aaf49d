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

#include "blinddelegate/adversary/evil_device.hpp"

namespace blinddelegate::adversary {

EvilDevice::EvilDevice(bool fresh_device_per_round) : fresh_(fresh_device_per_round) {
}

void EvilDevice::next_round() {
    if (fresh_) {
        digit_.reset();
        remaining_ = 0;
    }
}

bool EvilDevice::fake_loss() {
    if (remaining_ > 0) {
        remaining_--;
        fakes_sent_++;
        return true;
    }
    return false;
}

void EvilDevice::observe(qsim::Angle theta) {
    if (!first_digit_) {
        first_digit_ = theta.k();
    }
    if (!digit_) {
        digit_ = theta.k();
        remaining_ = theta.k();
    }
}

}  // namespace blinddelegate::adversary
