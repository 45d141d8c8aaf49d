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

#include <optional>

#include "blinddelegate/protocol/protocol2.hpp"

namespace blinddelegate::adversary {

/// A measuring device built by Bob. It stores the digit k of the first angle
/// it sees (theta = k pi/4), then claims the next k arriving particles were
/// lost, then behaves honestly.
class EvilDevice : public protocol::MeasuringDevice {
   public:
    /// With `fresh_device_per_round`, Alice swaps in a new device for every
    /// particle and nothing survives from one round to the next.
    explicit EvilDevice(bool fresh_device_per_round = false);

    void next_round() override;
    bool fake_loss() override;
    void observe(qsim::Angle theta) override;

    std::optional<int> stored_digit() const {
        return digit_;
    }
    int fake_losses_remaining() const {
        return remaining_;
    }
    int fakes_sent() const {
        return fakes_sent_;
    }
    /// First digit any incarnation of the device saw. Scoring only; a fresh
    /// device cannot act on it.
    std::optional<int> first_digit() const {
        return first_digit_;
    }

   private:
    bool fresh_;
    std::optional<int> digit_;
    std::optional<int> first_digit_;
    int remaining_ = 0;
    int fakes_sent_ = 0;
};

}  // namespace blinddelegate::adversary
