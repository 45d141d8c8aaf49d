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

#include "blinddelegate/qsim/random.hpp"

namespace blinddelegate::protocol {

enum class Delivery { Arrived, Lost };

struct ChannelModel {
    double loss_prob = 0.0;
    std::uint64_t rng_seed = 0;
    /// Transmissions allowed per particle before the run aborts.
    int retry_cap = 1000;

    /// Throws std::invalid_argument on loss_prob outside [0,1] or retry_cap < 1.
    void validate() const;
};

/// One Bernoulli(loss_prob) draw.
Delivery transmit(const ChannelModel &model, qsim::Rng &rng);

/// A channel with its own randomness stream, seeded from the model.
class Channel {
   public:
    explicit Channel(const ChannelModel &model);

    const ChannelModel &model() const {
        return model_;
    }
    Delivery transmit();

    /// Transmits until a particle arrives and returns the number of losses.
    /// Throws RetryCapExceeded after retry_cap failed transmissions.
    int deliver();

   private:
    ChannelModel model_;
    qsim::Rng rng_;
};

}  // namespace blinddelegate::protocol
