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

#include "blinddelegate/protocol/channel.hpp"

#include <stdexcept>
#include <string>

#include "blinddelegate/errors.hpp"

namespace blinddelegate::protocol {

void ChannelModel::validate() const {
    if (!(loss_prob >= 0.0 && loss_prob <= 1.0)) {
        throw std::invalid_argument("loss probability must lie in [0, 1]");
    }
    if (retry_cap < 1) {
        throw std::invalid_argument("retry cap must be positive");
    }
}

Delivery transmit(const ChannelModel &model, qsim::Rng &rng) {
    // loss_prob = 0 never loses, loss_prob = 1 always does.
    return qsim::uniform01(rng) < model.loss_prob ? Delivery::Lost : Delivery::Arrived;
}

Channel::Channel(const ChannelModel &model) : model_(model), rng_(model.rng_seed) {
    model_.validate();
}

Delivery Channel::transmit() {
    return protocol::transmit(model_, rng_);
}

int Channel::deliver() {
    for (int tries = 0; tries < model_.retry_cap; tries++) {
        if (transmit() == Delivery::Arrived) {
            return tries;
        }
    }
    throw RetryCapExceeded("particle lost " + std::to_string(model_.retry_cap) + " times in a row");
}

}  // namespace blinddelegate::protocol
