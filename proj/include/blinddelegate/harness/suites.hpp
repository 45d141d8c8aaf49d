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
#include <string>
#include <vector>

#include "blinddelegate/blindness/certify.hpp"

namespace blinddelegate::harness {

using blindness::CheckLine;
using blindness::Report;

/// Suite names accepted by --checks, in report order.
const std::vector<std::string> &suite_names();
/// Suites run by `verify` when --checks is absent.
const std::vector<std::string> &default_suites();

/// The ten composition identities, each over every frame assignment.
Report identities_suite();
/// One Protocol 2 round on 50 random states per angle and (a, m) branch
/// against Z^a R_theta X^m H.
Report round_suite(std::uint64_t seed);
/// Every frozen block over all 64 outcome strings, against its gate.
Report blocks_suite(std::uint64_t seed);
/// Protocol 1 with honest and substituting Bobs, Protocol 2 secrets at
/// `loss`, the per-round view and loss-report independence.
Report blindness_suite(std::uint64_t seed, double loss);
/// Calibrated catalog, composition of two cells, and two cells run through
/// Protocol 2.
Report unitcell_suite(std::uint64_t seed);
/// Stabilizer spot-check on generated graph states, plus single-edge tampering.
Report stabilizer_suite();
/// Loss-signalling device with and without the countermeasure at loss 0.
Report attack_suite(std::uint64_t seed, int trials);

/// Dispatches by name. Throws std::invalid_argument on an unknown name.
Report run_suite(const std::string &name, std::uint64_t seed, double loss, int trials);

}  // namespace blinddelegate::harness
