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

#include "blinddelegate/harness/config.hpp"

namespace blinddelegate::harness {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAborted = 3;

struct ScenarioResult {
    int exit_code = kExitPass;
    /// Empty when the command produces no transcript.
    std::string transcript;
    std::string report;
    /// Diagnostic for stderr; empty on success.
    std::string message;
};

/// Executes the configured command and, when out_dir is set, writes
/// transcript.txt (run only) and report.txt there. Identical configs give
/// byte-identical files. Exit code 0 iff every check line passes; a protocol
/// abort (retry cap) gives kExitAborted, a bad circuit kExitUsage.
ScenarioResult run_scenario(const ScenarioConfig &config);

}  // namespace blinddelegate::harness
