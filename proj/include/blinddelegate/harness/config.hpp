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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace blinddelegate::harness {

enum class Command { Run, Verify, Calibrate, Attack };
enum class ProtocolKind { One, Two, Teleport };

/// "1", "2" or "tp".
std::string protocol_tag(ProtocolKind kind);
std::string command_name(Command command);

struct ScenarioConfig {
    Command command = Command::Run;
    std::optional<ProtocolKind> protocol;
    std::string circuit_path;
    double loss_prob = 0.0;
    std::uint64_t seed = 0;
    /// "honest", "loss-signal" or "fresh-device".
    std::string adversary = "honest";
    bool countermeasure = false;
    /// Suite names for `verify` (and extra suites for `run`).
    std::vector<std::string> checks;
    /// Directory for transcript.txt and report.txt; empty writes nothing.
    std::string out_dir = ".";
    /// Runs per attack experiment.
    int trials = 10000;
    int retry_cap = 1000;
};

enum class ConfigErrorKind { MalformedFlag, MissingFile, OutOfRange, MissingProtocol, UnknownName };

std::string config_error_name(ConfigErrorKind kind);

struct ConfigError : std::runtime_error {
    ConfigError(ConfigErrorKind kind, const std::string &what)
        : std::runtime_error(config_error_name(kind) + ": " + what), kind(kind) {
    }
    ConfigErrorKind kind;
};

/// --help was given; `what()` is the usage text.
struct HelpRequested : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses `args` (without the program name). `seed_env` is the value of
/// BLINDDELEGATE_SEED, which overrides --seed. Throws ConfigError.
ScenarioConfig parse_config(const std::vector<std::string> &args, const std::optional<std::string> &seed_env);
/// Same, reading BLINDDELEGATE_SEED from the environment.
ScenarioConfig parse_config(int argc, const char *const *argv);

}  // namespace blinddelegate::harness
