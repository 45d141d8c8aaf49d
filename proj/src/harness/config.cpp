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

#include "blinddelegate/harness/config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>

#include "blinddelegate/harness/suites.hpp"

namespace blinddelegate::harness {

namespace {

const std::vector<std::string> kAdversaries = {"honest", "loss-signal", "fresh-device"};

bool contains(const std::vector<std::string> &v, const std::string &s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::string joined(const std::vector<std::string> &v) {
    std::string out;
    for (const std::string &s : v) {
        out += (out.empty() ? "" : ", ") + s;
    }
    return out;
}

void validate(ScenarioConfig &c, const std::string &protocol_text) {
    if (!protocol_text.empty()) {
        if (protocol_text == "1") {
            c.protocol = ProtocolKind::One;
        } else if (protocol_text == "2") {
            c.protocol = ProtocolKind::Two;
        } else if (protocol_text == "tp") {
            c.protocol = ProtocolKind::Teleport;
        } else {
            throw ConfigError(ConfigErrorKind::OutOfRange, "--protocol must be 1, 2 or tp, got '" + protocol_text + "'");
        }
    }
    if (!(c.loss_prob >= 0.0 && c.loss_prob <= 1.0)) {
        throw ConfigError(ConfigErrorKind::OutOfRange, "--loss must lie in [0, 1]");
    }
    if (c.trials < 100) {
        throw ConfigError(ConfigErrorKind::OutOfRange, "--trials must be at least 100");
    }
    if (c.retry_cap < 1) {
        throw ConfigError(ConfigErrorKind::OutOfRange, "--retry-cap must be at least 1");
    }
    if (!contains(kAdversaries, c.adversary)) {
        throw ConfigError(ConfigErrorKind::UnknownName,
                          "unknown adversary '" + c.adversary + "' (expected " + joined(kAdversaries) + ")");
    }
    for (const std::string &name : c.checks) {
        if (!contains(suite_names(), name)) {
            throw ConfigError(ConfigErrorKind::UnknownName,
                              "unknown check '" + name + "' (expected " + joined(suite_names()) + ")");
        }
    }
    if (c.command == Command::Attack && c.adversary == "honest") {
        // The attack always puts Bob's device in Alice's lab.
        c.adversary = "loss-signal";
    }
    if (c.command == Command::Run) {
        if (!c.protocol) {
            throw ConfigError(ConfigErrorKind::MissingProtocol, "run needs --protocol 1, 2 or tp");
        }
        if (c.circuit_path.empty()) {
            throw ConfigError(ConfigErrorKind::MissingFile, "run needs --circuit");
        }
        if (*c.protocol == ProtocolKind::One && c.loss_prob > 0) {
            throw ConfigError(ConfigErrorKind::OutOfRange,
                              "protocol 1 has no lossy link; use --protocol tp for a lossy run");
        }
        if (*c.protocol != ProtocolKind::Two && c.adversary != "honest") {
            throw ConfigError(ConfigErrorKind::OutOfRange, "the measuring-device adversaries need --protocol 2");
        }
    }
    if (!c.circuit_path.empty() && !std::filesystem::is_regular_file(c.circuit_path)) {
        throw ConfigError(ConfigErrorKind::MissingFile, "circuit file not found: " + c.circuit_path);
    }
}

}  // namespace

std::string protocol_tag(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::One:
            return "1";
        case ProtocolKind::Two:
            return "2";
        case ProtocolKind::Teleport:
            return "tp";
    }
    return "?";
}

std::string command_name(Command command) {
    switch (command) {
        case Command::Run:
            return "run";
        case Command::Verify:
            return "verify";
        case Command::Calibrate:
            return "calibrate";
        case Command::Attack:
            return "attack";
    }
    return "?";
}

std::string config_error_name(ConfigErrorKind kind) {
    switch (kind) {
        case ConfigErrorKind::MalformedFlag:
            return "malformed flag";
        case ConfigErrorKind::MissingFile:
            return "missing file";
        case ConfigErrorKind::OutOfRange:
            return "out of range";
        case ConfigErrorKind::MissingProtocol:
            return "protocol required";
        case ConfigErrorKind::UnknownName:
            return "unknown name";
    }
    return "?";
}

ScenarioConfig parse_config(const std::vector<std::string> &args, const std::optional<std::string> &seed_env) {
    ScenarioConfig c;
    std::string protocol_text;

    CLI::App app{"Simulates and verifies blind delegated quantum computation with a measuring client.",
                 "blinddelegate"};
    app.set_config("--config", "", "Read options from an INI/TOML file");
    app.require_subcommand(0, 1);
    app.add_option("--protocol", protocol_text, "Protocol: 1, 2 or tp (teleportation variant)");
    app.add_option("--circuit", c.circuit_path, "Circuit file");
    app.add_option("--loss", c.loss_prob, "Per-transmission loss probability in [0, 1]");
    app.add_option("--seed", c.seed, "Master seed (BLINDDELEGATE_SEED overrides)");
    app.add_option("--adversary", c.adversary, "honest, loss-signal or fresh-device");
    app.add_flag("--countermeasure", c.countermeasure, "Alice masks loss reports with random bits");
    app.add_option("--checks", c.checks, "Suites: " + joined(suite_names()))->delimiter(',');
    app.add_option("--out", c.out_dir, "Output directory for transcript.txt and report.txt");
    app.add_option("--trials", c.trials, "Runs per attack experiment");
    app.add_option("--retry-cap", c.retry_cap, "Transmissions per particle before aborting");

    const std::pair<const char *, Command> subcommands[] = {
        {"run", Command::Run}, {"verify", Command::Verify}, {"calibrate", Command::Calibrate}, {"attack", Command::Attack}};
    const char *descriptions[] = {"Run one protocol on a circuit", "Run verification suites",
                                  "Search for the unit-cell schedule", "Run the loss-signalling device attack"};
    std::vector<CLI::App *> subs;
    for (int i = 0; i < 4; i++) {
        subs.push_back(app.add_subcommand(subcommands[i].first, descriptions[i])->fallthrough());
    }

    std::vector<const char *> argv{"blinddelegate"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp &) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::FileError &e) {
        throw ConfigError(ConfigErrorKind::MissingFile, e.what());
    } catch (const CLI::ParseError &e) {
        throw ConfigError(ConfigErrorKind::MalformedFlag, e.what());
    }
    for (int i = 0; i < 4; i++) {
        if (subs[i]->parsed()) {
            c.command = subcommands[i].second;
        }
    }
    if (seed_env && !seed_env->empty()) {
        const std::string &s = *seed_env;
        std::uint64_t seed = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
        if (ec != std::errc() || end != s.data() + s.size()) {
            throw ConfigError(ConfigErrorKind::MalformedFlag, "BLINDDELEGATE_SEED is not an unsigned integer: " + s);
        }
        c.seed = seed;
    }
    validate(c, protocol_text);
    return c;
}

ScenarioConfig parse_config(int argc, const char *const *argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const char *env = std::getenv("BLINDDELEGATE_SEED");
    return parse_config(args, env ? std::optional<std::string>(env) : std::nullopt);
}

}  // namespace blinddelegate::harness
