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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "blinddelegate/harness/config.hpp"
#include "blinddelegate/harness/scenario.hpp"
#include "blinddelegate/harness/suites.hpp"
#include "blinddelegate/protocol/message.hpp"

using namespace blinddelegate;
using namespace blinddelegate::harness;
namespace fs = std::filesystem;

namespace {

class HarnessTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("blinddelegate_harness_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
        write("h.txt", "# one gate\nH 0\n");
        write("two.txt", "H 0\nT 0\nCNOT 0 1\nS 1\n");
        write("bad.txt", "H 0\nFOO 1\n");
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    void write(const std::string &name, const std::string &text) {
        std::ofstream(dir_ / name) << text;
    }
    static std::string slurp(const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    ConfigErrorKind error_kind(const std::vector<std::string> &args) {
        try {
            parse_config(args, std::nullopt);
        } catch (const ConfigError &e) {
            return e.kind;
        }
        ADD_FAILURE() << "no error";
        return ConfigErrorKind::MalformedFlag;
    }
    fs::path dir_;
};

}  // namespace

TEST_F(HarnessTest, parses_the_example_flags) {
    ScenarioConfig c = parse_config({"--protocol", "2", "--circuit", path("h.txt"), "--loss", "0.3", "--seed", "7"},
                                    std::nullopt);
    EXPECT_EQ(c.command, Command::Run);
    EXPECT_EQ(c.protocol, ProtocolKind::Two);
    EXPECT_EQ(c.circuit_path, path("h.txt"));
    EXPECT_DOUBLE_EQ(c.loss_prob, 0.3);
    EXPECT_EQ(c.seed, 7u);
    EXPECT_EQ(c.adversary, "honest");
    EXPECT_FALSE(c.countermeasure);
}

TEST_F(HarnessTest, defaults_and_subcommands) {
    ScenarioConfig v = parse_config({"verify"}, std::nullopt);
    EXPECT_EQ(v.command, Command::Verify);
    EXPECT_DOUBLE_EQ(v.loss_prob, 0.0);
    EXPECT_EQ(v.seed, 0u);
    EXPECT_TRUE(v.checks.empty());
    ScenarioConfig a = parse_config({"attack", "--countermeasure", "--trials", "500"}, std::nullopt);
    EXPECT_EQ(a.command, Command::Attack);
    EXPECT_TRUE(a.countermeasure);
    EXPECT_EQ(a.adversary, "loss-signal");
    ScenarioConfig k = parse_config({"verify", "--checks", "identities,round"}, std::nullopt);
    EXPECT_EQ(k.checks, (std::vector<std::string>{"identities", "round"}));
    EXPECT_EQ(parse_config({"calibrate"}, std::nullopt).command, Command::Calibrate);
    EXPECT_THROW(parse_config({"--help"}, std::nullopt), HelpRequested);
}

TEST_F(HarnessTest, distinct_diagnostics) {
    EXPECT_EQ(error_kind({}), ConfigErrorKind::MissingProtocol);
    EXPECT_EQ(error_kind({"--loss", "1.5", "--protocol", "2", "--circuit", path("h.txt")}), ConfigErrorKind::OutOfRange);
    EXPECT_EQ(error_kind({"--loss", "-0.1", "verify"}), ConfigErrorKind::OutOfRange);
    EXPECT_EQ(error_kind({"--loss", "abc"}), ConfigErrorKind::MalformedFlag);
    EXPECT_EQ(error_kind({"--frobnicate"}), ConfigErrorKind::MalformedFlag);
    EXPECT_EQ(error_kind({"--protocol", "2", "--circuit", path("missing.txt")}), ConfigErrorKind::MissingFile);
    EXPECT_EQ(error_kind({"--protocol", "2"}), ConfigErrorKind::MissingFile);
    EXPECT_EQ(error_kind({"--protocol", "3", "--circuit", path("h.txt")}), ConfigErrorKind::OutOfRange);
    EXPECT_EQ(error_kind({"--adversary", "eve", "verify"}), ConfigErrorKind::UnknownName);
    EXPECT_EQ(error_kind({"verify", "--checks", "identities,nope"}), ConfigErrorKind::UnknownName);
    EXPECT_EQ(error_kind({"--config", path("nope.ini"), "verify"}), ConfigErrorKind::MissingFile);
    EXPECT_EQ(error_kind({"--protocol", "1", "--loss", "0.2", "--circuit", path("h.txt")}),
              ConfigErrorKind::OutOfRange);
    const std::string text = [&] {
        try {
            parse_config({}, std::nullopt);
        } catch (const ConfigError &e) {
            return std::string(e.what());
        }
        return std::string();
    }();
    EXPECT_NE(text.find("protocol required"), std::string::npos);
}

TEST_F(HarnessTest, seed_environment_overrides_flag) {
    ScenarioConfig c = parse_config({"verify", "--seed", "3"}, std::string("99"));
    EXPECT_EQ(c.seed, 99u);
    EXPECT_EQ(parse_config({"verify", "--seed", "3"}, std::string("")).seed, 3u);
    EXPECT_THROW(parse_config({"verify"}, std::string("12x")), ConfigError);
}

TEST_F(HarnessTest, config_file) {
    write("s.ini", "protocol=2\ncircuit=" + path("h.txt") + "\nloss=0.25\nseed=11\n");
    ScenarioConfig c = parse_config({"--config", path("s.ini")}, std::nullopt);
    EXPECT_EQ(c.protocol, ProtocolKind::Two);
    EXPECT_DOUBLE_EQ(c.loss_prob, 0.25);
    EXPECT_EQ(c.seed, 11u);
}

TEST_F(HarnessTest, protocol2_h_run) {
    ScenarioConfig c = parse_config({"--protocol", "2", "--circuit", path("h.txt"), "--out", path("out")}, std::nullopt);
    ScenarioResult r = run_scenario(c);
    EXPECT_EQ(r.exit_code, kExitPass) << r.message;
    protocol::Transcript t = protocol::transcript_from_string(slurp(dir_ / "out" / "transcript.txt"));
    EXPECT_EQ(t.header.protocol, "2");
    int rounds = 0;
    for (const protocol::Message &m : t.messages) {
        rounds = std::max(rounds, m.round);
    }
    EXPECT_GE(rounds, 3);
    EXPECT_EQ(slurp(dir_ / "out" / "report.txt"), r.report);
    EXPECT_NE(r.report.find("check=correctness"), std::string::npos);
}

TEST_F(HarnessTest, total_loss_aborts) {
    ScenarioConfig c = parse_config({"--protocol", "2", "--circuit", path("h.txt"), "--loss", "1.0", "--retry-cap",
                                     "20", "--out", ""},
                                    std::nullopt);
    ScenarioResult r = run_scenario(c);
    EXPECT_EQ(r.exit_code, kExitAborted);
    EXPECT_NE(r.message.find("lost 20 times"), std::string::npos);
}

TEST_F(HarnessTest, bad_circuit_is_a_usage_error) {
    ScenarioConfig c = parse_config({"--protocol", "2", "--circuit", path("bad.txt"), "--out", ""}, std::nullopt);
    ScenarioResult r = run_scenario(c);
    EXPECT_EQ(r.exit_code, kExitUsage);
    EXPECT_NE(r.message.find("line 2"), std::string::npos) << r.message;
    ScenarioConfig two = parse_config({"--protocol", "1", "--circuit", path("two.txt"), "--out", ""}, std::nullopt);
    EXPECT_EQ(run_scenario(two).exit_code, kExitUsage);
}

TEST_F(HarnessTest, every_protocol_runs) {
    for (const char *proto : {"1", "2", "tp"}) {
        std::vector<std::string> args = {"--protocol", proto, "--circuit", path("h.txt"), "--out", ""};
        if (std::string(proto) != "1") {
            args.insert(args.end(), {"--loss", "0.4"});
        }
        ScenarioResult r = run_scenario(parse_config(args, std::nullopt));
        EXPECT_EQ(r.exit_code, kExitPass) << proto << " " << r.message;
        EXPECT_EQ(r.transcript.rfind(std::string("run protocol=") + proto, 0), 0u);
    }
    ScenarioResult two = run_scenario(
        parse_config({"--protocol", "2", "--circuit", path("two.txt"), "--loss", "0.5", "--out", ""}, std::nullopt));
    EXPECT_EQ(two.exit_code, kExitPass) << two.report;
}

TEST_F(HarnessTest, byte_identical_reruns) {
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"--protocol", "2", "--circuit", path("two.txt"), "--loss", "0.3", "--seed", "5"},
          std::vector<std::string>{"--protocol", "tp", "--circuit", path("h.txt"), "--loss", "0.3", "--seed", "5"},
          std::vector<std::string>{"verify", "--checks", "identities,blindness", "--loss", "0.2"},
          std::vector<std::string>{"attack", "--countermeasure", "--trials", "400", "--seed", "2"}}) {
        std::vector<std::string> a1 = args, a2 = args;
        a1.insert(a1.end(), {"--out", path("r1")});
        a2.insert(a2.end(), {"--out", path("r2")});
        run_scenario(parse_config(a1, std::nullopt));
        run_scenario(parse_config(a2, std::nullopt));
        EXPECT_EQ(slurp(dir_ / "r1" / "report.txt"), slurp(dir_ / "r2" / "report.txt"));
        if (args[0] != "verify" && args[0] != "attack") {
            EXPECT_EQ(slurp(dir_ / "r1" / "transcript.txt"), slurp(dir_ / "r2" / "transcript.txt"));
        }
        fs::remove_all(dir_ / "r1");
        fs::remove_all(dir_ / "r2");
    }
}

TEST_F(HarnessTest, verify_suites_enumerate_checks) {
    ScenarioResult r =
        run_scenario(parse_config({"verify", "--checks", "identities,blindness,unitcell", "--out", ""}, std::nullopt));
    EXPECT_EQ(r.exit_code, kExitPass) << r.report;
    int identities = 0;
    int p1_pairs = 0;
    int cells = 0;
    std::istringstream lines(r.report);
    for (std::string line; std::getline(lines, line);) {
        identities += line.rfind("check=identity:", 0) == 0;
        p1_pairs += line.rfind("check=p1:marginal ", 0) == 0;
        cells += line.rfind("check=cell:", 0) == 0;
    }
    EXPECT_EQ(identities, 10);
    EXPECT_EQ(p1_pairs, 10);
    EXPECT_EQ(cells, 6);
}

TEST_F(HarnessTest, failed_checks_give_nonzero_exit) {
    ScenarioResult off = run_scenario(parse_config({"attack", "--trials", "400", "--out", ""}, std::nullopt));
    EXPECT_EQ(off.exit_code, kExitCheckFailed);
    EXPECT_NE(off.report.find("check=attack_mi"), std::string::npos);
    ScenarioResult on =
        run_scenario(parse_config({"attack", "--countermeasure", "--out", ""}, std::nullopt));
    EXPECT_EQ(on.exit_code, kExitPass) << on.report;
    // The device spoils rounds Alice accepted, so the computation breaks.
    ScenarioResult spoiled = run_scenario(parse_config({"--protocol", "2", "--circuit", path("two.txt"), "--adversary",
                                                        "loss-signal", "--countermeasure", "--seed", "4", "--out", ""},
                                                       std::nullopt));
    EXPECT_NE(spoiled.report.find("check=spoiled_rounds"), std::string::npos);
}

TEST(suites, all_pass) {
    for (const std::string &name : suite_names()) {
        Report r = run_suite(name, 3, 0.2, 10000);
        EXPECT_TRUE(r.all_pass()) << name << "\n" << r.to_string();
        EXPECT_FALSE(r.lines.empty());
    }
    EXPECT_THROW(run_suite("nope", 0, 0, 100), std::invalid_argument);
}
