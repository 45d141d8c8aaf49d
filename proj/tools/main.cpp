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

#include <iostream>

#include "blinddelegate/harness/config.hpp"
#include "blinddelegate/harness/scenario.hpp"

using namespace blinddelegate::harness;

int main(int argc, char **argv) {
    ScenarioConfig config;
    try {
        config = parse_config(argc, argv);
    } catch (const HelpRequested &help) {
        std::cout << help.what();
        return kExitPass;
    } catch (const ConfigError &e) {
        std::cerr << "blinddelegate: " << e.what() << "\n";
        return kExitUsage;
    }
    const ScenarioResult result = run_scenario(config);
    if (config.out_dir.empty()) {
        std::cout << result.transcript << result.report;
    }
    if (!result.message.empty()) {
        std::cerr << "blinddelegate: " << result.message << "\n";
    }
    return result.exit_code;
}
