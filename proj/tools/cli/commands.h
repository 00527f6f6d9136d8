// Copyright 2026 The shordecoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHORDECOH_CLI_COMMANDS_H
#define SHORDECOH_CLI_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

#include "cli/config.h"

namespace shordecoh::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitRuntime = 2,
    kExitExhausted = 3,
};

/// Runs one validated subcommand. Errors propagate as exceptions; run_cli
/// maps them to exit codes.
int dispatch(const RunConfig &config, std::ostream &out, std::ostream &err);

/// parse_config + dispatch with exit-code mapping. Diagnostics go to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace shordecoh::cli

#endif
