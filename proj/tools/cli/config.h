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

#ifndef SHORDECOH_CLI_CONFIG_H
#define SHORDECOH_CLI_CONFIG_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "shordecoh/instance.h"
#include "shordecoh/kernel.h"
#include "shordecoh/recovery.h"

namespace shordecoh::cli {

enum class OutputFormat { kCsv, kJson, kGnuplot };
enum class SweepParam { kBeta, kXi };

/// Raw key -> value text, as given on the command line or in a config file.
using RawConfig = std::map<std::string, std::string>;

struct RunConfig {
    std::string command;

    uint64_t n = 0;
    uint64_t x = 0;
    std::optional<uint64_t> q;
    Kernel kernel = Kernel::coherent();
    std::optional<uint64_t> k;
    uint64_t seed = 1;
    uint64_t trials = 1000;
    uint64_t max_trials = 100;
    std::string output = "-";
    OutputFormat format = OutputFormat::kCsv;
    unsigned threads = 1;
    SamplingMethod method = SamplingMethod::kSpectrum;
    LogBase log_base = LogBase::kNatural;
    bool force = false;
    bool timing = false;

    SweepParam sweep_param = SweepParam::kBeta;
    std::vector<double> sweep_values;

    std::optional<double> alpha;
    std::optional<double> digit_length;
    std::optional<double> mu, eta, delta, cutoff;
    std::optional<double> tau_rel, lambda_db, delta_x;
    std::optional<double> rho_uu, rho_dd, rho_ud_re, rho_ud_im;
    bool max_factorable_only = false;

    /// The merged raw keys this config was built from.
    RawConfig raw;

    /// Config echo: the raw keys as a JSON object. Feeding it back through
    /// parse_config as a config file reproduces the run.
    nlohmann::ordered_json echo() const;
};

/// One diagnostic line per offending key.
class ConfigError : public std::runtime_error {
   public:
    explicit ConfigError(std::vector<std::string> lines);
    const std::vector<std::string> &lines() const {
        return lines_;
    }

   private:
    std::vector<std::string> lines_;
};

/// Thrown for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> &subcommands();

/// Keys accepted by a subcommand (without the leading dashes).
const std::vector<std::string> &keys_for(const std::string &command);

/// Reads a JSON object of key -> value. Unknown keys for the command are
/// rejected.
RawConfig read_config_file(const std::string &command, const std::string &json_text);

/// Converts and validates merged raw keys.
RunConfig build_config(const std::string &command, const RawConfig &raw);

/// argv[0] is the program name, argv[1] the subcommand. A --config file is
/// read first and explicit flags override its values.
RunConfig parse_config(const std::vector<std::string> &args);

std::string to_string(OutputFormat format);

}  // namespace shordecoh::cli

#endif
