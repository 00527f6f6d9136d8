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

#ifndef SHORDECOH_CLI_EMIT_H
#define SHORDECOH_CLI_EMIT_H

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cli/config.h"
#include "shordecoh/instance.h"
#include "shordecoh/spectrum.h"

namespace shordecoh::cli {

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// 17 significant digits, enough for any double to round-trip.
std::string format_real(double value);
/// Scientific form with the shortest exact mantissa, e.g. 2.691650390625e-2.
std::string format_probability(double value);

nlohmann::ordered_json instance_json(const ProblemInstance &instance);

nlohmann::ordered_json spectrum_payload(const Spectrum &spectrum, const ProblemInstance &instance,
                                        const Kernel &kernel);

/// {config, version, [timing], payload}. Timing is only present when the
/// run asked for it, so default output stays byte-reproducible.
nlohmann::ordered_json envelope(const RunConfig &config, nlohmann::ordered_json payload,
                                std::optional<double> elapsed_ms = std::nullopt);

std::string render_json(const nlohmann::ordered_json &doc);

/// csv: "c,p" header then q rows. gnuplot: same rows behind a commented
/// preamble that records the config. json: the full envelope.
std::string render_spectrum(const Spectrum &spectrum, const ProblemInstance &instance,
                            const RunConfig &config, std::optional<double> elapsed_ms = std::nullopt);

/// Writes to config.output, or to `stdout_stream` when the path is "-".
/// Throws IoError.
void write_output(const RunConfig &config, const std::string &content, std::ostream &stdout_stream);

/// render_spectrum + write_output.
void emit_spectrum(const Spectrum &spectrum, const ProblemInstance &instance,
                   const RunConfig &config, std::ostream &stdout_stream);

}  // namespace shordecoh::cli

#endif
