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

#include "cli/emit.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "shordecoh/version.h"

namespace shordecoh::cli {

std::string format_real(double value) {
    // Shortest of 15..17 significant digits that reads back exactly.
    char buf[40];
    for (int digits = 15; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
        if (std::strtod(buf, nullptr) == value) {
            break;
        }
    }
    return buf;
}

std::string format_probability(double value) {
    if (value == 0) {
        return "0";
    }
    char buf[40];
    for (int digits = 1; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof(buf), "%.*e", digits - 1, value);
        if (std::strtod(buf, nullptr) == value) {
            break;
        }
    }
    // 2.5e-02 -> 2.5e-2
    std::string text(buf);
    std::size_t e = text.find('e');
    std::string mantissa = text.substr(0, e);
    int exponent = std::atoi(text.c_str() + e + 1);
    return mantissa + 'e' + std::to_string(exponent);
}

nlohmann::ordered_json instance_json(const ProblemInstance &instance) {
    nlohmann::ordered_json out;
    out["N"] = instance.n;
    out["x"] = instance.x;
    out["q"] = instance.q;
    out["r"] = instance.r;
    out["bits"] = instance.bits;
    out["digit_length"] = instance.digit_length;
    out["q_outside_standard_bound"] = instance.q_outside_standard_bound;
    return out;
}

nlohmann::ordered_json spectrum_payload(const Spectrum &spectrum, const ProblemInstance &instance,
                                        const Kernel &kernel) {
    nlohmann::ordered_json out;
    out["type"] = "spectrum";
    out["scope"] = spectrum.is_marginal() ? "marginal" : "joint";
    out["k"] = spectrum.k ? nlohmann::ordered_json(*spectrum.k) : nlohmann::ordered_json(nullptr);
    out["kernel"] = kernel.to_string();
    out["instance"] = instance_json(instance);
    out["values"] = spectrum.values;
    return out;
}

nlohmann::ordered_json envelope(const RunConfig &config, nlohmann::ordered_json payload,
                                std::optional<double> elapsed_ms) {
    nlohmann::ordered_json out;
    out["config"] = config.echo();
    out["version"] = kVersion;
    if (elapsed_ms) {
        out["timing"] = {{"elapsed_ms", *elapsed_ms}};
    }
    out["payload"] = std::move(payload);
    return out;
}

std::string render_json(const nlohmann::ordered_json &doc) {
    return doc.dump(2) + "\n";
}

std::string render_spectrum(const Spectrum &spectrum, const ProblemInstance &instance,
                            const RunConfig &config, std::optional<double> elapsed_ms) {
    if (config.format == OutputFormat::kJson) {
        return render_json(envelope(config, spectrum_payload(spectrum, instance, config.kernel), elapsed_ms));
    }
    std::ostringstream os;
    if (config.format == OutputFormat::kGnuplot) {
        os << "# shordecoh " << kVersion << " spectrum\n";
        os << "# config: " << config.echo().dump() << "\n";
        os << "# " << instance.describe() << " kernel=" << config.kernel.to_string() << "\n";
        os << "# set datafile separator ','\n";
        os << "# plot '" << (config.output == "-" ? "spectrum.dat" : config.output)
           << "' using 1:2 with impulses title 'P(c)'\n";
        os << "# c,p\n";
    } else {
        os << "c,p\n";
    }
    for (std::size_t c = 0; c < spectrum.values.size(); ++c) {
        os << c << ',' << format_probability(spectrum.values[c]) << '\n';
    }
    return os.str();
}

void write_output(const RunConfig &config, const std::string &content, std::ostream &stdout_stream) {
    if (config.output == "-") {
        stdout_stream << content;
        if (!stdout_stream) {
            throw IoError("failed to write to stdout");
        }
        return;
    }
    std::ofstream out(config.output, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + config.output + "' for writing");
    }
    out << content;
    out.close();
    if (!out) {
        throw IoError("failed writing '" + config.output + "'");
    }
}

void emit_spectrum(const Spectrum &spectrum, const ProblemInstance &instance,
                   const RunConfig &config, std::ostream &stdout_stream) {
    write_output(config, render_spectrum(spectrum, instance, config), stdout_stream);
}

}  // namespace shordecoh::cli
