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

#include "cli/config.h"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "shordecoh/errors.h"

namespace shordecoh::cli {

namespace {

const std::set<std::string> kFlagKeys = {"force", "timing", "max-factorable"};

const std::vector<std::string> kCommon = {"N",       "x",        "q",     "kernel", "seed",
                                          "output",  "format",   "threads", "log-base", "force",
                                          "timing"};

std::vector<std::string> with_common(std::vector<std::string> extra, bool include_kernel = true) {
    std::vector<std::string> keys;
    for (const auto &key : kCommon) {
        if (include_kernel || key != "kernel") {
            keys.push_back(key);
        }
    }
    keys.insert(keys.end(), extra.begin(), extra.end());
    return keys;
}

const std::map<std::string, std::vector<std::string>> &key_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"spectrum", with_common({"k"})},
        {"sample", with_common({"trials", "method"})},
        {"factor", with_common({"max-trials", "method"})},
        {"sweep", with_common({"param", "values", "trials", "method"}, false)},
        {"fit-beta", with_common({})},
        {"budget",
         {"alpha", "L", "N", "mu", "eta", "delta", "cutoff", "tau-rel", "lambda-db", "delta-x",
          "rho-uu", "rho-dd", "rho-ud-re", "rho-ud-im", "max-factorable", "output", "format",
          "log-base", "timing"}},
    };
    return table;
}

/// Collects one diagnostic per failing key while converting.
class Converter {
   public:
    explicit Converter(const RawConfig &raw) : raw_(raw) {
    }

    bool has(const std::string &key) const {
        return raw_.count(key) > 0;
    }

    template <typename Fn>
    void with(const std::string &key, Fn &&fn) {
        auto it = raw_.find(key);
        if (it == raw_.end()) {
            return;
        }
        try {
            fn(it->second);
        } catch (const std::exception &e) {
            fail(key, e.what());
        }
    }

    void fail(const std::string &key, const std::string &why) {
        errors_.push_back("invalid --" + key + ": " + why);
    }

    void require(const std::string &key) {
        if (!has(key)) {
            errors_.push_back("missing required key --" + key);
        }
    }

    const std::vector<std::string> &errors() const {
        return errors_;
    }

   private:
    const RawConfig &raw_;
    std::vector<std::string> errors_;
};

uint64_t to_u64(const std::string &text) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("'" + text + "' is not a non-negative integer");
    }
    return value;
}

double to_double(const std::string &text) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("'" + text + "' is not a number");
    }
    return value;
}

bool to_bool(const std::string &text) {
    if (text == "true" || text == "1") {
        return true;
    }
    if (text == "false" || text == "0") {
        return false;
    }
    throw std::invalid_argument("'" + text + "' is not a boolean");
}

std::vector<double> to_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(to_double(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty value list");
    }
    return out;
}

std::string json_to_raw(const nlohmann::json &value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_boolean()) {
        return value.get<bool>() ? "true" : "false";
    }
    if (value.is_number_unsigned() || value.is_number_integer()) {
        return value.dump();
    }
    if (value.is_number_float()) {
        return value.dump();
    }
    if (value.is_array()) {
        std::string joined;
        for (const auto &item : value) {
            if (!item.is_number()) {
                throw std::invalid_argument("list entries must be numbers");
            }
            joined += (joined.empty() ? "" : ",") + item.dump();
        }
        return joined;
    }
    throw std::invalid_argument("unsupported value type");
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> lines)
    : std::runtime_error(lines.empty() ? std::string("invalid configuration") : lines.front()),
      lines_(std::move(lines)) {
}

nlohmann::ordered_json RunConfig::echo() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    out["command"] = command;
    for (const auto &[key, value] : raw) {
        out[key] = value;
    }
    return out;
}

const std::vector<std::string> &subcommands() {
    static const std::vector<std::string> names = {"spectrum", "sample",   "factor",
                                                   "sweep",    "fit-beta", "budget"};
    return names;
}

const std::vector<std::string> &keys_for(const std::string &command) {
    auto it = key_table().find(command);
    if (it == key_table().end()) {
        throw ConfigError({"unknown subcommand '" + command + "'"});
    }
    return it->second;
}

RawConfig read_config_file(const std::string &command, const std::string &json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError({std::string("config file is not valid JSON: ") + e.what()});
    }
    if (!doc.is_object()) {
        throw ConfigError({"config file must hold a JSON object"});
    }
    const auto &allowed = keys_for(command);
    RawConfig raw;
    std::vector<std::string> errors;
    for (const auto &[key, value] : doc.items()) {
        if (key == "command") {
            if (!value.is_string() || value.get<std::string>() != command) {
                errors.push_back("invalid command: config file is for '" +
                                 (value.is_string() ? value.get<std::string>() : value.dump()) +
                                 "', not '" + command + "'");
            }
            continue;
        }
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            errors.push_back("unknown key --" + key + " for " + command);
            continue;
        }
        try {
            raw[key] = json_to_raw(value);
        } catch (const std::exception &e) {
            errors.push_back("invalid --" + key + ": " + e.what());
        }
    }
    if (!errors.empty()) {
        throw ConfigError(std::move(errors));
    }
    return raw;
}

RunConfig build_config(const std::string &command, const RawConfig &raw) {
    const auto &allowed = keys_for(command);
    RunConfig cfg;
    cfg.command = command;
    cfg.raw = raw;
    Converter conv(raw);
    for (const auto &[key, value] : raw) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            conv.fail(key, "not accepted by " + command);
        }
    }

    conv.with("output", [&](const std::string &v) {
        if (v.empty()) {
            throw std::invalid_argument("empty path");
        }
        cfg.output = v;
    });
    conv.with("format", [&](const std::string &v) {
        if (v == "csv") {
            cfg.format = OutputFormat::kCsv;
        } else if (v == "json") {
            cfg.format = OutputFormat::kJson;
        } else if (v == "gnuplot") {
            if (command != "spectrum" && command != "sweep") {
                throw std::invalid_argument("gnuplot output is only available for spectrum and sweep");
            }
            cfg.format = OutputFormat::kGnuplot;
        } else {
            throw std::invalid_argument("expected csv, json or gnuplot");
        }
    });
    conv.with("log-base", [&](const std::string &v) {
        if (v == "e" || v == "natural") {
            cfg.log_base = LogBase::kNatural;
        } else if (v == "2" || v == "binary") {
            cfg.log_base = LogBase::kBinary;
        } else if (v == "10" || v == "decimal") {
            cfg.log_base = LogBase::kDecimal;
        } else {
            throw std::invalid_argument("expected e, 2 or 10");
        }
    });
    conv.with("timing", [&](const std::string &v) { cfg.timing = to_bool(v); });
    conv.with("N", [&](const std::string &v) { cfg.n = to_u64(v); });

    if (command == "budget") {
        auto real = [&](const char *key, std::optional<double> &slot) {
            conv.with(key, [&](const std::string &v) { slot = to_double(v); });
        };
        real("alpha", cfg.alpha);
        real("L", cfg.digit_length);
        real("mu", cfg.mu);
        real("eta", cfg.eta);
        real("delta", cfg.delta);
        real("cutoff", cfg.cutoff);
        real("tau-rel", cfg.tau_rel);
        real("lambda-db", cfg.lambda_db);
        real("delta-x", cfg.delta_x);
        real("rho-uu", cfg.rho_uu);
        real("rho-dd", cfg.rho_dd);
        real("rho-ud-re", cfg.rho_ud_re);
        real("rho-ud-im", cfg.rho_ud_im);
        conv.with("max-factorable", [&](const std::string &v) { cfg.max_factorable_only = to_bool(v); });
        if (!conv.errors().empty()) {
            throw ConfigError(conv.errors());
        }
        return cfg;
    }

    conv.require("N");
    conv.require("x");
    conv.with("x", [&](const std::string &v) { cfg.x = to_u64(v); });
    conv.with("q", [&](const std::string &v) {
        cfg.q = to_u64(v);
        if (!is_power_of_two(*cfg.q) || *cfg.q < 2) {
            throw std::invalid_argument("q must be a power of two >= 2");
        }
    });
    conv.with("kernel", [&](const std::string &v) { cfg.kernel = Kernel::parse(v); });
    conv.with("k", [&](const std::string &v) { cfg.k = to_u64(v); });
    conv.with("seed", [&](const std::string &v) { cfg.seed = to_u64(v); });
    conv.with("trials", [&](const std::string &v) {
        cfg.trials = to_u64(v);
        if (cfg.trials == 0) {
            throw std::invalid_argument("must be >= 1");
        }
    });
    conv.with("max-trials", [&](const std::string &v) {
        cfg.max_trials = to_u64(v);
        if (cfg.max_trials == 0) {
            throw std::invalid_argument("must be >= 1");
        }
    });
    conv.with("threads", [&](const std::string &v) {
        uint64_t t = to_u64(v);
        if (t == 0 || t > 256) {
            throw std::invalid_argument("must lie in [1, 256]");
        }
        cfg.threads = static_cast<unsigned>(t);
    });
    conv.with("method", [&](const std::string &v) {
        if (v == "spectrum") {
            cfg.method = SamplingMethod::kSpectrum;
        } else if (v == "dephasing") {
            cfg.method = SamplingMethod::kDephasing;
        } else {
            throw std::invalid_argument("expected spectrum or dephasing");
        }
    });
    conv.with("force", [&](const std::string &v) { cfg.force = to_bool(v); });

    if (cfg.method == SamplingMethod::kDephasing && cfg.kernel.kind() == Kernel::Kind::kConstantBeta) {
        conv.fail("method", "dephasing sampling needs a coherent or xi kernel");
    }
    if (command == "fit-beta") {
        if (!conv.has("kernel") || cfg.kernel.kind() != Kernel::Kind::kHamming) {
            conv.fail("kernel", "fit-beta needs an xi:<real> kernel");
        }
    }
    if (command == "sweep") {
        conv.with("param", [&](const std::string &v) {
            if (v == "beta") {
                cfg.sweep_param = SweepParam::kBeta;
            } else if (v == "xi") {
                cfg.sweep_param = SweepParam::kXi;
            } else {
                throw std::invalid_argument("expected beta or xi");
            }
        });
        if (cfg.sweep_param == SweepParam::kBeta) {
            cfg.sweep_values = {0.0, 0.25, 0.5, 0.75, 1.0};
        } else {
            cfg.sweep_values = {0.0, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0};
        }
        conv.with("values", [&](const std::string &v) {
            auto values = to_list(v);
            for (double value : values) {
                if (cfg.sweep_param == SweepParam::kBeta && !(value >= 0 && value <= 1)) {
                    throw std::invalid_argument("beta values must lie in [0, 1]");
                }
                if (cfg.sweep_param == SweepParam::kXi && !(value >= 0)) {
                    throw std::invalid_argument("xi values must be >= 0");
                }
            }
            cfg.sweep_values = std::move(values);
        });
        std::sort(cfg.sweep_values.begin(), cfg.sweep_values.end());
        cfg.sweep_values.erase(std::unique(cfg.sweep_values.begin(), cfg.sweep_values.end()),
                               cfg.sweep_values.end());
        if (cfg.method == SamplingMethod::kDephasing && cfg.sweep_param == SweepParam::kBeta) {
            conv.fail("method", "dephasing sampling cannot sweep beta");
        }
    }

    if (!conv.errors().empty()) {
        throw ConfigError(conv.errors());
    }
    return cfg;
}

namespace {

const std::map<std::string, std::string> &subcommand_help() {
    static const std::map<std::string, std::string> help{
        {"spectrum", "Probability of each measured c, joint for one k or marginal"},
        {"sample", "Draw seeded (k, c) outcomes"},
        {"factor", "Run trials until the factors of N are found"},
        {"sweep", "Success rate and peak metrics over a grid of beta or xi"},
        {"fit-beta", "Constant beta closest to the Hamming(xi) spectrum"},
        {"budget", "Coherence budget calculators"},
    };
    return help;
}

const std::map<std::string, std::string> &key_help() {
    static const std::map<std::string, std::string> help{
        {"N", "Number to factor"},
        {"x", "Base, coprime to N"},
        {"q", "Register size, a power of two (default: smallest power of two >= N^2)"},
        {"kernel", "coherent | xi:<value> | beta:<value>"},
        {"k", "Offset k for a joint spectrum; marginal when absent"},
        {"seed", "Master seed"},
        {"trials", "Number of trials or draws"},
        {"max-trials", "Trial limit before giving up"},
        {"method", "spectrum | dephasing"},
        {"param", "beta | xi"},
        {"values", "Comma-separated grid values"},
        {"output", "Output path, - for stdout"},
        {"format", "csv | json | gnuplot"},
        {"threads", "Worker threads"},
        {"log-base", "e | 2 | 10, base of the digit length L"},
        {"force", "Skip the q guard on double-sum spectra"},
        {"timing", "Add elapsed time to JSON output"},
        {"alpha", "Coherence loss per operation"},
        {"L", "Digit length"},
        {"mu", "Spin-boson coupling"},
        {"eta", "Spin-boson friction"},
        {"delta", "Level splitting"},
        {"cutoff", "Bath cutoff frequency"},
        {"tau-rel", "Relaxation time"},
        {"lambda-db", "Thermal de Broglie wavelength"},
        {"delta-x", "Separation of the superposed states"},
        {"rho-uu", "Probe density matrix, up-up entry"},
        {"rho-dd", "Probe density matrix, down-down entry"},
        {"rho-ud-re", "Probe density matrix, up-down entry (real part)"},
        {"rho-ud-im", "Probe density matrix, up-down entry (imaginary part)"},
        {"max-factorable", "Report the largest factorable N"},
    };
    return help;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string> &args) {
    CLI::App app{"Decoherence in quantum order finding: spectra, sampling, factoring, budgets",
                 args.empty() ? "shordecoh" : args.front()};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::map<std::string, std::map<std::string, std::string>> storage;
    std::map<std::string, std::string> config_paths;
    std::map<std::string, CLI::App *> subs;
    for (const auto &name : subcommands()) {
        CLI::App *sub = app.add_subcommand(name, subcommand_help().at(name));
        subs[name] = sub;
        sub->add_option("--config", config_paths[name], "JSON config file; flags override it");
        for (const auto &key : keys_for(name)) {
            if (kFlagKeys.count(key)) {
                sub->add_flag("--" + key, key_help().at(key));
            } else {
                sub->add_option("--" + key, storage[name][key], key_help().at(key));
            }
        }
    }

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp &) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError &e) {
        throw ConfigError({e.what()});
    }

    for (const auto &[name, sub] : subs) {
        if (!sub->parsed()) {
            continue;
        }
        RawConfig merged;
        if (sub->count("--config") > 0) {
            std::ifstream in(config_paths[name]);
            if (!in) {
                throw ConfigError({"invalid --config: cannot read '" + config_paths[name] + "'"});
            }
            std::stringstream text;
            text << in.rdbuf();
            merged = read_config_file(name, text.str());
        }
        for (const auto &key : keys_for(name)) {
            if (sub->count("--" + key) == 0) {
                continue;
            }
            merged[key] = kFlagKeys.count(key) ? "true" : storage[name][key];
        }
        return build_config(name, merged);
    }
    throw ConfigError({"a subcommand is required"});
}

std::string to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::kCsv:
            return "csv";
        case OutputFormat::kJson:
            return "json";
        case OutputFormat::kGnuplot:
            return "gnuplot";
    }
    return "csv";
}

}  // namespace shordecoh::cli
