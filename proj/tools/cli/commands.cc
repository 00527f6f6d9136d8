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

#include "cli/commands.h"

#include <chrono>
#include <complex>
#include <optional>
#include <sstream>

#include "cli/emit.h"
#include "shordecoh/budget.h"
#include "shordecoh/errors.h"
#include "shordecoh/recovery.h"
#include "shordecoh/sampler.h"
#include "shordecoh/spectrum.h"

namespace shordecoh::cli {

namespace {

using Clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

class Stopwatch {
   public:
    Stopwatch() : start_(Clock::now()) {
    }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

   private:
    Clock::time_point start_;
};

ProblemInstance make_instance(const RunConfig &config, std::ostream &err) {
    InstanceLimits limits;
    limits.log_base = config.log_base;
    QPolicy policy = config.q ? QPolicy::fixed(*config.q) : QPolicy::standard();
    ProblemInstance instance = build_instance(config.n, config.x, policy, limits);
    if (instance.q_outside_standard_bound) {
        err << "warning: q=" << instance.q << " lies outside [N^2, 2N^2) for N=" << instance.n
            << "\n";
    }
    return instance;
}

SpectrumOptions spectrum_options(const RunConfig &config) {
    SpectrumOptions options;
    options.threads = config.threads;
    options.force = config.force;
    return options;
}

RunOptions run_options(const RunConfig &config) {
    RunOptions options;
    options.threads = config.threads;
    options.method = config.method;
    options.spectrum = spectrum_options(config);
    return options;
}

std::optional<double> timing(const RunConfig &config, const Stopwatch &watch) {
    return config.timing ? std::optional<double>(watch.elapsed_ms()) : std::nullopt;
}

ordered_json factors_json(const std::optional<FactorPair> &factors) {
    if (!factors) {
        return nullptr;
    }
    return ordered_json::array({factors->first, factors->second});
}

ordered_json trial_json(const TrialRecord &record) {
    ordered_json out;
    out["stream"] = record.stream_index;
    out["k"] = record.outcome.k;
    out["c"] = record.outcome.c;
    out["candidates"] = record.candidates;
    out["period"] = record.period ? ordered_json(*record.period) : ordered_json(nullptr);
    out["factors"] = factors_json(record.factors);
    out["success"] = record.success;
    return out;
}

int run_spectrum(const RunConfig &config, std::ostream &out, std::ostream &err) {
    Stopwatch watch;
    ProblemInstance instance = make_instance(config, err);
    SpectrumOptions options = spectrum_options(config);
    Spectrum spectrum;
    if (config.k) {
        spectrum = config.kernel.kind() == Kernel::Kind::kCoherent
                       ? coherent_joint(instance, *config.k)
                       : decohered_joint(instance, *config.k, config.kernel, options);
    } else {
        spectrum = marginal(instance, config.kernel, options);
    }
    write_output(config, render_spectrum(spectrum, instance, config, timing(config, watch)), out);
    return kExitOk;
}

int run_sample(const RunConfig &config, std::ostream &out, std::ostream &err) {
    Stopwatch watch;
    ProblemInstance instance = make_instance(config, err);
    SeededGenerator gen(config.seed, 0);
    std::vector<Outcome> outcomes;
    outcomes.reserve(config.trials);
    if (config.method == SamplingMethod::kDephasing) {
        DephasingSampler sampler(instance, config.kernel.xi());
        for (uint64_t i = 0; i < config.trials; ++i) {
            outcomes.push_back(sampler.sample(gen));
        }
    } else {
        OutcomeSampler sampler(instance, config.kernel, spectrum_options(config));
        for (uint64_t i = 0; i < config.trials; ++i) {
            outcomes.push_back(sampler.sample(gen));
        }
    }

    if (config.format == OutputFormat::kJson) {
        ordered_json payload;
        payload["type"] = "samples";
        payload["kernel"] = config.kernel.to_string();
        payload["instance"] = instance_json(instance);
        ordered_json ks = ordered_json::array(), cs = ordered_json::array();
        for (const Outcome &o : outcomes) {
            ks.push_back(o.k);
            cs.push_back(o.c);
        }
        payload["k"] = std::move(ks);
        payload["c"] = std::move(cs);
        write_output(config, render_json(envelope(config, std::move(payload), timing(config, watch))), out);
        return kExitOk;
    }
    std::ostringstream os;
    os << "k,c\n";
    for (const Outcome &o : outcomes) {
        os << o.k << ',' << o.c << '\n';
    }
    write_output(config, os.str(), out);
    return kExitOk;
}

int run_factor(const RunConfig &config, std::ostream &out, std::ostream &err) {
    Stopwatch watch;
    ProblemInstance instance = make_instance(config, err);
    FactorReport report =
        factor_number(instance, config.kernel, config.max_trials, config.seed, run_options(config));

    if (config.format == OutputFormat::kJson) {
        ordered_json payload;
        payload["type"] = "factor";
        payload["kernel"] = config.kernel.to_string();
        payload["instance"] = instance_json(instance);
        payload["factors"] = factors_json(report.factors);
        payload["trials_used"] = report.trials_used;
        payload["exhausted"] = report.exhausted;
        payload["diagnostic"] = report.diagnostic;
        ordered_json transcript = ordered_json::array();
        for (const TrialRecord &record : report.trials) {
            transcript.push_back(trial_json(record));
        }
        payload["trials"] = std::move(transcript);
        write_output(config, render_json(envelope(config, std::move(payload), timing(config, watch))), out);
    } else {
        std::ostringstream os;
        os << "stream,k,c,period,factor1,factor2,success\n";
        for (const TrialRecord &record : report.trials) {
            os << record.stream_index << ',' << record.outcome.k << ',' << record.outcome.c << ',';
            if (record.period) {
                os << *record.period;
            }
            os << ',';
            if (record.factors) {
                os << record.factors->first << ',' << record.factors->second;
            } else {
                os << ',';
            }
            os << ',' << (record.success ? 1 : 0) << '\n';
        }
        write_output(config, os.str(), out);
    }

    if (report.exhausted) {
        err << "factoring exhausted after " << report.trials_used << " trials: " << report.diagnostic
            << "\n";
        return kExitExhausted;
    }
    err << "factors of " << instance.n << ": " << report.factors->first << " x "
        << report.factors->second << " (" << report.trials_used << " trials)\n";
    return kExitOk;
}

int run_sweep(const RunConfig &config, std::ostream &out, std::ostream &err) {
    Stopwatch watch;
    ProblemInstance instance = make_instance(config, err);
    const SpectrumOptions options = spectrum_options(config);
    const RunOptions trial_options = run_options(config);
    const char *param = config.sweep_param == SweepParam::kBeta ? "beta" : "xi";

    ordered_json rows = ordered_json::array();
    std::ostringstream os;
    if (config.format == OutputFormat::kGnuplot) {
        os << "# shordecoh sweep over " << param << "\n";
        os << "# config: " << config.echo().dump() << "\n";
        os << "# set datafile separator ','\n";
        os << "# param,success_rate,on_peak_mass,floor_to_peak\n";
    } else {
        os << "param,success_rate,on_peak_mass,floor_to_peak\n";
    }
    for (double value : config.sweep_values) {
        Kernel kernel = config.sweep_param == SweepParam::kBeta ? Kernel::constant_beta(value)
                                                                : Kernel::hamming(value);
        SuccessEstimate estimate =
            estimate_success_rate(instance, kernel, config.trials, config.seed, trial_options);
        PeakMetrics metrics = peak_metrics(marginal(instance, kernel, options), instance);
        os << format_real(value) << ',' << format_real(estimate.rate) << ','
           << format_real(metrics.on_peak_mass) << ',' << format_real(metrics.floor_to_peak_ratio)
           << '\n';
        ordered_json row;
        row["param"] = value;
        row["success_rate"] = estimate.rate;
        row["standard_error"] = estimate.standard_error();
        row["successes"] = estimate.successes;
        row["trials"] = estimate.trials;
        row["on_peak_mass"] = metrics.on_peak_mass;
        row["floor_to_peak"] = metrics.floor_to_peak_ratio;
        rows.push_back(std::move(row));
    }

    if (config.format == OutputFormat::kJson) {
        ordered_json payload;
        payload["type"] = "sweep";
        payload["param"] = param;
        payload["instance"] = instance_json(instance);
        payload["uniform_baseline"] = uniform_success_probability(instance);
        payload["rows"] = std::move(rows);
        write_output(config, render_json(envelope(config, std::move(payload), timing(config, watch))), out);
    } else {
        write_output(config, os.str(), out);
    }
    return kExitOk;
}

int run_fit_beta(const RunConfig &config, std::ostream &out, std::ostream &err) {
    Stopwatch watch;
    ProblemInstance instance = make_instance(config, err);
    BetaFit fit = fit_constant_beta(instance, config.kernel.xi(), spectrum_options(config));
    if (config.format == OutputFormat::kJson) {
        ordered_json payload;
        payload["type"] = "fit";
        payload["instance"] = instance_json(instance);
        payload["xi"] = config.kernel.xi();
        payload["beta"] = fit.beta;
        payload["residual"] = fit.residual;
        write_output(config, render_json(envelope(config, std::move(payload), timing(config, watch))), out);
    } else {
        write_output(config,
                     "xi,beta,residual\n" + format_real(config.kernel.xi()) + ',' +
                         format_real(fit.beta) + ',' + format_real(fit.residual) + '\n',
                     out);
    }
    return kExitOk;
}

double digit_length_of(uint64_t n, LogBase base) {
    switch (base) {
        case LogBase::kBinary:
            return std::log2(static_cast<double>(n));
        case LogBase::kDecimal:
            return std::log10(static_cast<double>(n));
        case LogBase::kNatural:
            break;
    }
    return std::log(static_cast<double>(n));
}

int run_budget(const RunConfig &config, std::ostream &out, std::ostream & /*err*/) {
    Stopwatch watch;
    // Ordered (name, value) pairs; csv and json render the same list.
    ordered_json results;
    results["estimate"] = "order-of-magnitude";

    std::optional<SpinBosonParams> spin_boson;
    if (config.mu || config.eta || config.delta || config.cutoff) {
        if (!(config.mu && config.eta)) {
            throw ConfigError({"invalid --mu: spin-boson estimates need both --mu and --eta"});
        }
        spin_boson = SpinBosonParams{*config.mu, *config.eta, config.delta.value_or(0),
                                     config.cutoff.value_or(0)};
    }

    std::optional<double> alpha = config.alpha;
    if (!alpha && spin_boson && config.delta && config.cutoff) {
        double bracket = spin_boson_bracket(*spin_boson);
        alpha = alpha_spin_boson(*spin_boson);
        results["spin_boson_bracket"] = bracket;
        if (bracket < 0) {
            results["alpha_note"] = "bracket is negative; alpha uses its magnitude";
        }
        results["alpha"] = *alpha;
    } else if (alpha) {
        results["alpha"] = *alpha;
    }

    if (config.max_factorable_only) {
        MaxFactorable max;
        if (alpha) {
            max = max_factorable(*alpha);
        } else if (spin_boson) {
            max = max_factorable(*spin_boson);
        } else {
            throw ConfigError({"invalid --max-factorable: needs --alpha or --mu and --eta"});
        }
        results["ln_n_max"] = max.ln_n_max;
        results["n_max"] = max.n_max ? ordered_json(*max.n_max) : ordered_json(nullptr);
    } else {
        std::optional<double> digit_length = config.digit_length;
        if (!digit_length && config.n >= 2) {
            digit_length = digit_length_of(config.n, config.log_base);
        }
        bool any = false;
        if (alpha && digit_length) {
            BudgetReport report = budget_report(*alpha, *digit_length);
            results["L"] = report.digit_length;
            results["n_op"] = report.n_op;
            results["beta_total"] = report.beta_total.beta;
            results["beta_saturated"] = report.beta_total.saturated;
            results["trials"] = report.trials ? ordered_json(*report.trials) : ordered_json("divergent");
            results["classical_cost"] = report.efficiency.classical_cost;
            results["efficient"] = report.efficiency.efficient;
            any = true;
        }
        if (alpha && *alpha > 0) {
            MaxFactorable max = max_factorable(*alpha);
            results["ln_n_max"] = max.ln_n_max;
            results["n_max"] = max.n_max ? ordered_json(*max.n_max) : ordered_json(nullptr);
            any = true;
        } else if (spin_boson) {
            MaxFactorable max = max_factorable(*spin_boson);
            results["ln_n_max_spin_boson"] = max.ln_n_max;
            any = true;
        }
        if (config.rho_uu || config.rho_dd || config.rho_ud_re || config.rho_ud_im) {
            TwoLevelDensity rho = TwoLevelDensity::make(
                config.rho_uu.value_or(0.5), config.rho_dd.value_or(0.5),
                {config.rho_ud_re.value_or(0), config.rho_ud_im.value_or(0)});
            results["beta_visibility"] = beta_from_visibility(rho);
            any = true;
        }
        if (config.tau_rel || config.lambda_db || config.delta_x) {
            results["tau_dec"] = decoherence_time(TimescaleParams{
                config.tau_rel.value_or(0), config.lambda_db.value_or(0), config.delta_x.value_or(0)});
            any = true;
        }
        if (!any) {
            throw ConfigError({"budget needs --alpha (with --L or --N), spin-boson, "
                               "density-matrix or timescale parameters"});
        }
    }

    if (config.format == OutputFormat::kJson) {
        ordered_json payload;
        payload["type"] = "budget";
        for (auto &[key, value] : results.items()) {
            payload[key] = value;
        }
        write_output(config, render_json(envelope(config, std::move(payload), timing(config, watch))), out);
        return kExitOk;
    }
    std::ostringstream os;
    os << "quantity,value\n";
    for (const auto &[key, value] : results.items()) {
        os << key << ',';
        if (value.is_number_float()) {
            os << format_real(value.get<double>());
        } else if (value.is_string()) {
            os << value.get<std::string>();
        } else {
            os << value.dump();
        }
        os << '\n';
    }
    write_output(config, os.str(), out);
    return kExitOk;
}

}  // namespace

int dispatch(const RunConfig &config, std::ostream &out, std::ostream &err) {
    if (config.command == "spectrum") {
        return run_spectrum(config, out, err);
    }
    if (config.command == "sample") {
        return run_sample(config, out, err);
    }
    if (config.command == "factor") {
        return run_factor(config, out, err);
    }
    if (config.command == "sweep") {
        return run_sweep(config, out, err);
    }
    if (config.command == "fit-beta") {
        return run_fit_beta(config, out, err);
    }
    if (config.command == "budget") {
        return run_budget(config, out, err);
    }
    throw ConfigError({"unknown subcommand '" + config.command + "'"});
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig config;
    try {
        config = parse_config(args);
    } catch (const HelpRequested &help) {
        out << help.what();
        return kExitOk;
    } catch (const ConfigError &e) {
        for (const auto &line : e.lines()) {
            err << "error: " << line << "\n";
        }
        return kExitUsage;
    }

    try {
        return dispatch(config, out, err);
    } catch (const ConfigError &e) {
        for (const auto &line : e.lines()) {
            err << "error: " << line << "\n";
        }
        return kExitUsage;
    } catch (const NotCoprime &e) {
        err << "error: " << e.what() << " (" << e.shared_factor << " is a free factor of N)\n";
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimit &e) {
        err << "error: resource limit: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace shordecoh::cli
