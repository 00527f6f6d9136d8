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

#include "shordecoh/recovery.h"

#include <algorithm>
#include <cmath>

#include "shordecoh/errors.h"
#include "shordecoh/parallel.h"

namespace shordecoh {

namespace {

/// Strips prime factors from a verified exponent while x^e = 1 still holds.
uint64_t reduce_to_order(uint64_t e, uint64_t x, uint64_t n) {
    std::vector<uint64_t> primes;
    uint64_t rest = e;
    for (uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        primes.push_back(rest);
    }
    for (uint64_t p : primes) {
        while (e % p == 0 && mod_pow(x, e / p, n) == 1) {
            e /= p;
        }
    }
    return e;
}

}  // namespace

PeriodRecovery recover_period(uint64_t c, const ProblemInstance &instance) {
    if (c >= instance.q) {
        throw DomainError("c=" + std::to_string(c) + " outside [0, q)");
    }
    PeriodRecovery out;
    if (c == 0) {
        return out;
    }
    auto test = [&](uint64_t d) {
        out.candidates.push_back(d);
        if (mod_pow(instance.x, d, instance.n) == 1) {
            out.period = reduce_to_order(d, instance.x, instance.n);
            return true;
        }
        return false;
    };

    uint64_t last = 0;
    for (const Rational &conv : convergents(c, instance.q)) {
        if (conv.den > instance.n) {
            break;
        }
        if (conv.den == last) {
            continue;
        }
        last = conv.den;
        if (test(last)) {
            return out;
        }
    }
    // Denominator 1 is the lambda = 0 peak and says nothing about r.
    if (last >= 2) {
        for (uint64_t t = 2; t * last <= instance.n; ++t) {
            if (test(t * last)) {
                return out;
            }
        }
    }
    return out;
}

bool TrialRecord::operator==(const TrialRecord &other) const {
    auto same_factors = [](const std::optional<FactorPair> &a, const std::optional<FactorPair> &b) {
        if (a.has_value() != b.has_value()) {
            return false;
        }
        return !a || (a->first == b->first && a->second == b->second);
    };
    return master_seed == other.master_seed && stream_index == other.stream_index &&
           outcome == other.outcome && candidates == other.candidates && period == other.period &&
           same_factors(factors, other.factors) && failure == other.failure &&
           success == other.success;
}

TrialRecord evaluate_outcome(const ProblemInstance &instance, Outcome outcome) {
    TrialRecord record;
    record.outcome = outcome;
    PeriodRecovery recovery = recover_period(outcome.c, instance);
    record.candidates = std::move(recovery.candidates);
    record.period = recovery.period;
    if (record.period) {
        FactorAttempt attempt = factors_from_order(instance.x, instance.n, *record.period);
        record.factors = attempt.factors;
        record.failure = attempt.failure;
    }
    if (record.factors) {
        const FactorPair &f = *record.factors;
        record.success = f.first > 1 && f.first < instance.n && f.second > 1 &&
                         f.second < instance.n && instance.n % f.first == 0 &&
                         instance.n % f.second == 0;
    }
    return record;
}

namespace {

std::variant<OutcomeSampler, DephasingSampler> make_sampler(const ProblemInstance &instance,
                                                            const Kernel &kernel,
                                                            SamplingMethod method,
                                                            const SpectrumOptions &options) {
    if (method == SamplingMethod::kSpectrum) {
        return OutcomeSampler(instance, kernel, options);
    }
    if (kernel.kind() == Kernel::Kind::kConstantBeta) {
        throw DomainError("the dephasing sampler supports coherent and xi kernels only");
    }
    return DephasingSampler(instance, kernel.xi());
}

}  // namespace

TrialRunner::TrialRunner(const ProblemInstance &instance, const Kernel &kernel,
                         SamplingMethod method, const SpectrumOptions &options)
    : instance_(instance), kernel_(kernel), sampler_(make_sampler(instance, kernel, method, options)) {
}

TrialRecord TrialRunner::run(SeededGenerator &gen) {
    Outcome outcome = std::visit([&](auto &sampler) { return sampler.sample(gen); }, sampler_);
    TrialRecord record = evaluate_outcome(instance_, outcome);
    record.master_seed = gen.master_seed();
    record.stream_index = gen.stream_index();
    return record;
}

TrialRecord run_trial(const ProblemInstance &instance, const Kernel &kernel, SeededGenerator &gen) {
    return TrialRunner(instance, kernel).run(gen);
}

double SuccessEstimate::standard_error() const {
    return trials == 0 ? 0.0 : std::sqrt(rate * (1 - rate) / static_cast<double>(trials));
}

namespace {

/// Fills records[i] with trial (first + i). The spectrum sampler is built
/// once and shared read-only; dephasing samplers are built per block.
class BatchRunner {
   public:
    BatchRunner(const ProblemInstance &instance, const Kernel &kernel, uint64_t master_seed,
                const RunOptions &options)
        : instance_(instance), kernel_(kernel), master_seed_(master_seed), options_(options) {
        if (options.method == SamplingMethod::kSpectrum) {
            sampler_.emplace(instance, kernel, options.spectrum);
        } else {
            // Validates the kernel up front.
            TrialRunner(instance, kernel, options.method, options.spectrum);
        }
    }

    void run(uint64_t first, std::vector<TrialRecord> &records) const {
        if (sampler_) {
            parallel_for(records.size(), options_.threads, [&](std::size_t i) {
                SeededGenerator gen(master_seed_, first + i);
                records[i] = evaluate_outcome(instance_, sampler_->sample(gen));
                records[i].master_seed = master_seed_;
                records[i].stream_index = first + i;
            });
            return;
        }
        parallel_blocks(records.size(), options_.threads, [&](std::size_t begin, std::size_t end) {
            TrialRunner runner(instance_, kernel_, options_.method, options_.spectrum);
            for (std::size_t i = begin; i < end; ++i) {
                SeededGenerator gen(master_seed_, first + i);
                records[i] = runner.run(gen);
            }
        });
    }

   private:
    const ProblemInstance &instance_;
    const Kernel &kernel_;
    uint64_t master_seed_;
    const RunOptions &options_;
    std::optional<OutcomeSampler> sampler_;
};

}  // namespace

SuccessEstimate estimate_success_rate(const ProblemInstance &instance, const Kernel &kernel,
                                      uint64_t n_trials, uint64_t master_seed,
                                      const RunOptions &options) {
    if (n_trials == 0) {
        throw DomainError("n_trials must be >= 1");
    }
    std::vector<TrialRecord> records(n_trials);
    BatchRunner(instance, kernel, master_seed, options).run(0, records);
    SuccessEstimate out;
    out.kernel = kernel;
    out.trials = n_trials;
    out.successes = static_cast<uint64_t>(
        std::count_if(records.begin(), records.end(), [](const TrialRecord &r) { return r.success; }));
    out.rate = static_cast<double>(out.successes) / static_cast<double>(n_trials);
    return out;
}

FactorReport factor_number(const ProblemInstance &instance, const Kernel &kernel,
                           uint64_t max_trials, uint64_t master_seed, const RunOptions &options) {
    if (max_trials == 0) {
        throw DomainError("max_trials must be >= 1");
    }
    FactorReport report;
    const BatchRunner runner(instance, kernel, master_seed, options);
    const uint64_t batch = std::max<uint64_t>(1, options.threads) * 8;
    for (uint64_t first = 0; first < max_trials && !report.factors; first += batch) {
        std::vector<TrialRecord> records(std::min(batch, max_trials - first));
        runner.run(first, records);
        for (TrialRecord &record : records) {
            bool success = record.success;
            report.trials.push_back(std::move(record));
            if (success) {
                const FactorPair &f = *report.trials.back().factors;
                // Verification is one multiplication and two divisions.
                if (instance.n % f.first == 0 && instance.n % f.second == 0) {
                    report.factors = FactorPair{std::min(f.first, f.second), std::max(f.first, f.second)};
                }
                break;
            }
        }
    }
    report.trials_used = report.trials.size();
    if (!report.factors) {
        report.exhausted = true;
        FactorAttempt structural = factors_from_order(instance.x, instance.n, instance.r);
        if (!structural) {
            report.diagnostic = std::string(describe(structural.failure));
        } else {
            report.diagnostic = "no trial produced a usable period";
        }
    }
    return report;
}

bool outcome_succeeds(const ProblemInstance &instance, uint64_t c) {
    return evaluate_outcome(instance, Outcome{0, c}).success;
}

double exact_success_probability(const ProblemInstance &instance, const Spectrum &marginal) {
    if (!marginal.is_marginal() || marginal.values.size() != instance.q) {
        throw DomainError("exact_success_probability needs a marginal spectrum over q bins");
    }
    std::vector<double> mass;
    for (uint64_t c = 0; c < instance.q; ++c) {
        if (outcome_succeeds(instance, c)) {
            mass.push_back(marginal.values[c]);
        }
    }
    return pairwise_sum(mass);
}

double uniform_success_probability(const ProblemInstance &instance) {
    uint64_t count = 0;
    for (uint64_t c = 0; c < instance.q; ++c) {
        count += outcome_succeeds(instance, c) ? 1 : 0;
    }
    return static_cast<double>(count) / static_cast<double>(instance.q);
}

}  // namespace shordecoh
