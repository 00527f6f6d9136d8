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

#ifndef SHORDECOH_RECOVERY_H
#define SHORDECOH_RECOVERY_H

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shordecoh/instance.h"
#include "shordecoh/kernel.h"
#include "shordecoh/numtheory.h"
#include "shordecoh/rng.h"
#include "shordecoh/sampler.h"

namespace shordecoh {

struct PeriodRecovery {
    /// Every exponent tested against x^d = 1 mod N, in test order.
    std::vector<uint64_t> candidates;
    std::optional<uint64_t> period;
};

/// Reads r off a measured c. Convergent denominators d <= N of c/q are
/// tested in increasing order, then multiples t*d <= N of the last
/// admissible denominator (when it exceeds 1). A verified exponent is
/// reduced to the minimal period. c = 0 yields nothing.
PeriodRecovery recover_period(uint64_t c, const ProblemInstance &instance);

struct TrialRecord {
    uint64_t master_seed = 0;
    uint64_t stream_index = 0;
    Outcome outcome;
    std::vector<uint64_t> candidates;
    std::optional<uint64_t> period;
    std::optional<FactorPair> factors;
    FactorFailure failure = FactorFailure::kNone;
    bool success = false;

    bool operator==(const TrialRecord &other) const;
};

enum class SamplingMethod {
    /// Inverse CDF over precomputed decohered spectra. Any kernel.
    kSpectrum,
    /// Per-bit dephasing unraveling. Coherent or Hamming kernels only.
    kDephasing,
};

/// Owns the sampler for one (instance, kernel) pair so repeated trials do
/// not rebuild spectra. Spectrum-method runners are const-callable from
/// many threads; dephasing runners hold a cache and are not.
class TrialRunner {
   public:
    TrialRunner(const ProblemInstance &instance, const Kernel &kernel,
                SamplingMethod method = SamplingMethod::kSpectrum,
                const SpectrumOptions &options = {});

    TrialRecord run(SeededGenerator &gen);

    const ProblemInstance &instance() const {
        return instance_;
    }

   private:
    ProblemInstance instance_;
    Kernel kernel_;
    std::variant<OutcomeSampler, DephasingSampler> sampler_;
};

/// Finishes a trial once (k, c) is known: period recovery, then factors.
TrialRecord evaluate_outcome(const ProblemInstance &instance, Outcome outcome);

TrialRecord run_trial(const ProblemInstance &instance, const Kernel &kernel, SeededGenerator &gen);

struct SuccessEstimate {
    uint64_t trials = 0;
    uint64_t successes = 0;
    double rate = 0;
    Kernel kernel = Kernel::coherent();

    /// Binomial standard error sqrt(rate (1 - rate) / trials).
    double standard_error() const;
};

struct RunOptions {
    unsigned threads = 1;
    SamplingMethod method = SamplingMethod::kSpectrum;
    SpectrumOptions spectrum;
};

/// Trial i draws from stream (master_seed, i), so the estimate is the same
/// for every thread count. Throws DomainError for n_trials == 0.
SuccessEstimate estimate_success_rate(const ProblemInstance &instance, const Kernel &kernel,
                                      uint64_t n_trials, uint64_t master_seed,
                                      const RunOptions &options = {});

struct FactorReport {
    std::optional<FactorPair> factors;
    uint64_t trials_used = 0;
    bool exhausted = false;
    std::string diagnostic;
    std::vector<TrialRecord> trials;
};

/// Runs trials on streams 0, 1, ... until one yields verified factors or
/// max_trials is reached. The transcript ends at the first success.
FactorReport factor_number(const ProblemInstance &instance, const Kernel &kernel,
                           uint64_t max_trials, uint64_t master_seed,
                           const RunOptions &options = {});

/// Whether a measured c leads to verified factors.
bool outcome_succeeds(const ProblemInstance &instance, uint64_t c);

/// Exact per-trial success probability sum_c P(c) [c succeeds] for a
/// marginal spectrum.
double exact_success_probability(const ProblemInstance &instance, const Spectrum &marginal);

/// Success probability when c is uniform on [0, q).
double uniform_success_probability(const ProblemInstance &instance);

}  // namespace shordecoh

#endif
