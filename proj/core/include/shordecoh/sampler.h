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

#ifndef SHORDECOH_SAMPLER_H
#define SHORDECOH_SAMPLER_H

#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "shordecoh/instance.h"
#include "shordecoh/kernel.h"
#include "shordecoh/rng.h"
#include "shordecoh/spectrum.h"

namespace shordecoh {

struct Outcome {
    uint64_t k = 0;
    uint64_t c = 0;

    bool operator==(const Outcome &) const = default;
};

/// Inverse-CDF sampler over precomputed joint spectra, one table per k.
/// k is drawn with probability M_k / q, then c from the normalized Joint(k).
class OutcomeSampler {
   public:
    OutcomeSampler(const ProblemInstance &instance, const Kernel &kernel,
                   const SpectrumOptions &options = {});

    Outcome sample(SeededGenerator &gen) const;

    const ProblemInstance &instance() const {
        return instance_;
    }
    const Kernel &kernel() const {
        return kernel_;
    }
    std::span<const double> cumulative(uint64_t k) const {
        return cdf_.at(k);
    }

   private:
    ProblemInstance instance_;
    Kernel kernel_;
    std::vector<std::vector<double>> cdf_;
};

Outcome sample_outcome(const ProblemInstance &instance, const Kernel &kernel, SeededGenerator &gen);

/// Bit positions that the environment has fully measured.
struct DephasingPattern {
    uint64_t mask = 0;
    double p = 0;

    /// p^|S| (1-p)^(bits-|S|).
    double probability(unsigned bits) const;
};

/// 1 - exp(-xi), the per-bit dephasing probability that reproduces the
/// Hamming kernel exp(-xi * distance) as an independent-bit mixture.
double dephasing_probability(double xi);

/// Monte-Carlo unraveling of the Hamming kernel into per-bit dephasing
/// events. Spectra of the surviving sub-superpositions are memoized, so a
/// sampler is not safe to share between threads.
class DephasingSampler {
   public:
    DephasingSampler(const ProblemInstance &instance, double xi);

    Outcome sample(SeededGenerator &gen);

    double p() const {
        return p_;
    }

   private:
    using Key = std::tuple<uint64_t, uint64_t, uint64_t>;  // k, mask, pinned bits

    const std::vector<double> &subset_cdf(uint64_t k, uint64_t mask, uint64_t pinned);

    ProblemInstance instance_;
    double p_;
    std::map<Key, std::vector<double>> cache_;
    std::size_t cached_values_ = 0;
};

Outcome sample_via_dephasing(const ProblemInstance &instance, double xi, SeededGenerator &gen);

/// Sum over every dephasing pattern S of Pr(S) times the Joint(k) spectrum
/// of the S-dephased state. Enumerates 2^bits patterns; throws
/// ResourceLimit for bits > 16.
Spectrum exact_dephasing_average(const ProblemInstance &instance, uint64_t k, double xi);

/// Index of the first cumulative entry strictly greater than u.
uint64_t inverse_cdf(std::span<const double> cdf, double u);

}  // namespace shordecoh

#endif
