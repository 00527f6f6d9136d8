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

#include "shordecoh/sampler.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "shordecoh/errors.h"

namespace shordecoh {

namespace {

constexpr unsigned kMaxEnumeratedBits = 16;
constexpr std::size_t kMaxCachedValues = std::size_t{1} << 24;

/// |sum_{a in members} e^{2 pi i a c / q}|^2 for every c.
std::vector<double> subset_intensity(std::span<const uint64_t> members, uint64_t q) {
    std::vector<double> out(q);
    const double base = 2 * std::numbers::pi / static_cast<double>(q);
    for (uint64_t c = 0; c < q; ++c) {
        double re = 0, im = 0;
        for (uint64_t a : members) {
            double angle = base * static_cast<double>(a * c % q);
            re += std::cos(angle);
            im += std::sin(angle);
        }
        out[c] = re * re + im * im;
    }
    return out;
}

/// Same quantity through an FFT of the membership indicator.
std::vector<double> subset_intensity_fft(std::span<const uint64_t> members, uint64_t q) {
    std::vector<std::complex<double>> indicator(q), transform;
    for (uint64_t a : members) {
        indicator[a] = 1.0;
    }
    Eigen::FFT<double> fft;
    fft.fwd(transform, indicator);
    std::vector<double> out(q);
    for (uint64_t c = 0; c < q; ++c) {
        out[c] = std::norm(transform[c]);
    }
    return out;
}

std::vector<double> to_cdf(std::span<const double> weights) {
    std::vector<double> cdf(weights.size());
    double running = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        running += weights[i];
        cdf[i] = running;
    }
    if (running <= 0) {
        throw std::runtime_error("cannot sample from a spectrum with zero mass");
    }
    for (double &v : cdf) {
        v /= running;
    }
    cdf.back() = 1.0;
    return cdf;
}

}  // namespace

uint64_t inverse_cdf(std::span<const double> cdf, double u) {
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
        --it;
    }
    return static_cast<uint64_t>(it - cdf.begin());
}

OutcomeSampler::OutcomeSampler(const ProblemInstance &instance, const Kernel &kernel,
                               const SpectrumOptions &options)
    : instance_(instance), kernel_(kernel) {
    cdf_.reserve(instance.r);
    for (uint64_t k = 0; k < instance.r; ++k) {
        Spectrum joint = kernel.kind() == Kernel::Kind::kCoherent
                             ? coherent_joint(instance, k)
                             : decohered_joint(instance, k, kernel, options);
        cdf_.push_back(to_cdf(joint.values));
    }
}

Outcome OutcomeSampler::sample(SeededGenerator &gen) const {
    // a uniform on [0, q) lands in A_k with probability M_k / q.
    uint64_t k = gen.below(instance_.q) % instance_.r;
    uint64_t c = inverse_cdf(cdf_[k], gen.uniform());
    return {k, c};
}

Outcome sample_outcome(const ProblemInstance &instance, const Kernel &kernel,
                       SeededGenerator &gen) {
    return OutcomeSampler(instance, kernel).sample(gen);
}

double DephasingPattern::probability(unsigned bits) const {
    int dephased = std::popcount(mask);
    return std::pow(p, dephased) * std::pow(1 - p, static_cast<int>(bits) - dephased);
}

double dephasing_probability(double xi) {
    if (!std::isfinite(xi) || xi < 0) {
        throw DomainError("xi must be finite and >= 0");
    }
    return -std::expm1(-xi);
}

DephasingSampler::DephasingSampler(const ProblemInstance &instance, double xi)
    : instance_(instance), p_(dephasing_probability(xi)) {
}

const std::vector<double> &DephasingSampler::subset_cdf(uint64_t k, uint64_t mask,
                                                        uint64_t pinned) {
    Key key{k, mask, pinned};
    auto it = cache_.find(key);
    if (it != cache_.end()) {
        return it->second;
    }
    if (cached_values_ > kMaxCachedValues) {
        cache_.clear();
        cached_values_ = 0;
    }
    IndexSet set = index_set(instance_, k);
    std::vector<uint64_t> members;
    for (uint64_t i = 0; i < set.count; ++i) {
        if ((set[i] & mask) == pinned) {
            members.push_back(set[i]);
        }
    }
    const uint64_t bits = instance_.bits;
    auto cdf = to_cdf(members.size() > bits ? subset_intensity_fft(members, instance_.q)
                                            : subset_intensity(members, instance_.q));
    cached_values_ += cdf.size();
    return cache_.emplace(key, std::move(cdf)).first->second;
}

Outcome DephasingSampler::sample(SeededGenerator &gen) {
    uint64_t k = gen.below(instance_.q) % instance_.r;
    uint64_t mask = 0;
    for (unsigned b = 0; b < instance_.bits; ++b) {
        if (gen.uniform() < p_) {
            mask |= uint64_t{1} << b;
        }
    }
    // Members of A_k carry equal amplitude, so the dephased bit values are
    // distributed like the bits of a uniformly chosen member.
    IndexSet set = index_set(instance_, k);
    uint64_t pinned = set[gen.below(set.count)] & mask;
    uint64_t c = inverse_cdf(subset_cdf(k, mask, pinned), gen.uniform());
    return {k, c};
}

Outcome sample_via_dephasing(const ProblemInstance &instance, double xi, SeededGenerator &gen) {
    return DephasingSampler(instance, xi).sample(gen);
}

Spectrum exact_dephasing_average(const ProblemInstance &instance, uint64_t k, double xi) {
    if (instance.bits > kMaxEnumeratedBits) {
        throw ResourceLimit("exact dephasing average enumerates 2^" +
                            std::to_string(instance.bits) + " patterns; limit is 2^" +
                            std::to_string(kMaxEnumeratedBits));
    }
    const double p = dephasing_probability(xi);
    IndexSet set = index_set(instance, k);
    const uint64_t q = instance.q;
    const double norm = 1.0 / (static_cast<double>(q) * static_cast<double>(q));

    std::vector<uint64_t> members(set.count);
    for (uint64_t i = 0; i < set.count; ++i) {
        members[i] = set[i];
    }

    Spectrum out{q, k, std::vector<double>(q, 0.0)};
    const uint64_t patterns = uint64_t{1} << instance.bits;
    std::vector<uint64_t> sorted(members.size());
    for (uint64_t mask = 0; mask < patterns; ++mask) {
        const double weight = DephasingPattern{mask, p}.probability(instance.bits);
        if (weight == 0) {
            continue;
        }
        // Group members by their values on the dephased bits; each group is
        // one surviving sub-superposition.
        sorted = members;
        std::stable_sort(sorted.begin(), sorted.end(), [mask](uint64_t a, uint64_t b) {
            return (a & mask) < (b & mask);
        });
        std::size_t begin = 0;
        while (begin < sorted.size()) {
            std::size_t end = begin + 1;
            while (end < sorted.size() && (sorted[end] & mask) == (sorted[begin] & mask)) {
                ++end;
            }
            auto intensity =
                subset_intensity(std::span<const uint64_t>(sorted).subspan(begin, end - begin), q);
            for (uint64_t c = 0; c < q; ++c) {
                out.values[c] += weight * norm * intensity[c];
            }
            begin = end;
        }
    }
    return out;
}

}  // namespace shordecoh
