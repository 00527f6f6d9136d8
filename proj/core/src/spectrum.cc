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

#include "shordecoh/spectrum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "shordecoh/errors.h"
#include "shordecoh/parallel.h"

namespace shordecoh {

namespace {

constexpr std::size_t kPairwiseBlock = 8;

double pairwise_sum_impl(const double *data, std::size_t n) {
    if (n <= kPairwiseBlock) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s += data[i];
        }
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum_impl(data, half) + pairwise_sum_impl(data + half, n - half);
}

void check_guard(const ProblemInstance &instance, const SpectrumOptions &options) {
    if (!options.force && instance.q > options.max_q) {
        throw ResourceLimit("q=" + std::to_string(instance.q) + " exceeds the full-spectrum guard " +
                            std::to_string(options.max_q) + " (use force to override)");
    }
}

/// e^{2 pi i m / q} for m in [0, q).
std::vector<std::complex<double>> phase_table(uint64_t q) {
    std::vector<std::complex<double>> table(q);
    for (uint64_t m = 0; m < q; ++m) {
        double angle = 2 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(q);
        table[m] = {std::cos(angle), std::sin(angle)};
    }
    return table;
}

/// sin(pi t / q) using the reflection t -> q - t to keep the argument small.
double sin_pi_over_q(uint64_t t, uint64_t q) {
    t %= q;
    uint64_t reflected = std::min(t, q - t);
    return std::sin(std::numbers::pi * static_cast<double>(reflected) / static_cast<double>(q));
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_impl(values.data(), values.size());
}

double Spectrum::total() const {
    return pairwise_sum(values);
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw DomainError("total_variation of distributions with different supports");
    }
    std::vector<double> diff(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        diff[i] = std::abs(p[i] - q[i]);
    }
    return 0.5 * pairwise_sum(diff);
}

Spectrum coherent_joint(const ProblemInstance &instance, uint64_t k) {
    IndexSet set = index_set(instance, k);
    const uint64_t q = instance.q;
    const double m = static_cast<double>(set.count);
    const double norm = 1.0 / (static_cast<double>(q) * static_cast<double>(q));

    Spectrum out{q, k, std::vector<double>(q)};
    for (uint64_t c = 0; c < q; ++c) {
        // Phases advance by 2 pi s / q per member, s = r c mod q.
        uint64_t s = instance.r * c % q;
        double value;
        if (s == 0) {
            value = m * m;
        } else {
            uint64_t t = set.count * s % q;
            double ratio = sin_pi_over_q(t, q) / sin_pi_over_q(s, q);
            value = ratio * ratio;
        }
        out.values[c] = value * norm;
    }
    return out;
}

std::vector<std::complex<double>> decohered_joint_complex(const ProblemInstance &instance,
                                                          uint64_t k, const Kernel &kernel,
                                                          const SpectrumOptions &options) {
    check_guard(instance, options);
    IndexSet set = index_set(instance, k);
    const uint64_t q = instance.q;
    const uint64_t m = set.count;

    std::vector<double> weights(m * m);
    for (uint64_t i = 0; i < m; ++i) {
        for (uint64_t j = 0; j < m; ++j) {
            weights[i * m + j] = kernel.weight(set[i], set[j]);
        }
    }
    const auto phases = phase_table(q);
    const double norm = 1.0 / (static_cast<double>(q) * static_cast<double>(q));

    std::vector<std::complex<double>> out(q);
    parallel_for(q, options.threads, [&](std::size_t c) {
        // a - a' = (i - j) r, so the phase index depends on i - j only.
        const uint64_t step = instance.r * c % q;
        std::vector<uint64_t> forward(m);
        for (uint64_t d = 0; d < m; ++d) {
            forward[d] = d * step % q;
        }
        std::vector<double> term_re(m), term_im(m), row_re(m), row_im(m);
        for (uint64_t i = 0; i < m; ++i) {
            const double *w = &weights[i * m];
            for (uint64_t j = 0; j < m; ++j) {
                uint64_t idx = i >= j ? forward[i - j] : (q - forward[j - i]) % q;
                term_re[j] = w[j] * phases[idx].real();
                term_im[j] = w[j] * phases[idx].imag();
            }
            row_re[i] = pairwise_sum(term_re);
            row_im[i] = pairwise_sum(term_im);
        }
        out[c] = {pairwise_sum(row_re) * norm, pairwise_sum(row_im) * norm};
    });
    return out;
}

Spectrum decohered_joint(const ProblemInstance &instance, uint64_t k, const Kernel &kernel,
                         const SpectrumOptions &options) {
    auto raw = decohered_joint_complex(instance, k, kernel, options);
    Spectrum out{instance.q, k, std::vector<double>(raw.size())};
    for (std::size_t c = 0; c < raw.size(); ++c) {
        if (std::abs(raw[c].imag()) > options.max_imag_residue) {
            throw std::runtime_error("imaginary residue " + std::to_string(raw[c].imag()) +
                                     " at c=" + std::to_string(c));
        }
        // Round-off can leave values a few ulp below zero.
        out.values[c] = std::max(0.0, raw[c].real());
    }
    return out;
}

Spectrum marginal(const ProblemInstance &instance, const Kernel &kernel,
                  const SpectrumOptions &options) {
    Spectrum out{instance.q, std::nullopt, std::vector<double>(instance.q, 0.0)};
    for (uint64_t k = 0; k < instance.r; ++k) {
        Spectrum joint = kernel.kind() == Kernel::Kind::kCoherent
                             ? coherent_joint(instance, k)
                             : decohered_joint(instance, k, kernel, options);
        for (uint64_t c = 0; c < instance.q; ++c) {
            out.values[c] += joint.values[c];
        }
    }
    return out;
}

Spectrum constant_beta_mixture(const ProblemInstance &instance, uint64_t k, double beta) {
    if (!(beta >= 0 && beta <= 1)) {
        throw DomainError("beta must lie in [0, 1]");
    }
    Spectrum out = coherent_joint(instance, k);
    const double q = static_cast<double>(instance.q);
    const double flat = static_cast<double>(index_set(instance, k).count) / (q * q);
    for (double &v : out.values) {
        v = (1 - beta) * v + beta * flat;
    }
    return out;
}

Spectrum constant_beta_marginal(const ProblemInstance &instance, double beta) {
    if (!(beta >= 0 && beta <= 1)) {
        throw DomainError("beta must lie in [0, 1]");
    }
    Spectrum out = marginal(instance, Kernel::coherent());
    const double flat = 1.0 / static_cast<double>(instance.q);
    for (double &v : out.values) {
        v = (1 - beta) * v + beta * flat;
    }
    return out;
}

BetaFit fit_constant_beta(const ProblemInstance &instance, double xi,
                          const SpectrumOptions &options) {
    const Spectrum target = marginal(instance, Kernel::hamming(xi), options);
    const Spectrum coherent = marginal(instance, Kernel::coherent());
    const double flat = 1.0 / static_cast<double>(instance.q);

    std::vector<double> sq(instance.q);
    auto objective = [&](double beta) {
        for (std::size_t c = 0; c < sq.size(); ++c) {
            double d = target.values[c] - ((1 - beta) * coherent.values[c] + beta * flat);
            sq[c] = d * d;
        }
        return pairwise_sum(sq);
    };

    constexpr int kGrid = 1000;
    int best = 0;
    double best_value = objective(0.0);
    for (int i = 1; i <= kGrid; ++i) {
        double v = objective(static_cast<double>(i) / kGrid);
        if (v < best_value) {
            best = i;
            best_value = v;
        }
    }

    double lo = std::max(0.0, static_cast<double>(best - 1) / kGrid);
    double hi = std::min(1.0, static_cast<double>(best + 1) / kGrid);
    while (hi - lo > 1e-6) {
        double m1 = lo + (hi - lo) / 3;
        double m2 = hi - (hi - lo) / 3;
        if (objective(m1) < objective(m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }

    BetaFit fit{static_cast<double>(best) / kGrid, best_value};
    for (double candidate : {lo, hi, 0.5 * (lo + hi)}) {
        double v = objective(candidate);
        if (v < fit.residual) {
            fit = {candidate, v};
        }
    }
    return fit;
}

bool is_on_peak(const ProblemInstance &instance, uint64_t c) {
    // |c - lambda q / r| < 1  <=>  |c r - lambda q| < r.
    const auto r = static_cast<int64_t>(instance.r);
    const auto q = static_cast<int64_t>(instance.q);
    const auto cr = static_cast<int64_t>(c) * r;
    const int64_t lambda = cr / q;
    for (int64_t l : {lambda, lambda + 1}) {
        if (l < r && std::llabs(cr - l * q) < r) {
            return true;
        }
    }
    return false;
}

PeakMetrics peak_metrics(const Spectrum &spectrum, const ProblemInstance &instance) {
    if (!spectrum.is_marginal() || spectrum.q != instance.q ||
        spectrum.values.size() != instance.q) {
        throw DomainError("peak_metrics needs a marginal spectrum over q bins");
    }
    std::vector<double> on_peak;
    double max_on = 0, max_off = 0;
    for (uint64_t c = 0; c < instance.q; ++c) {
        double v = spectrum.values[c];
        if (is_on_peak(instance, c)) {
            on_peak.push_back(v);
            max_on = std::max(max_on, v);
        } else {
            max_off = std::max(max_off, v);
        }
    }
    PeakMetrics out;
    out.on_peak_mass = pairwise_sum(on_peak);
    out.floor_to_peak_ratio = max_on > 0 ? max_off / max_on : 0.0;
    return out;
}

}  // namespace shordecoh
