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

#ifndef SHORDECOH_SPECTRUM_H
#define SHORDECOH_SPECTRUM_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shordecoh/instance.h"
#include "shordecoh/kernel.h"

namespace shordecoh {

/// Probabilities P(c) for c in [0, q). A joint spectrum (k set) carries
/// total mass M_k / q; a marginal one (k empty) carries mass 1.
struct Spectrum {
    uint64_t q = 0;
    std::optional<uint64_t> k;
    std::vector<double> values;

    bool is_marginal() const {
        return !k.has_value();
    }
    double total() const;
};

struct SpectrumOptions {
    unsigned threads = 1;
    /// Full-spectrum guard. Decohered spectra cost O(sum_k M_k^2 * q).
    uint64_t max_q = 4096;
    bool force = false;
    /// Largest tolerated |Im P(c)| before it is discarded.
    double max_imag_residue = 1e-12;
};

/// Sum with pairwise (cascade) reduction in a fixed order.
double pairwise_sum(std::span<const double> values);

/// 0.5 * sum |p - q|. Throws DomainError on length mismatch.
double total_variation(std::span<const double> p, std::span<const double> q);

/// P(c) = |sum_{a in A_k} e^{2 pi i a c / q}|^2 / q^2 via the closed
/// geometric-progression form with integer phase reduction.
Spectrum coherent_joint(const ProblemInstance &instance, uint64_t k);

/// Direct double sum over the M_k^2 pairs of A_k, returning the raw complex
/// value for every c. The imaginary part is round-off only.
std::vector<std::complex<double>> decohered_joint_complex(const ProblemInstance &instance,
                                                          uint64_t k, const Kernel &kernel,
                                                          const SpectrumOptions &options = {});

/// P(c) = (1/q^2) sum_{a,a'} K(a,a') e^{2 pi i (a-a') c / q}. Throws
/// ResourceLimit when q exceeds the guard, std::runtime_error when the
/// imaginary residue exceeds options.max_imag_residue.
Spectrum decohered_joint(const ProblemInstance &instance, uint64_t k, const Kernel &kernel,
                         const SpectrumOptions &options = {});

/// Sum over k of the joint spectra. Coherent kernels take the closed form.
Spectrum marginal(const ProblemInstance &instance, const Kernel &kernel,
                  const SpectrumOptions &options = {});

/// (1 - beta) * coherent_joint + beta * M_k / q^2.
Spectrum constant_beta_mixture(const ProblemInstance &instance, uint64_t k, double beta);

/// (1 - beta) * coherent marginal + beta / q.
Spectrum constant_beta_marginal(const ProblemInstance &instance, double beta);

struct BetaFit {
    double beta = 0;
    /// Sum of squared differences at the optimum.
    double residual = 0;
};

/// Least-squares fit of the constant-beta marginal to the Hamming(xi)
/// marginal: 1e-3 grid, then ternary refinement to 1e-6.
BetaFit fit_constant_beta(const ProblemInstance &instance, double xi,
                          const SpectrumOptions &options = {});

struct EntropyReport {
    double entropy = 0;      // nats
    double max_entropy = 0;  // ln M_k
    double fraction = 0;
};

/// Eigenvalues (ascending) of the normalized conditional state K(a,a')/M_k
/// over A_k, from a dense symmetric eigensolver. Throws ResourceLimit for
/// M_k > 4096.
std::vector<double> conditional_state_eigenvalues(const ProblemInstance &instance, uint64_t k,
                                                  const Kernel &kernel);

/// Closed form for ConstantBeta: one eigenvalue ((1-beta)M + beta)/M and
/// M-1 copies of beta/M. Ascending.
std::vector<double> constant_beta_eigenvalues(uint64_t m, double beta);

/// Requires M_k >= 2.
EntropyReport von_neumann_entropy(const ProblemInstance &instance, uint64_t k,
                                  const Kernel &kernel);

/// True when |c - lambda*q/r| < 1 for some lambda in [0, r).
bool is_on_peak(const ProblemInstance &instance, uint64_t c);

struct PeakMetrics {
    double on_peak_mass = 0;
    double floor_to_peak_ratio = 0;
};

/// Throws DomainError unless spectrum is a marginal over instance.q bins.
PeakMetrics peak_metrics(const Spectrum &spectrum, const ProblemInstance &instance);

}  // namespace shordecoh

#endif
