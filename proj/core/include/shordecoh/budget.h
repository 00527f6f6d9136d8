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

#ifndef SHORDECOH_BUDGET_H
#define SHORDECOH_BUDGET_H

#include <complex>
#include <optional>
#include <string>

// Order-of-magnitude decoherence budget estimates. Every relation here is
// a scaling law; the implied constants are taken to be 1.

namespace shordecoh {

inline constexpr double kEulerGamma = 0.5772156649;

/// Output density matrix of a single probe qubit prepared in an equal
/// superposition. up_down and down_up are conjugates.
struct TwoLevelDensity {
    double up_up = 0.5;
    double down_down = 0.5;
    std::complex<double> up_down{0.5, 0.0};
    std::complex<double> down_up{0.5, 0.0};

    /// Fills down_up = conj(up_down) and validates trace 1 and positivity.
    /// Throws DomainError.
    static TwoLevelDensity make(double up_up, double down_down, std::complex<double> up_down);
};

/// beta = 1 - (rho_ud + rho_du) / (rho_uu + rho_dd), the complement of the
/// fringe visibility.
double beta_from_visibility(const TwoLevelDensity &rho);

struct SpinBosonParams {
    double mu = 0;
    double eta = 0;
    double delta = 0;
    double lambda_cutoff = 0;

    /// Throws DomainError unless all positive and delta < lambda_cutoff.
    void validate() const;
};

/// -C - pi^2/4 + ln(delta / cutoff). Negative whenever delta < cutoff.
double spin_boson_bracket(const SpinBosonParams &params);

/// Zero-temperature coherence loss per operation,
/// (mu^2 eta / 2 pi) |bracket|.
double alpha_spin_boson(const SpinBosonParams &params);

struct AccumulatedBeta {
    double beta = 0;
    bool saturated = false;
};

/// min(1, L^2 alpha): loss linear in the L^2 operation count.
AccumulatedBeta beta_accumulated(double alpha, double digit_length);

/// L / (1 - L^2 alpha). Throws Divergent when L^2 alpha >= 1.
double trials_needed(double digit_length, double alpha);

struct EfficiencyVerdict {
    bool efficient = false;
    std::optional<double> quantum_trials;
    double classical_cost = 0;  // exp(L^{1/3})
    std::string diagnostic;
};

EfficiencyVerdict is_quantum_efficient(double digit_length, double alpha);

struct MaxFactorable {
    double ln_n_max = 0;
    /// exp(ln_n_max) when it is finite in double precision.
    std::optional<double> n_max;
};

/// ln N_max = 1 / sqrt(alpha). Throws DomainError for alpha <= 0.
MaxFactorable max_factorable(double alpha);

/// ln N_max = sqrt(2 pi / (mu^2 eta)).
MaxFactorable max_factorable(const SpinBosonParams &params);

struct TimescaleParams {
    double tau_rel = 0;
    double lambda_db = 0;
    double delta_x = 0;
};

/// tau_rel (lambda_dB / delta_x)^2. Throws DomainError on non-positive input.
double decoherence_time(const TimescaleParams &params);

struct BudgetReport {
    double alpha = 0;
    double digit_length = 0;
    double n_op = 0;
    AccumulatedBeta beta_total;
    std::optional<double> trials;
    EfficiencyVerdict efficiency;
    MaxFactorable max;
};

BudgetReport budget_report(double alpha, double digit_length);

}  // namespace shordecoh

#endif
