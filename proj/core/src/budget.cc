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

#include "shordecoh/budget.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "shordecoh/errors.h"

namespace shordecoh {

namespace {

constexpr double kTraceTolerance = 1e-9;
constexpr double kMinDenominator = 1e-12;
// exp overflows double beyond this.
constexpr double kMaxLogDouble = 709.0;

MaxFactorable from_log(double ln_n) {
    MaxFactorable out{ln_n, std::nullopt};
    if (ln_n <= kMaxLogDouble) {
        out.n_max = std::exp(ln_n);
    }
    return out;
}

}  // namespace

TwoLevelDensity TwoLevelDensity::make(double up_up, double down_down, std::complex<double> up_down) {
    if (up_up < 0 || down_down < 0) {
        throw DomainError("density matrix populations must be non-negative");
    }
    if (std::abs(up_up + down_down - 1) > kTraceTolerance) {
        throw DomainError("density matrix trace must be 1");
    }
    if (std::norm(up_down) > up_up * down_down + kTraceTolerance) {
        throw DomainError("density matrix is not positive semidefinite");
    }
    return {up_up, down_down, up_down, std::conj(up_down)};
}

double beta_from_visibility(const TwoLevelDensity &rho) {
    double denominator = rho.up_up + rho.down_down;
    if (std::abs(denominator) < kMinDenominator) {
        throw DomainError("density matrix has vanishing trace");
    }
    return 1 - (rho.up_down + rho.down_up).real() / denominator;
}

void SpinBosonParams::validate() const {
    if (!(mu > 0 && eta > 0 && delta > 0 && lambda_cutoff > 0)) {
        throw DomainError("spin-boson parameters must be positive");
    }
    if (delta >= lambda_cutoff) {
        throw DomainError("tunneling frequency must lie below the bath cutoff");
    }
}

double spin_boson_bracket(const SpinBosonParams &params) {
    params.validate();
    return -kEulerGamma - std::numbers::pi * std::numbers::pi / 4 +
           std::log(params.delta / params.lambda_cutoff);
}

double alpha_spin_boson(const SpinBosonParams &params) {
    double bracket = spin_boson_bracket(params);
    return params.mu * params.mu * params.eta / (2 * std::numbers::pi) * std::abs(bracket);
}

AccumulatedBeta beta_accumulated(double alpha, double digit_length) {
    if (alpha < 0 || digit_length <= 0) {
        throw DomainError("beta_accumulated needs alpha >= 0 and L > 0");
    }
    double beta = digit_length * digit_length * alpha;
    if (beta >= 1) {
        return {1.0, true};
    }
    return {beta, false};
}

double trials_needed(double digit_length, double alpha) {
    if (alpha < 0 || digit_length <= 0) {
        throw DomainError("trials_needed needs alpha >= 0 and L > 0");
    }
    double loss = digit_length * digit_length * alpha;
    if (loss >= 1) {
        throw Divergent("L^2 alpha = " + std::to_string(loss) +
                        " >= 1: the interference pattern is lost");
    }
    return digit_length / (1 - loss);
}

EfficiencyVerdict is_quantum_efficient(double digit_length, double alpha) {
    EfficiencyVerdict out;
    out.classical_cost = std::exp(std::cbrt(digit_length));
    try {
        out.quantum_trials = trials_needed(digit_length, alpha);
    } catch (const Divergent &e) {
        out.diagnostic = e.what();
        return out;
    }
    out.efficient = *out.quantum_trials <= out.classical_cost;
    return out;
}

MaxFactorable max_factorable(double alpha) {
    if (!(alpha > 0)) {
        throw DomainError("max_factorable needs alpha > 0");
    }
    return from_log(1 / std::sqrt(alpha));
}

MaxFactorable max_factorable(const SpinBosonParams &params) {
    if (!(params.mu > 0 && params.eta > 0)) {
        throw DomainError("spin-boson coupling and viscosity must be positive");
    }
    return from_log(std::sqrt(2 * std::numbers::pi / (params.mu * params.mu * params.eta)));
}

double decoherence_time(const TimescaleParams &params) {
    if (!(params.tau_rel > 0 && params.lambda_db > 0 && params.delta_x > 0)) {
        throw DomainError("timescale parameters must be positive");
    }
    double ratio = params.lambda_db / params.delta_x;
    return params.tau_rel * ratio * ratio;
}

BudgetReport budget_report(double alpha, double digit_length) {
    BudgetReport out;
    out.alpha = alpha;
    out.digit_length = digit_length;
    out.n_op = digit_length * digit_length;
    out.beta_total = beta_accumulated(alpha, digit_length);
    out.efficiency = is_quantum_efficient(digit_length, alpha);
    out.trials = out.efficiency.quantum_trials;
    if (alpha > 0) {
        out.max = max_factorable(alpha);
    } else {
        out.max = {std::numeric_limits<double>::infinity(), std::nullopt};
    }
    return out;
}

}  // namespace shordecoh
