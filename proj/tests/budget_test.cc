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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "shordecoh/errors.h"

using namespace shordecoh;

namespace {

SpinBosonParams spin_boson(double mu, double eta, double delta = 1.0, double cutoff = 100.0) {
    return SpinBosonParams{mu, eta, delta, cutoff};
}

}  // namespace

TEST(beta_from_visibility, examples) {
    ASSERT_NEAR(beta_from_visibility(TwoLevelDensity::make(0.5, 0.5, 0.5)), 0.0, 1e-15);
    ASSERT_NEAR(beta_from_visibility(TwoLevelDensity::make(0.5, 0.5, 0.0)), 1.0, 1e-15);
    ASSERT_NEAR(beta_from_visibility(TwoLevelDensity::make(0.5, 0.5, 0.2)), 0.6, 1e-15);
}

TEST(beta_from_visibility, relative_phase) {
    for (double phi : {0.0, 0.3, 1.0, 2.0, std::numbers::pi}) {
        auto rho = TwoLevelDensity::make(0.5, 0.5, std::polar(0.5, phi));
        ASSERT_NEAR(beta_from_visibility(rho), 1 - std::cos(phi), 1e-15);
    }
}

TEST(beta_from_visibility, invalid_states) {
    ASSERT_THROW(TwoLevelDensity::make(0.7, 0.5, 0.0), DomainError);
    ASSERT_THROW(TwoLevelDensity::make(0.5, 0.5, 0.8), DomainError);
    ASSERT_THROW(TwoLevelDensity::make(-0.1, 1.1, 0.0), DomainError);
}

TEST(alpha_spin_boson, example) {
    auto params = spin_boson(1, 0.01, 1, 100);
    double bracket = -0.5772156649 - std::numbers::pi * std::numbers::pi / 4 + std::log(0.01);
    ASSERT_NEAR(spin_boson_bracket(params), bracket, 1e-15);
    ASSERT_NEAR(spin_boson_bracket(params), -7.6498, 1e-4);
    // Frozen from the hand evaluation above: 0.01 / (2 pi) * 7.64978695.
    ASSERT_NEAR(alpha_spin_boson(params), 0.0121750, 0.0121750 * 1e-4);
}

TEST(alpha_spin_boson, scaling) {
    ASSERT_NEAR(alpha_spin_boson(spin_boson(2, 0.01)), 4 * alpha_spin_boson(spin_boson(1, 0.01)), 1e-15);
    ASSERT_LT(alpha_spin_boson(spin_boson(1, 1e-12)), 1e-11);
    ASSERT_THROW(alpha_spin_boson(spin_boson(1, 0.01, 100, 100)), DomainError);
    ASSERT_THROW(alpha_spin_boson(spin_boson(1, -0.01)), DomainError);
}

TEST(beta_accumulated, examples) {
    ASSERT_EQ(beta_accumulated(0, 10).beta, 0.0);
    ASSERT_NEAR(beta_accumulated(0.001, 10).beta, 0.1, 1e-15);
    AccumulatedBeta clipped = beta_accumulated(0.02, 10);
    ASSERT_EQ(clipped.beta, 1.0);
    ASSERT_TRUE(clipped.saturated);
}

TEST(trials_needed, examples) {
    ASSERT_EQ(trials_needed(37.5, 0), 37.5);
    ASSERT_NEAR(trials_needed(10, 0.005), 20.0, 1e-12);
    ASSERT_THROW(trials_needed(10, 0.01), Divergent);
    ASSERT_THROW(trials_needed(10, 0.5), Divergent);
}

TEST(trials_needed, increasing_and_divergent) {
    double previous = 0;
    for (int i = 0; i < 100; ++i) {
        double t = trials_needed(10, i * 0.0000999);
        ASSERT_GT(t, previous);
        previous = t;
    }
    ASSERT_GT(trials_needed(10, 0.01 - 1e-12), 1e9);
}

TEST(trials_needed, consistency_with_accumulated_beta) {
    for (double l : {2.0, 10.0, 31.0}) {
        for (double alpha : {0.0, 1e-4, 1e-3, 5e-3, 0.01, 0.2}) {
            AccumulatedBeta b = beta_accumulated(alpha, l);
            if (b.beta < 1) {
                ASSERT_NEAR(trials_needed(l, alpha), l / (1 - b.beta), 1e-9 * l / (1 - b.beta));
            } else {
                ASSERT_THROW(trials_needed(l, alpha), Divergent);
            }
        }
    }
}

TEST(is_quantum_efficient, examples) {
    EfficiencyVerdict yes = is_quantum_efficient(1000, 1e-7);
    ASSERT_TRUE(yes.efficient);
    ASSERT_NEAR(*yes.quantum_trials, 1000 / 0.9, 1e-9);
    ASSERT_NEAR(yes.classical_cost, std::exp(10.0), 1e-6);

    EfficiencyVerdict no = is_quantum_efficient(10, 0.005);
    ASSERT_FALSE(no.efficient);
    ASSERT_NEAR(no.classical_cost, 8.62, 5e-3);

    EfficiencyVerdict divergent = is_quantum_efficient(10, 0.02);
    ASSERT_FALSE(divergent.efficient);
    ASSERT_FALSE(divergent.quantum_trials);
    ASSERT_FALSE(divergent.diagnostic.empty());
}

TEST(max_factorable, examples) {
    MaxFactorable m = max_factorable(0.04);
    ASSERT_NEAR(m.ln_n_max, 5.0, 1e-12);
    ASSERT_NEAR(*m.n_max / std::exp(5.0) - 1, 0.0, 1e-9);
    ASSERT_NEAR(*max_factorable(1.0).n_max, std::numbers::e, 1e-12);
    // mu^2 eta = 2 pi / 25.
    MaxFactorable second = max_factorable(spin_boson(1, 2 * std::numbers::pi / 25));
    ASSERT_NEAR(second.ln_n_max, 5.0, 1e-12);
    ASSERT_THROW(max_factorable(0.0), DomainError);
    ASSERT_FALSE(max_factorable(1e-10).n_max);
}

TEST(max_factorable, decreasing_and_consistent) {
    double previous = INFINITY;
    for (double alpha : {1e-6, 1e-4, 1e-2, 0.1, 1.0}) {
        double ln = max_factorable(alpha).ln_n_max;
        ASSERT_LT(ln, previous);
        previous = ln;
    }
    double alpha = alpha_spin_boson(spin_boson(1, 0.01));
    ASSERT_NEAR(max_factorable(alpha).ln_n_max, 1 / std::sqrt(alpha), 1e-12);
}

TEST(decoherence_time, examples) {
    ASSERT_NEAR(decoherence_time({1, 0.01, 1}), 1e-4, 1e-18);
    ASSERT_EQ(decoherence_time({3.5, 2, 2}), 3.5);
    ASSERT_NEAR(decoherence_time({1, 1, 0.5}), 4 * decoherence_time({1, 1, 1}), 1e-15);
    ASSERT_THROW(decoherence_time({1, 1, 0}), DomainError);
}

TEST(budget_report, fields) {
    BudgetReport report = budget_report(0.001, 10);
    ASSERT_EQ(report.n_op, 100.0);
    ASSERT_NEAR(report.beta_total.beta, 0.1, 1e-15);
    ASSERT_NEAR(*report.trials, 10 / 0.9, 1e-12);
    ASSERT_GE(*report.trials, 10.0);
    ASSERT_FALSE(budget_report(0.02, 10).trials);
}
