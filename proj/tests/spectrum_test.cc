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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.h"
#include "shordecoh/errors.h"
#include "shordecoh/numtheory.h"

using namespace shordecoh;

namespace {

ProblemInstance fig1() {
    return build_instance(21, 5, QPolicy::fixed(128));
}

constexpr double kPeak = (21.0 / 128) * (21.0 / 128);

}  // namespace

TEST(kernel, weights) {
    ASSERT_NEAR(kernel_weight(Kernel::hamming(0.1), 3, 9), std::exp(-0.2), 1e-15);
    ASSERT_NEAR(kernel_weight(Kernel::hamming(0.1), 3, 9), 0.818731, 1e-6);
    for (const Kernel &k : {Kernel::coherent(), Kernel::hamming(0.7), Kernel::constant_beta(0.3)}) {
        for (uint64_t a = 0; a < 64; ++a) {
            ASSERT_EQ(k.weight(a, a), 1.0);
            for (uint64_t b = 0; b < 64; ++b) {
                double w = k.weight(a, b);
                ASSERT_EQ(w, k.weight(b, a));
                ASSERT_GE(w, 0.0);
                ASSERT_LE(w, 1.0);
            }
        }
    }
    ASSERT_EQ(Kernel::constant_beta(1).weight(1, 2), 0.0);
    ASSERT_THROW(Kernel::hamming(-0.1), DomainError);
    ASSERT_THROW(Kernel::constant_beta(1.5), DomainError);
}

TEST(kernel, parse_round_trip) {
    for (const char *text : {"coherent", "xi:0.1", "beta:0.58", "xi:2", "beta:1"}) {
        ASSERT_EQ(Kernel::parse(text).to_string(), text);
    }
    ASSERT_EQ(Kernel::parse("xi:0.1"), Kernel::hamming(0.1));
    ASSERT_THROW(Kernel::parse("beta:1.5"), DomainError);
    ASSERT_THROW(Kernel::parse("gamma:1"), DomainError);
    ASSERT_THROW(Kernel::parse("xi:abc"), DomainError);
}

TEST(pairwise_sum, matches_exact_small_sums) {
    std::vector<double> v(1000, 0.1);
    ASSERT_NEAR(pairwise_sum(v), 100.0, 1e-12);
    ASSERT_EQ(pairwise_sum({}), 0.0);
}

TEST(coherent_joint, fig1_values) {
    ProblemInstance inst = fig1();
    Spectrum s = coherent_joint(inst, 3);
    ASSERT_EQ(s.values.size(), 128u);
    ASSERT_NEAR(s.values[64], kPeak, 1e-12);
    ASSERT_NEAR(s.values[64], 0.02691650, 1e-8);
    ASSERT_NEAR(s.values[0], kPeak, 1e-12);
    ASSERT_NEAR(s.total(), 21.0 / 128, 1e-9);
}

TEST(coherent_joint, matches_brute_force) {
    ProblemInstance inst = fig1();
    for (uint64_t k = 0; k < inst.r; ++k) {
        auto expected = oracle::joint(21, 5, 128, k, oracle::coherent_kernel());
        Spectrum s = coherent_joint(inst, k);
        for (uint64_t c = 0; c < 128; ++c) {
            ASSERT_NEAR(s.values[c], expected[c], 1e-12) << "k=" << k << " c=" << c;
        }
    }
}

TEST(decohered_joint, coherent_kernel_reproduces_closed_form) {
    ProblemInstance inst = fig1();
    for (uint64_t k = 0; k < inst.r; ++k) {
        Spectrum closed = coherent_joint(inst, k);
        Spectrum direct = decohered_joint(inst, k, Kernel::coherent());
        for (uint64_t c = 0; c < 128; ++c) {
            ASSERT_NEAR(direct.values[c], closed.values[c], 1e-12);
        }
    }
}

TEST(decohered_joint, full_decoherence_is_flat) {
    ProblemInstance inst = fig1();
    Spectrum s = decohered_joint(inst, 3, Kernel::constant_beta(1));
    for (double v : s.values) {
        ASSERT_NEAR(v, 21.0 / (128.0 * 128.0), 1e-15);
    }
}

TEST(decohered_joint, hamming_matches_brute_force) {
    ProblemInstance inst = fig1();
    auto expected = oracle::joint(21, 5, 128, 3, oracle::hamming_kernel(0.1));
    Spectrum s = decohered_joint(inst, 3, Kernel::hamming(0.1));
    for (uint64_t c = 0; c < 128; ++c) {
        ASSERT_NEAR(s.values[c], expected[c], 1e-12) << c;
    }
}

TEST(decohered_joint, hamming_fills_gaps_and_lowers_peaks) {
    ProblemInstance inst = fig1();
    Spectrum coh = coherent_joint(inst, 3);
    Spectrum dec = decohered_joint(inst, 3, Kernel::hamming(0.1));
    for (uint64_t c = 0; c < 128; ++c) {
        ASSERT_GT(dec.values[c], 0.0) << c;
        if (is_on_peak(inst, c)) {
            ASSERT_LT(dec.values[c], coh.values[c]) << c;
        }
    }
}

TEST(decohered_joint, hermiticity_residue) {
    ProblemInstance inst = fig1();
    for (const Kernel &kernel :
         {Kernel::coherent(), Kernel::hamming(0.1), Kernel::hamming(2.0), Kernel::constant_beta(0.4)}) {
        for (uint64_t k = 0; k < inst.r; ++k) {
            for (const auto &v : decohered_joint_complex(inst, k, kernel)) {
                ASSERT_LT(std::abs(v.imag()), 1e-12);
            }
        }
    }
}

TEST(decohered_joint, thread_count_does_not_change_bits) {
    ProblemInstance inst = fig1();
    SpectrumOptions serial, parallel;
    parallel.threads = 4;
    for (uint64_t k = 0; k < inst.r; ++k) {
        auto a = decohered_joint(inst, k, Kernel::hamming(0.3), serial).values;
        auto b = decohered_joint(inst, k, Kernel::hamming(0.3), parallel).values;
        ASSERT_EQ(a, b);
    }
}

TEST(decohered_joint, guard) {
    ProblemInstance inst = build_instance(21, 5, QPolicy::fixed(8192));
    ASSERT_THROW(decohered_joint(inst, 0, Kernel::hamming(0.1)), ResourceLimit);
    ASSERT_THROW(marginal(inst, Kernel::hamming(0.1)), ResourceLimit);
    // The closed form is not guarded.
    ASSERT_NEAR(coherent_joint(inst, 0).total(), static_cast<double>(index_set(inst, 0).count) / 8192, 1e-9);
}

TEST(marginal, fig1_values) {
    ProblemInstance inst = fig1();
    Spectrum coh = marginal(inst, Kernel::coherent());
    ASSERT_TRUE(coh.is_marginal());
    ASSERT_NEAR(coh.values[64], (2 * 22.0 * 22 + 4 * 21.0 * 21) / (128.0 * 128), 1e-12);
    ASSERT_NEAR(coh.values[64], 0.166748, 1e-6);
    ASSERT_NEAR(coh.total(), 1.0, 1e-9);

    Spectrum flat = marginal(inst, Kernel::constant_beta(1));
    for (double v : flat.values) {
        ASSERT_NEAR(v, 1.0 / 128, 1e-15);
    }
}

// Normalization across instances and kernels.
TEST(marginal, normalization_property) {
    struct Case {
        uint64_t n, x, q;
    };
    for (Case cs : {Case{15, 7, 256}, Case{15, 2, 64}, Case{21, 2, 128}, Case{21, 5, 512}, Case{33, 5, 256},
                    Case{35, 3, 128}}) {
        ProblemInstance inst = build_instance(cs.n, cs.x, QPolicy::fixed(cs.q));
        for (const Kernel &kernel : {Kernel::coherent(), Kernel::hamming(0.05), Kernel::hamming(1.3),
                                     Kernel::constant_beta(0.2), Kernel::constant_beta(0.9)}) {
            for (uint64_t k = 0; k < inst.r; ++k) {
                double expected = static_cast<double>(index_set(inst, k).count) / static_cast<double>(inst.q);
                Spectrum joint = decohered_joint(inst, k, kernel);
                ASSERT_NEAR(joint.total(), expected, 1e-9);
                ASSERT_GE(*std::min_element(joint.values.begin(), joint.values.end()), 0.0);
            }
            ASSERT_NEAR(marginal(inst, kernel).total(), 1.0, 1e-9);
        }
    }
}

TEST(marginal, kernel_endpoints) {
    ProblemInstance inst = fig1();
    auto h0 = marginal(inst, Kernel::hamming(0)).values;
    auto coh = marginal(inst, Kernel::coherent()).values;
    for (std::size_t c = 0; c < h0.size(); ++c) {
        ASSERT_NEAR(h0[c], coh[c], 1e-12);
    }
    auto h50 = marginal(inst, Kernel::hamming(50)).values;
    auto flat = marginal(inst, Kernel::constant_beta(1)).values;
    ASSERT_LT(total_variation(h50, flat), 1e-9);
}

TEST(constant_beta_mixture, examples) {
    ProblemInstance inst = fig1();
    auto coh = coherent_joint(inst, 3).values;
    ASSERT_EQ(constant_beta_mixture(inst, 3, 0).values, coh);
    for (double v : constant_beta_mixture(inst, 3, 1).values) {
        ASSERT_NEAR(v, 21.0 / 16384, 1e-15);
    }
    double half = constant_beta_mixture(inst, 3, 0.5).values[64];
    ASSERT_NEAR(half, 0.5 * kPeak + 0.5 * 21.0 / 16384, 1e-15);
    ASSERT_NEAR(half, 0.0140991, 1e-7);
}

TEST(constant_beta_mixture, identity_with_double_sum) {
    ProblemInstance inst = fig1();
    for (int i = 0; i <= 10; ++i) {
        double beta = i / 10.0;
        for (uint64_t k = 0; k < inst.r; ++k) {
            auto direct = decohered_joint(inst, k, Kernel::constant_beta(beta)).values;
            auto mixture = constant_beta_mixture(inst, k, beta).values;
            for (std::size_t c = 0; c < direct.size(); ++c) {
                ASSERT_NEAR(direct[c], mixture[c], 1e-12) << beta << " " << k << " " << c;
            }
        }
    }
}

TEST(fit_constant_beta, endpoints) {
    ProblemInstance inst = fig1();
    ASSERT_NEAR(fit_constant_beta(inst, 0).beta, 0.0, 1e-6);
    ASSERT_NEAR(fit_constant_beta(inst, 50).beta, 1.0, 1e-3);
}

TEST(fit_constant_beta, matches_closed_form_least_squares) {
    ProblemInstance inst = fig1();
    auto h = oracle::marginal(21, 5, 128, 6, oracle::hamming_kernel(0.1));
    auto c = oracle::marginal(21, 5, 128, 6, oracle::coherent_kernel());
    double expected = oracle::least_squares_beta(h, c, 1.0 / 128);
    BetaFit fit = fit_constant_beta(inst, 0.1);
    ASSERT_NEAR(fit.beta, expected, 2e-6);
    // Frozen from the closed-form oracle above.
    ASSERT_NEAR(fit.beta, 0.257922, 5e-6);
}

TEST(peak_metrics, on_peak_set) {
    ProblemInstance inst = fig1();
    std::vector<uint64_t> on;
    for (uint64_t c = 0; c < inst.q; ++c) {
        if (is_on_peak(inst, c)) {
            on.push_back(c);
        }
    }
    ASSERT_EQ(on, (std::vector<uint64_t>{0, 21, 22, 42, 43, 64, 85, 86, 106, 107}));
}

TEST(peak_metrics, examples) {
    ProblemInstance inst = fig1();
    PeakMetrics coh = peak_metrics(marginal(inst, Kernel::coherent()), inst);
    ASSERT_GE(coh.on_peak_mass, 0.9);

    PeakMetrics flat = peak_metrics(marginal(inst, Kernel::constant_beta(1)), inst);
    ASSERT_NEAR(flat.on_peak_mass, 10.0 / 128, 1e-12);
    ASSERT_NEAR(flat.floor_to_peak_ratio, 1.0, 1e-12);

    PeakMetrics half = peak_metrics(marginal(inst, Kernel::constant_beta(0.5)), inst);
    ASSERT_GE(half.on_peak_mass, 0.40);
    ASSERT_LE(half.on_peak_mass, 0.60);
    ASSERT_NEAR(half.on_peak_mass, 0.5 * coh.on_peak_mass + 0.5 * 10.0 / 128, 1e-12);

    ASSERT_THROW(peak_metrics(coherent_joint(inst, 3), inst), DomainError);
}

TEST(peak_metrics, monotone_flattening) {
    for (auto [n, x, q] : {std::tuple<uint64_t, uint64_t, uint64_t>{15, 7, 256}, {21, 5, 128}}) {
        ProblemInstance inst = build_instance(n, x, QPolicy::fixed(q));
        double previous = -1;
        for (int i = 0; i <= 20; ++i) {
            double beta = i / 20.0;
            double ratio = peak_metrics(constant_beta_marginal(inst, beta), inst).floor_to_peak_ratio;
            ASSERT_GE(ratio, previous - 1e-15);
            previous = ratio;
            if (i == 20) {
                ASSERT_NEAR(ratio, 1.0, 1e-12);
            }
        }
    }
    // q / r = 64 is an integer: peaks are exact and the floor is empty.
    ProblemInstance exact = build_instance(15, 7, QPolicy::standard());
    ASSERT_EQ(peak_metrics(constant_beta_marginal(exact, 0), exact).floor_to_peak_ratio, 0.0);
}

TEST(total_variation, basics) {
    std::vector<double> a{0.5, 0.5}, b{1.0, 0.0};
    ASSERT_DOUBLE_EQ(total_variation(a, b), 0.5);
    ASSERT_THROW(total_variation(a, std::vector<double>{1.0}), DomainError);
}
