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

#ifndef SHORDECOH_TESTS_ORACLES_H
#define SHORDECOH_TESTS_ORACLES_H

// Brute-force reference computations for the tests. Nothing here calls into
// the library's spectrum, sampler or recovery code paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace shordecoh::oracle {

inline uint64_t naive_pow_mod(uint64_t x, uint64_t e, uint64_t n) {
    uint64_t v = 1 % n;
    for (uint64_t i = 0; i < e; ++i) {
        v = v * x % n;
    }
    return v;
}

inline unsigned bit_count(uint64_t v) {
    unsigned count = 0;
    while (v) {
        count += v & 1;
        v >>= 1;
    }
    return count;
}

/// {a in [0, q) : x^a = x^k mod n}, found by walking the powers.
inline std::vector<uint64_t> restricted_set(uint64_t n, uint64_t x, uint64_t q, uint64_t k) {
    std::vector<uint64_t> out;
    const uint64_t target = naive_pow_mod(x, k, n);
    uint64_t power = 1 % n;
    for (uint64_t a = 0; a < q; ++a) {
        if (power == target) {
            out.push_back(a);
        }
        power = power * x % n;
    }
    return out;
}

using KernelFn = std::function<double(uint64_t, uint64_t)>;

inline KernelFn coherent_kernel() {
    return [](uint64_t, uint64_t) { return 1.0; };
}

inline KernelFn hamming_kernel(double xi) {
    return [xi](uint64_t a, uint64_t b) { return std::exp(-xi * bit_count(a ^ b)); };
}

inline KernelFn constant_beta_kernel(double beta) {
    return [beta](uint64_t a, uint64_t b) { return a == b ? 1.0 : 1.0 - beta; };
}

/// Joint P(c) by explicit complex double sum with unreduced phases.
inline std::vector<double> joint(uint64_t n, uint64_t x, uint64_t q, uint64_t k,
                                 const KernelFn &kernel) {
    auto members = restricted_set(n, x, q, k);
    std::vector<double> out(q);
    for (uint64_t c = 0; c < q; ++c) {
        std::complex<long double> sum = 0;
        for (uint64_t a : members) {
            for (uint64_t b : members) {
                long double angle = 2 * std::numbers::pi_v<long double> *
                                    (static_cast<long double>(a) - static_cast<long double>(b)) * c / q;
                sum += static_cast<long double>(kernel(a, b)) * std::polar<long double>(1, angle);
            }
        }
        out[c] = static_cast<double>(sum.real() / (static_cast<long double>(q) * q));
    }
    return out;
}

inline std::vector<double> marginal(uint64_t n, uint64_t x, uint64_t q, uint64_t r,
                                    const KernelFn &kernel) {
    std::vector<double> out(q, 0.0);
    for (uint64_t k = 0; k < r; ++k) {
        auto j = joint(n, x, q, k, kernel);
        for (uint64_t c = 0; c < q; ++c) {
            out[c] += j[c];
        }
    }
    return out;
}

/// Closed-form least-squares minimizer of sum (h - (1-b) c - b u)^2.
inline double least_squares_beta(const std::vector<double> &hamming,
                                 const std::vector<double> &coherent, double flat) {
    long double num = 0, den = 0;
    for (std::size_t i = 0; i < hamming.size(); ++i) {
        long double d = coherent[i] - flat;
        num += (coherent[i] - hamming[i]) * d;
        den += d * d;
    }
    return static_cast<double>(num / den);
}

}  // namespace shordecoh::oracle

#endif
