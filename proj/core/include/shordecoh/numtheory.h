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

#ifndef SHORDECOH_NUMTHEORY_H
#define SHORDECOH_NUMTHEORY_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace shordecoh {

/// Non-negative fraction kept in lowest terms.
struct Rational {
    uint64_t num = 0;
    uint64_t den = 1;

    /// Reduces num/den. Throws DomainError when den == 0.
    static Rational make(uint64_t num, uint64_t den);

    bool operator==(const Rational &) const = default;
    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

using ConvergentList = std::vector<Rational>;

/// base^exponent mod modulus, with 128-bit intermediates.
uint64_t mod_pow(uint64_t base, uint64_t exponent, uint64_t modulus);

/// Throws DomainError for gcd(0, 0).
uint64_t gcd(uint64_t a, uint64_t b);

/// Smallest r >= 1 with x^r = 1 mod n, by direct iteration.
/// Throws NotCoprime when gcd(x, n) != 1.
uint64_t multiplicative_order(uint64_t x, uint64_t n);

/// All continued-fraction convergents of num/den, in order. The last
/// entry equals num/den in lowest terms.
ConvergentList convergents(uint64_t num, uint64_t den);

struct FactorPair {
    uint64_t first = 0;
    uint64_t second = 0;
};

enum class FactorFailure {
    kNone,
    kOddOrder,
    kHalfPowerIsMinusOne,
    kHalfPowerIsOne,
};

std::string_view describe(FactorFailure failure);

struct FactorAttempt {
    std::optional<FactorPair> factors;
    FactorFailure failure = FactorFailure::kNone;

    explicit operator bool() const {
        return factors.has_value();
    }
};

/// gcd(x^{r/2} -+ 1, n) extraction. Odd r, or x^{r/2} = -1 mod n, is a
/// normal "no factor from this base" outcome. Throws InvalidOrder when
/// x^r != 1 mod n.
FactorAttempt factors_from_order(uint64_t x, uint64_t n, uint64_t r);

/// Trial division. Only used for the desk-scale prime guard.
bool is_prime(uint64_t n);

}  // namespace shordecoh

#endif
