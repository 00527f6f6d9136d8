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

#include "shordecoh/numtheory.h"

#include <numeric>
#include <string>

#include "shordecoh/errors.h"

namespace shordecoh {

namespace {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

Rational Rational::make(uint64_t num, uint64_t den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    uint64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

uint64_t mod_pow(uint64_t base, uint64_t exponent, uint64_t modulus) {
    if (modulus < 2) {
        throw DomainError("mod_pow modulus must be >= 2, got " + std::to_string(modulus));
    }
    uint64_t result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1) {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

uint64_t gcd(uint64_t a, uint64_t b) {
    if (a == 0 && b == 0) {
        throw DomainError("gcd(0, 0) is undefined");
    }
    while (b != 0) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t multiplicative_order(uint64_t x, uint64_t n) {
    if (n < 2) {
        throw DomainError("order modulus must be >= 2");
    }
    x %= n;
    uint64_t g = gcd(x, n);
    if (g != 1) {
        throw NotCoprime(x, n, g);
    }
    uint64_t power = x;
    uint64_t r = 1;
    while (power != 1) {
        power = mul_mod(power, x, n);
        ++r;
    }
    return r;
}

ConvergentList convergents(uint64_t num, uint64_t den) {
    if (den == 0) {
        throw DomainError("convergents of a fraction with zero denominator");
    }
    // p_{-1}/q_{-1} = 1/0, p_{-2}/q_{-2} = 0/1.
    uint64_t p_prev = 1, q_prev = 0;
    uint64_t p_prev2 = 0, q_prev2 = 1;
    ConvergentList out;
    uint64_t a = num, b = den;
    while (true) {
        uint64_t term = a / b;
        uint64_t p = term * p_prev + p_prev2;
        uint64_t q = term * q_prev + q_prev2;
        out.push_back(Rational{p, q});
        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = p;
        q_prev = q;
        uint64_t rem = a % b;
        if (rem == 0) {
            break;
        }
        a = b;
        b = rem;
    }
    return out;
}

std::string_view describe(FactorFailure failure) {
    switch (failure) {
        case FactorFailure::kNone:
            return "none";
        case FactorFailure::kOddOrder:
            return "order r is odd";
        case FactorFailure::kHalfPowerIsMinusOne:
            return "x^{r/2} ≡ −1 (mod N)";
        case FactorFailure::kHalfPowerIsOne:
            return "x^{r/2} ≡ 1 (mod N), r is not the order";
    }
    return "unknown";
}

FactorAttempt factors_from_order(uint64_t x, uint64_t n, uint64_t r) {
    if (r == 0 || mod_pow(x, r, n) != 1) {
        throw InvalidOrder("x^r != 1 mod N for x=" + std::to_string(x) + ", N=" + std::to_string(n) +
                           ", r=" + std::to_string(r));
    }
    if (r % 2 != 0) {
        return {std::nullopt, FactorFailure::kOddOrder};
    }
    uint64_t half = mod_pow(x, r / 2, n);
    if (half == n - 1) {
        return {std::nullopt, FactorFailure::kHalfPowerIsMinusOne};
    }
    if (half == 1) {
        return {std::nullopt, FactorFailure::kHalfPowerIsOne};
    }
    uint64_t lo = gcd((half + n - 1) % n, n);
    uint64_t hi = gcd(half + 1, n);
    return {FactorPair{lo, hi}, FactorFailure::kNone};
}

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace shordecoh
