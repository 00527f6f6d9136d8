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

#include "shordecoh/instance.h"

#include <bit>
#include <cmath>
#include <sstream>

#include "shordecoh/errors.h"
#include "shordecoh/numtheory.h"

namespace shordecoh {

bool is_power_of_two(uint64_t v) {
    return std::has_single_bit(v);
}

QChoice choose_q(uint64_t n, const QPolicy &policy) {
    if (n < 3) {
        throw DomainError("N must be >= 3");
    }
    if (n > (uint64_t{1} << 31)) {
        throw ResourceLimit("N exceeds 2^31");
    }
    uint64_t lo = n * n;
    if (policy.override_q) {
        uint64_t q = *policy.override_q;
        if (!is_power_of_two(q) || q < 2) {
            throw InvalidModulus("q=" + std::to_string(q) + " is not a power of two >= 2");
        }
        return {q, q < lo || q >= 2 * lo};
    }
    return {std::bit_ceil(lo), false};
}

ProblemInstance build_instance(uint64_t n, uint64_t x, const QPolicy &policy,
                               const InstanceLimits &limits) {
    if (n < 3) {
        throw DomainError("N must be >= 3, got " + std::to_string(n));
    }
    if (n > limits.max_n) {
        throw ResourceLimit("N=" + std::to_string(n) + " exceeds the desk-scale guard " +
                            std::to_string(limits.max_n));
    }
    if (x < 2 || x >= n) {
        throw DomainError("x must lie in [2, N), got " + std::to_string(x));
    }
    uint64_t shared = gcd(x, n);
    if (shared != 1) {
        throw NotCoprime(x, n, shared);
    }
    if (is_prime(n)) {
        throw DomainError("N=" + std::to_string(n) + " is prime");
    }

    ProblemInstance out;
    out.n = n;
    out.x = x;
    out.r = multiplicative_order(x, n);

    QChoice choice = choose_q(n, policy);
    if (choice.q < 2 * out.r) {
        throw InvalidModulus("q=" + std::to_string(choice.q) + " is below 2r=" +
                             std::to_string(2 * out.r));
    }
    if (choice.q > limits.max_q) {
        throw ResourceLimit("q=" + std::to_string(choice.q) + " exceeds the guard " +
                            std::to_string(limits.max_q));
    }
    out.q = choice.q;
    out.q_outside_standard_bound = choice.outside_standard_bound;
    out.bits = static_cast<unsigned>(std::countr_zero(choice.q));

    double ln_n = std::log(static_cast<double>(n));
    switch (limits.log_base) {
        case LogBase::kNatural:
            out.digit_length = ln_n;
            break;
        case LogBase::kBinary:
            out.digit_length = std::log2(static_cast<double>(n));
            break;
        case LogBase::kDecimal:
            out.digit_length = std::log10(static_cast<double>(n));
            break;
    }
    return out;
}

std::string ProblemInstance::describe() const {
    std::ostringstream os;
    os << "N=" << n << " x=" << x << " q=" << q << " r=" << r << " bits=" << bits;
    if (q_outside_standard_bound) {
        os << " (q outside [N^2, 2N^2))";
    }
    return os.str();
}

IndexSet index_set(const ProblemInstance &instance, uint64_t k) {
    if (k >= instance.r) {
        throw DomainError("k=" + std::to_string(k) + " outside [0, r=" + std::to_string(instance.r) +
                          ")");
    }
    return IndexSet{k, instance.r, (instance.q - 1 - k) / instance.r + 1};
}

}  // namespace shordecoh
