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

#ifndef SHORDECOH_INSTANCE_H
#define SHORDECOH_INSTANCE_H

#include <cstdint>
#include <optional>
#include <string>

namespace shordecoh {

enum class LogBase { kNatural, kBinary, kDecimal };

/// How the Fourier modulus q is picked. Standard takes the power of two in
/// [N^2, 2N^2); an override accepts any power of two >= 2r.
struct QPolicy {
    std::optional<uint64_t> override_q;

    static QPolicy standard() {
        return {};
    }
    static QPolicy fixed(uint64_t q) {
        return {q};
    }
};

struct QChoice {
    uint64_t q = 0;
    /// Set when an override falls outside [N^2, 2N^2).
    bool outside_standard_bound = false;
};

struct InstanceLimits {
    uint64_t max_n = uint64_t{1} << 20;
    uint64_t max_q = uint64_t{1} << 22;
    LogBase log_base = LogBase::kNatural;
};

bool is_power_of_two(uint64_t v);

/// The unique power of two in [n^2, 2n^2), or the override. An override
/// must be a power of two; the lower bound 2r is enforced by build_instance
/// since r is not known here.
QChoice choose_q(uint64_t n, const QPolicy &policy);

struct ProblemInstance {
    uint64_t n = 0;
    uint64_t x = 0;
    uint64_t q = 0;
    uint64_t r = 0;
    unsigned bits = 0;
    double digit_length = 0;
    bool q_outside_standard_bound = false;

    std::string describe() const;
};

/// Validates (n, x), finds the order and the modulus. Throws NotCoprime,
/// InvalidModulus, DomainError (range, prime n) or ResourceLimit (guards).
ProblemInstance build_instance(uint64_t n, uint64_t x, const QPolicy &policy,
                               const InstanceLimits &limits = {});

/// Members {k, k+r, k+2r, ...} of [0, q), stored as a progression.
struct IndexSet {
    uint64_t offset = 0;
    uint64_t step = 1;
    uint64_t count = 0;

    uint64_t k() const {
        return offset;
    }
    uint64_t operator[](uint64_t i) const {
        return offset + i * step;
    }
    bool contains(uint64_t a) const {
        return a >= offset && (a - offset) % step == 0 && (a - offset) / step < count;
    }
};

/// Throws DomainError unless 0 <= k < r.
IndexSet index_set(const ProblemInstance &instance, uint64_t k);

}  // namespace shordecoh

#endif
