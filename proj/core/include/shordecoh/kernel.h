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

#ifndef SHORDECOH_KERNEL_H
#define SHORDECOH_KERNEL_H

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace shordecoh {

/// Off-diagonal suppression K(a, a') of the register density matrix.
///
///   Coherent        K = 1
///   Hamming(xi)     K = exp(-xi * popcount(a ^ a'))
///   ConstantBeta(b) K = 1 on the diagonal, 1 - b elsewhere
///
/// beta = 0 is full coherence and beta = 1 full decoherence.
class Kernel {
   public:
    enum class Kind { kCoherent, kHamming, kConstantBeta };

    static Kernel coherent();
    /// Throws DomainError for xi < 0 or non-finite xi.
    static Kernel hamming(double xi);
    /// Throws DomainError for beta outside [0, 1].
    static Kernel constant_beta(double beta);

    /// Accepts "coherent", "xi:<real>" and "beta:<real>".
    static Kernel parse(std::string_view text);
    std::string to_string() const;

    Kind kind() const {
        return kind_;
    }
    double xi() const {
        return kind_ == Kind::kHamming ? param_ : 0.0;
    }
    double beta() const {
        return kind_ == Kind::kConstantBeta ? param_ : 0.0;
    }

    double weight(uint64_t a, uint64_t b) const {
        if (a == b) {
            return 1.0;
        }
        switch (kind_) {
            case Kind::kCoherent:
                return 1.0;
            case Kind::kHamming:
                return hamming_table_[static_cast<unsigned>(std::popcount(a ^ b))];
            case Kind::kConstantBeta:
                return 1.0 - param_;
        }
        return 1.0;
    }

    bool operator==(const Kernel &other) const {
        return kind_ == other.kind_ && param_ == other.param_;
    }

   private:
    Kernel(Kind kind, double param);

    Kind kind_;
    double param_;
    std::array<double, 65> hamming_table_{};
};

inline double kernel_weight(const Kernel &kernel, uint64_t a, uint64_t b) {
    return kernel.weight(a, b);
}

}  // namespace shordecoh

#endif
