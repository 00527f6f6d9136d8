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

#ifndef SHORDECOH_ERRORS_H
#define SHORDECOH_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shordecoh {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// The base shares a factor with N. The shared factor is already a free
/// factor of N, so callers usually just report it.
class NotCoprime : public DomainError {
   public:
    NotCoprime(uint64_t x, uint64_t n, uint64_t shared)
        : DomainError("base " + std::to_string(x) + " shares factor " + std::to_string(shared) +
                      " with " + std::to_string(n)),
          shared_factor(shared) {
    }
    uint64_t shared_factor;
};

/// Fourier modulus is not a power of two, or too small for the order.
class InvalidModulus : public DomainError {
   public:
    using DomainError::DomainError;
};

/// A claimed order does not satisfy x^r = 1 mod N.
class InvalidOrder : public DomainError {
   public:
    using DomainError::DomainError;
};

/// A desk-scale guard (N, q, bits, matrix size) would be exceeded.
class ResourceLimit : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The trial-count estimate has hit its pole: L^2 * alpha >= 1.
class Divergent : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace shordecoh

#endif
