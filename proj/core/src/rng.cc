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

#include "shordecoh/rng.h"

#include "shordecoh/errors.h"

namespace shordecoh {

namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer.
uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SeededGenerator::SeededGenerator(uint64_t master_seed, uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      key_(mix64(mix64(master_seed + kGolden) ^ mix64(stream_index * kGolden + 0x632be59bd9b4e019ULL))) {
}

SeededGenerator::result_type SeededGenerator::operator()() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double SeededGenerator::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

uint64_t SeededGenerator::below(uint64_t n) {
    if (n == 0) {
        throw DomainError("below(0)");
    }
    // Rejection on the top of the range keeps the draw unbiased.
    const uint64_t limit = max() - max() % n;
    uint64_t v;
    do {
        v = (*this)();
    } while (v >= limit);
    return v % n;
}

}  // namespace shordecoh
