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

#ifndef SHORDECOH_RNG_H
#define SHORDECOH_RNG_H

#include <cstdint>
#include <limits>

namespace shordecoh {

/// Counter-based generator: the i-th output is a fixed bijective mix of
/// (key, i), where key is derived from (master_seed, stream_index). Any
/// worker can rebuild any stream without touching shared state.
class SeededGenerator {
   public:
    using result_type = uint64_t;

    SeededGenerator(uint64_t master_seed, uint64_t stream_index);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()();

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform integer in [0, n). n must be positive.
    uint64_t below(uint64_t n);

    uint64_t master_seed() const {
        return master_seed_;
    }
    uint64_t stream_index() const {
        return stream_index_;
    }
    uint64_t draws() const {
        return counter_;
    }

   private:
    uint64_t master_seed_;
    uint64_t stream_index_;
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace shordecoh

#endif
