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

#include <benchmark/benchmark.h>

#include "shordecoh/recovery.h"
#include "shordecoh/sampler.h"

namespace shordecoh {
namespace {

void BM_outcome_sampler(benchmark::State &state) {
    ProblemInstance inst = build_instance(21, 5, QPolicy::fixed(static_cast<uint64_t>(state.range(0))));
    OutcomeSampler sampler(inst, Kernel::hamming(0.1));
    SeededGenerator gen(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.sample(gen));
    }
}
BENCHMARK(BM_outcome_sampler)->Arg(128)->Arg(512);

void BM_dephasing_sampler(benchmark::State &state) {
    ProblemInstance inst = build_instance(21, 5, QPolicy::fixed(static_cast<uint64_t>(state.range(0))));
    DephasingSampler sampler(inst, 0.1);
    SeededGenerator gen(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.sample(gen));
    }
}
BENCHMARK(BM_dephasing_sampler)->Arg(128)->Arg(512)->Arg(4096);

void BM_recover_period(benchmark::State &state) {
    ProblemInstance inst = build_instance(899, 2, QPolicy::standard());
    uint64_t c = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(recover_period(c, inst));
        c = (c * 2654435761u + 1) % inst.q;
    }
}
BENCHMARK(BM_recover_period);

void BM_estimate_success_rate(benchmark::State &state) {
    ProblemInstance inst = build_instance(15, 7, QPolicy::standard());
    RunOptions options;
    options.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_success_rate(inst, Kernel::constant_beta(0.5), 10000, 1, options));
    }
}
BENCHMARK(BM_estimate_success_rate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace shordecoh
