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

#include "shordecoh/spectrum.h"

namespace shordecoh {
namespace {

ProblemInstance instance_for_q(int64_t q) {
    return build_instance(21, 5, QPolicy::fixed(static_cast<uint64_t>(q)));
}

void BM_coherent_joint(benchmark::State &state) {
    ProblemInstance inst = instance_for_q(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(coherent_joint(inst, 3));
    }
}
BENCHMARK(BM_coherent_joint)->RangeMultiplier(4)->Range(128, 1 << 16);

void BM_decohered_joint(benchmark::State &state) {
    ProblemInstance inst = instance_for_q(state.range(0));
    SpectrumOptions options;
    options.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decohered_joint(inst, 3, Kernel::hamming(0.1), options));
    }
}
BENCHMARK(BM_decohered_joint)->ArgsProduct({{128, 512, 2048}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_marginal_hamming(benchmark::State &state) {
    ProblemInstance inst = instance_for_q(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(marginal(inst, Kernel::hamming(0.1)));
    }
}
BENCHMARK(BM_marginal_hamming)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_fit_constant_beta(benchmark::State &state) {
    ProblemInstance inst = instance_for_q(128);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_constant_beta(inst, 0.1));
    }
}
BENCHMARK(BM_fit_constant_beta)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace shordecoh
