// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "arrwb/catalog.hpp"
#include "arrwb/log_modules.hpp"

namespace {

using namespace arrwb;

void BM_MinimalGenerators(benchmark::State& state, Arrangement a) {
  for (auto _ : state) benchmark::DoNotOptimize(minimal_derivation_generators(a));
}
BENCHMARK_CAPTURE(BM_MinimalGenerators, braid_a3, braid_a3())->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinimalGenerators, x3, x3_arrangement())->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinimalGenerators, deletion_2, monomial_deletion(2))->Unit(benchmark::kMillisecond);

void BM_LogForms(benchmark::State& state) {
  const Arrangement a = x3_arrangement();
  for (auto _ : state) benchmark::DoNotOptimize(log_forms_in_degree(a, 1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LogForms)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
