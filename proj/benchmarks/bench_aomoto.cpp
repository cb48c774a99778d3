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
#include "arrwb/orlik_solomon.hpp"

namespace {

using namespace arrwb;

void BM_OsAlgebra(benchmark::State& state, Arrangement a) {
  for (auto _ : state) benchmark::DoNotOptimize(OsAlgebra(a));
}
BENCHMARK_CAPTURE(BM_OsAlgebra, braid_a3, braid_a3())->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OsAlgebra, er9, er9())->Unit(benchmark::kMillisecond);

void BM_AomotoBetti(benchmark::State& state, Arrangement a) {
  const OsAlgebra algebra(a);
  std::vector<Rational> w(a.size(), 1);
  w.back() = -Rational(static_cast<long>(a.size() - 1));
  const WeightVector lambda(w);
  for (auto _ : state) benchmark::DoNotOptimize(AomotoComplex(algebra, lambda).betti());
}
BENCHMARK_CAPTURE(BM_AomotoBetti, x3, x3_arrangement())->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_AomotoBetti, er9, er9())->Unit(benchmark::kMicrosecond);

}  // namespace
