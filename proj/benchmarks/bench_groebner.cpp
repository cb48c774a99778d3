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
#include "arrwb/critical_ideal.hpp"
#include "arrwb/groebner.hpp"
#include "arrwb/poly_io.hpp"

namespace {

using namespace arrwb;

void BM_Cyclic4(benchmark::State& state) {
  const RingPtr ring = Ring::make({"a", "b", "c", "d"});
  const std::vector<Polynomial> gens{
      parse_polynomial(ring, "a+b+c+d"),
      parse_polynomial(ring, "a*b+b*c+c*d+d*a"),
      parse_polynomial(ring, "a*b*c+b*c*d+c*d*a+d*a*b"),
      parse_polynomial(ring, "a*b*c*d-1"),
  };
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ring, gens, Budget::unlimited()));
}
BENCHMARK(BM_Cyclic4)->Unit(benchmark::kMillisecond);

void BM_UniversalIdealX3(benchmark::State& state) {
  const Arrangement a = x3_arrangement();
  const auto gens = minimal_derivation_generators(a).generators;
  const CriticalOneForm omega = CriticalOneForm::universal(a);
  for (auto _ : state) {
    const PolyIdeal ideal = logarithmic_ideal(omega, gens);
    benchmark::DoNotOptimize(ideal.groebner(Budget::unlimited()));
  }
}
BENCHMARK(BM_UniversalIdealX3)->Unit(benchmark::kMillisecond);

void BM_SaturationDeletion(benchmark::State& state) {
  const Arrangement a = monomial_deletion(2);
  const WeightVector w = monomial_deletion_weights(2, 1, -1, 0);
  for (auto _ : state) {
    const CriticalOneForm omega = CriticalOneForm::specialized(a, w);
    const PolyIdeal ideal = logarithmic_ideal(a, w);
    benchmark::DoNotOptimize(saturate(ideal, omega.forms(), Budget::unlimited()));
  }
}
BENCHMARK(BM_SaturationDeletion)->Unit(benchmark::kMillisecond);

}  // namespace
