// Copyright 2026 The greenseq Authors.
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

#include "greenseq/canonical.hpp"
#include "greenseq/catalog.hpp"
#include "greenseq/search.hpp"

namespace {

using namespace greenseq;

ExchangeMatrix quiver(const char* name) { return catalog::make(catalog::lookup(name).spec).matrix; }

// A few steps into the mutation class so the matrix is not the sparse framed one.
ExchangeMatrix state(const char* name) {
  ExchangeMatrix r = framed(quiver(name));
  for (int v = 0; v < 4; ++v) r = mutate(r, v % r.mutable_count());
  return r;
}

void BM_Mutate(benchmark::State& st) {
  const ExchangeMatrix r = state("e6");
  int k = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(mutate(r, k));
    k = (k + 1) % r.mutable_count();
  }
}
BENCHMARK(BM_Mutate);

void BM_CanonicalKey(benchmark::State& st, const char* name) {
  const ExchangeMatrix r = state(name);
  for (auto _ : st) benchmark::DoNotOptimize(canonical_key(r));
}
BENCHMARK_CAPTURE(BM_CanonicalKey, a3, "a3-linear");
BENCHMARK_CAPTURE(BM_CanonicalKey, e6, "e6");
BENCHMARK_CAPTURE(BM_CanonicalKey, x6, "x6");

void BM_Count(benchmark::State& st, const char* name, int bound) {
  const ExchangeMatrix q = quiver(name);
  SearchOptions o;
  o.max_length = bound;
  o.jobs = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_mgs(q, o));
}
BENCHMARK_CAPTURE(BM_Count, a3, "a3-linear", 6)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Count, affine_d4, "affine-d4", 22)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Count, d5, "d5", 20)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& st) {
  const SearchDag dag = explore(quiver("affine-d4"), {22, 20'000'000, 1});
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_mgs(dag, [](const MutationSequence&) { return true; }));
}
BENCHMARK(BM_Enumerate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
