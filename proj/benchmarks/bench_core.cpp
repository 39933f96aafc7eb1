/*
 * Copyright 2026 The hessloci authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file bench_core.cpp
 * @brief Microbenchmarks for the hot paths: symbolic Hessian determinants,
 *        the per-point mod-p rank used by enumeration, full projective
 *        scans, and the graded membership elimination.
 */

#include <benchmark/benchmark.h>

#include "hessloci/families.hpp"
#include "hessloci/graded.hpp"
#include "hessloci/poly_io.hpp"
#include "hessloci/rng.hpp"

using namespace hessloci;

static void BM_PolyDetHessian(benchmark::State& state) {
  const int nv = static_cast<int>(state.range(0));
  Rng rng(42);
  MultiPoly<Rat> f = random_form<Rat>(rng, nv, 3, Rat(0));
  DForm<Rat> df(f);
  for (auto _ : state) {
    MultiPoly<Rat> h = df.hessian().det();
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_PolyDetHessian)->DenseRange(3, 6);

static void BM_FpRankSmall(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Barrett bp(31);
  std::mt19937_64 eng(7);
  std::uint64_t a[kMaxVars * kMaxVars];
  std::uint64_t work[kMaxVars * kMaxVars];
  for (int i = 0; i < n * n; ++i) a[i] = eng() % 31;
  for (auto _ : state) {
    std::copy(a, a + n * n, work);
    benchmark::DoNotOptimize(fp_rank_small(work, n, bp));
  }
}
BENCHMARK(BM_FpRankSmall)->DenseRange(4, 6);

static void BM_EnumerateRankProfile(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  WaringForm<Rat> w = gen_waring_normal(std::vector<Rat>(5, Rat(1)));
  DForm<Fp> fp(reduce_poly_mod(w.f, p));
  for (auto _ : state) {
    RankProfile prof = rank_profile(fp, {});
    benchmark::DoNotOptimize(prof.count_by_rank);
  }
  state.SetItemsProcessed(state.iterations() * detail::projective_size(5, p));
}
BENCHMARK(BM_EnumerateRankProfile)->Arg(11)->Arg(23)->Arg(31)->Unit(benchmark::kMillisecond);

static void BM_MembershipSlice(benchmark::State& state) {
  // the degree-N elimination behind the socle and membership certificate suites
  const int nv = static_cast<int>(state.range(0));
  Rng rng(2026);
  MultiPoly<Rat> f = random_form<Rat>(rng, nv, 3, Rat(0));
  DForm<Rat> df(f);
  for (auto _ : state) {
    JacobianRing<Rat> jr(df);  // fresh cache so the factorization reruns
    benchmark::DoNotOptimize(jr.jacobian_rank(df.socle_degree()));
  }
  state.SetLabel("dim S^N = " + std::to_string(monomial_count(nv, nv * 1)));
}
BENCHMARK(BM_MembershipSlice)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ThmdSuite(benchmark::State& state) {
  const int nv = static_cast<int>(state.range(0));
  Rng rng(2027);
  MultiPoly<Rat> f = random_form<Rat>(rng, nv, 3, Rat(0));
  DForm<Rat> df(f);
  for (auto _ : state) {
    ThmDReport<Rat> rep = thmd_certificates(df);
    benchmark::DoNotOptimize(rep.all_member);
  }
}
BENCHMARK(BM_ThmdSuite)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_ParsePrintRoundTrip(benchmark::State& state) {
  Rng rng(5);
  MultiPoly<Rat> f = random_form<Rat>(rng, 5, 3, Rat(0));
  const std::string text = poly_print(f);
  for (auto _ : state) {
    MultiPoly<Rat> g = poly_parse_q(text, 5);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_ParsePrintRoundTrip);

BENCHMARK_MAIN();
