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

#include <doctest.h>

#include <set>

#include "hessloci/families.hpp"
#include "hessloci/poly_io.hpp"
#include "hessloci/strata.hpp"

using namespace hessloci;

TEST_CASE("projective representatives: count and uniqueness") {
  const std::uint64_t p = 5;
  const int nv = 3;
  const long long total = detail::projective_size(nv, p);
  CHECK(total == 31);  // (5^3 - 1) / 4
  std::set<std::vector<std::uint64_t>> seen;
  std::uint64_t x[kMaxVars];
  for (long long g = 0; g < total; ++g) {
    detail::decode_point(g, nv, p, x);
    std::vector<std::uint64_t> v(x, x + nv);
    // canonical: first nonzero coordinate is 1
    for (int i = 0; i < nv; ++i) {
      if (v[static_cast<std::size_t>(i)] == 0) continue;
      CHECK(v[static_cast<std::size_t>(i)] == 1);
      break;
    }
    seen.insert(v);
  }
  CHECK(static_cast<long long>(seen.size()) == total);
}

TEST_CASE("fermat D_1 over F_p: the three coordinate points") {
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3", 3));
  for (std::uint64_t p : {7ull, 13ull}) {  // p = 1 mod 3
    DForm<Fp> fp(reduce_poly_mod(fermat.poly(), p));
    StrataReport rep = enumerate_stratum(fp, 1, {});
    CHECK(rep.count == 3);
    REQUIRE(rep.points.size() == 3);
    for (const auto& pt : rep.points) {
      int nonzero = 0;
      for (auto v : pt) nonzero += v != 0;
      CHECK(nonzero == 1);
    }
  }
}

TEST_CASE("rank-6 threefold: D_2 has exactly the 15 points over F_31") {
  WaringForm<Rat> w = gen_waring_normal(std::vector<Rat>(5, Rat(1)));
  DForm<Fp> fp(reduce_poly_mod(w.f, 31));
  StrataReport rep = enumerate_stratum(fp, 2, {});
  CHECK(rep.count == 15);
}

TEST_CASE("enumeration is deterministic and independent of the worker count") {
  DForm<Rat> f(poly_parse_q("x0^3+x1^3+x2^3+x3^3+x0*x1*x2", 4));
  DForm<Fp> fp(reduce_poly_mod(f.poly(), 23));
  StrataOptions one, many;
  one.threads = 1;
  many.threads = 4;
  StrataReport a = enumerate_stratum(fp, 3, one);
  StrataReport b = enumerate_stratum(fp, 3, many);
  CHECK(a.count == b.count);
  CHECK(a.points == b.points);
}

TEST_CASE("sampling mode is seeded and deterministic") {
  DForm<Rat> f(poly_parse_q("x0^3+x1^3+x2^3+x3^3", 4));
  DForm<Fp> fp(reduce_poly_mod(f.poly(), 101));
  StrataOptions opt;
  opt.full = false;
  opt.trials = 5000;
  opt.seed = 99;
  StrataReport a = enumerate_stratum(fp, 3, opt);
  StrataReport b = enumerate_stratum(fp, 3, opt);
  CHECK(a.count == b.count);
  CHECK(a.points == b.points);
  CHECK(a.trials == 5000);
  opt.seed = 100;
  StrataReport c = enumerate_stratum(fp, 3, opt);
  CHECK((c.count != a.count || c.points != a.points));
}

TEST_CASE("full-enumeration size bound is enforced") {
  DForm<Rat> f(poly_parse_q("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6));
  DForm<Fp> fp(reduce_poly_mod(f.poly(), 101));  // (101^6-1)/100 is way past 2e6
  CHECK_THROWS_AS(enumerate_stratum(fp, 4, {}), DomainError);
  StrataOptions opt;
  opt.full = false;
  opt.trials = 1000;
  CHECK_NOTHROW(enumerate_stratum(fp, 4, opt));
}

TEST_CASE("dimension estimates: lifted finite sets, curves, surfaces, empties") {
  // D_2 of the rank-6 threefold: 15 global rational points -> dim 0
  WaringForm<Rat> w =
      gen_waring_normal(std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
  DForm<Rat> f6(w.f);
  auto d2 = estimate_stratum_dimension(f6, 2, 31, 29);
  CHECK(d2.dim == 0);
  CHECK(d2.lifted_zero_dimensional);

  // D_1 of a random smooth non-cyclic cubic: empty over tested fields
  Rng rng(31337);
  MultiPoly<Rat> fr(4, Rat(0));
  for (int attempt = 0; attempt < 32; ++attempt) {
    fr = random_form<Rat>(rng, 4, 3, Rat(0));
    if (smoothness_check(DForm<Rat>(fr))) break;
  }
  DForm<Rat> dfr(fr);
  auto d1 = estimate_stratum_dimension(dfr, 1, 31, 29);
  CHECK(d1.empty_over_tested);
  CHECK(d1.dim == -1);

  // the hessian hypersurface itself (D_n) of a cubic surface is a surface
  auto dn = estimate_stratum_dimension(dfr, 3, 31, 29);
  CHECK(dn.dim == 2);
}

TEST_CASE("estimate_dimension on an explicit polynomial system") {
  // V(h_fermat) in P^2 is three lines: dimension 1
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3", 3));
  std::vector<MultiPoly<Rat>> sys{fermat.hessian_poly()};
  auto est = estimate_dimension(sys, 31, 29);
  CHECK(est.dim == 1);
  CHECK(est.agreed);
}

TEST_CASE("verify_cyclic_d1: cyclic forms have D_1 = {P_0}") {
  // g must be general (itself non-cyclic), so every variable mixes
  auto g = poly_parse_q("x1^3+x2^3+x3^3+x4^3+x1*x2*x3+x2*x3*x4", 5);
  TsForm<Rat> cyc = gen_cyclic(g);
  DForm<Rat> f(cyc.f);
  auto rep = verify_cyclic_d1(f, 31, 29);
  CHECK(rep.p0_rank_one);
  CHECK(rep.only_point);
  CHECK(rep.count1 == 1);
  CHECK(rep.count2 == 1);

  // fermat surface is cyclic three ways over: D_1 = 3 coordinate points
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3", 3));
  auto frep = verify_cyclic_d1(fermat, 7, 13);
  CHECK(frep.p0_rank_one);
  CHECK(!frep.only_point);  // three points, not one
  CHECK(frep.count1 == 3);

  // the structural gate rejects non-cyclic coordinates
  DForm<Rat> notcyc(poly_parse_q("x0^3 + x0*x1^2 + x1^3", 2));
  CHECK_THROWS_AS(verify_cyclic_d1(notcyc, 7, 13), DomainError);
}

TEST_CASE("degree-4 enumeration takes the generic evaluation path") {
  // quartic Fermat surface: H = diag(12 x_i^2), D_1 = coordinate points
  DForm<Rat> q(poly_parse_q("x0^4+x1^4+x2^4", 3));
  DForm<Fp> fp(reduce_poly_mod(q.poly(), 7));
  StrataReport rep = enumerate_stratum(fp, 1, {});
  CHECK(rep.count == 3);
  // D_2 = the union of the coordinate lines
  StrataReport rep2 = enumerate_stratum(fp, 2, {});
  CHECK(rep2.count == 3 * 8 - 3);  // three lines pairwise meeting in the points
}

TEST_CASE("cyclic cubic fourfold: D_1 = {P_0} over two primes") {
  auto g = poly_parse_q("x1^3+x2^3+x3^3+x4^3+x5^3+x1*x2*x3+x3*x4*x5", 6);
  TsForm<Rat> cyc = gen_cyclic(g);
  DForm<Rat> f(cyc.f);
  CHECK(rank_at(f, ProjPoint<Rat>::coordinate(6, 0, Rat(0))) == 1);
  auto rep = verify_cyclic_d1(f, 11, 13);  // (13^6-1)/12 is still enumerable
  CHECK(rep.only_point);
}

TEST_CASE("soft bound: D_k counts stay within the dimension heuristic") {
  // dim D_k <= k-1 suggests count = O(p^{k-1}); warn-level check on the
  // rank-6 threefold where the counts are known exactly
  WaringForm<Rat> w = gen_waring_normal(std::vector<Rat>(5, Rat(1)));
  for (std::uint64_t p : {29ull, 31ull}) {
    DForm<Fp> fp(reduce_poly_mod(w.f, p));
    RankProfile prof = rank_profile(fp, {});
    long long d2 = 0;
    for (int r = 0; r <= 2; ++r) d2 += prof.count_by_rank[static_cast<std::size_t>(r)];
    CHECK(d2 <= 60);  // c * p^(k-1) = c with k = 2; generous c
    long long d3 = 0;
    for (int r = 0; r <= 3; ++r) d3 += prof.count_by_rank[static_cast<std::size_t>(r)];
    CHECK(d3 <= 60 * static_cast<long long>(p));
  }
}
