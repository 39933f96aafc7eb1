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

#include "hessloci/families.hpp"
#include "hessloci/poly_io.hpp"
#include "hessloci/reconstruct.hpp"
#include "hessloci/report.hpp"

using namespace hessloci;

TEST_CASE("tensor_of: fermat, rank-6 patterns, symmetry") {
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3", 3));
  ThirdTensor<Rat> t = tensor_of(fermat);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(t.at(i, j, k) == ((i == j && j == k) ? Rat(6) : Rat(0)));

  // rank-6 all-ones: mixed entries 6, pure diagonals 12 = 6(1 + a_i^3)
  WaringForm<Rat> w = gen_waring_normal(std::vector<Rat>(5, Rat(1)));
  DForm<Rat> f6(w.f);
  ThirdTensor<Rat> t6 = tensor_of(f6);
  CHECK(t6.at(0, 1, 2) == Rat(6));
  CHECK(t6.at(0, 0, 1) == Rat(6));
  CHECK(t6.at(0, 0, 0) == Rat(12));
  CHECK(t6.symmetric());

  // H_g = sum x_i A_i rebuilds the hessian
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      MultiPoly<Rat> acc(5, Rat(0));
      for (int k = 0; k < 5; ++k)
        acc.add_term(Expo::unit(5, k), t6.at(i, j, k));
      CHECK(acc == f6.hessian()(i, j));
    }

  Rng rng(9);
  DForm<Rat> fr(random_form<Rat>(rng, 4, 3, Rat(0)));
  CHECK(tensor_of(fr).symmetric());
  CHECK_THROWS_AS(tensor_of(DForm<Rat>(poly_parse_q("x0^4+x1^4", 2))), DomainError);
}

TEST_CASE("validate_relations: genuine tensors pass, fermat is TS-degenerate") {
  std::vector<Rat> a{Rat(1), Rat(2), Rat(1), Rat(1), Rat(3)};
  WaringForm<Rat> w = gen_waring_normal(a);
  ThirdTensor<Rat> t = tensor_of(DForm<Rat>(w.f));
  RelationsReport rep = validate_relations(t, a);
  CHECK(rep.proportionality_ok);
  CHECK(rep.has_nonzero_mixed);
  CHECK(rep.ok());

  // fermat satisfies the proportionalities vacuously but has no mixed entry
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3+x3^3+x4^3", 5));
  RelationsReport frep = validate_relations(tensor_of(fermat), a);
  CHECK(frep.proportionality_ok);
  CHECK(!frep.has_nonzero_mixed);
  CHECK(!frep.ok());

  CHECK_THROWS_AS(validate_relations(t, std::vector<Rat>(5, Rat(0))), DomainError);
}

TEST_CASE("single-entry faults flag exactly the incident relations") {
  std::vector<Rat> a(5, Rat(1));
  WaringForm<Rat> w = gen_waring_normal(a);
  ThirdTensor<Rat> t = tensor_of(DForm<Rat>(w.f));
  // perturb the symmetric orbit of (0, 1, 2)
  ThirdTensor<Rat> bad = t;
  const int o[3] = {0, 1, 2};
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& pr : perms)
    bad.at(o[pr[0]], o[pr[1]], o[pr[2]]) = t.at(0, 1, 2) + Rat(1);
  RelationsReport rep = validate_relations(bad, a);
  CHECK(!rep.proportionality_ok);
  REQUIRE(!rep.violations.empty());
  // every flagged relation touches the perturbed orbit {0,1,2}
  for (const auto& v : rep.violations) {
    auto touches = [&](int i, int j, int k) {
      auto in = [&](int x) { return x == 0 || x == 1 || x == 2; };
      return in(i) && in(j) && in(k);
    };
    CHECK((touches(v.i, v.j, v.row) || touches(v.i, v.k, v.row)));
  }
}

TEST_CASE("reconstruction round trip and the b readout") {
  // a = (1,..,1): lambda = 6 and b_i = 1, g = f exactly
  std::vector<Rat> ones(5, Rat(1));
  WaringForm<Rat> w1 = gen_waring_normal(ones);
  DForm<Rat> f1(w1.f);
  ReconstructionResult<Rat> r1 = reconstruct_g(tensor_of(f1), ones);
  CHECK(r1.lambda == Rat(6));
  for (const auto& b : r1.b) CHECK(b == Rat(1));
  CHECK(r1.g == w1.f);

  // a = (1,2,1,1,3): same story, exact recovery
  std::vector<Rat> a{Rat(1), Rat(2), Rat(1), Rat(1), Rat(3)};
  WaringForm<Rat> w = gen_waring_normal(a);
  DForm<Rat> f(w.f);
  ReconstructionResult<Rat> rr = reconstruct_g(tensor_of(f), a);
  CHECK(rr.g == w.f);
  DForm<Rat> g(rr.g);
  CHECK(hessian_equality_probe(f, g) == HessianEqual::equal_up_to_scalar);
  // the closed form 6g = 6 sum b_i x_i^3 + lambda L^3
  MultiPoly<Rat> lhs = rr.g.scaled(Rat(6));
  MultiPoly<Rat> rhs(5, Rat(0));
  for (int i = 0; i < 5; ++i)
    rhs.add_term(Expo::unit(5, i, 3), Rat(6) * rr.b[static_cast<std::size_t>(i)]);
  rhs = rhs + MultiPoly<Rat>::linear_form(5, a, Rat(0)).pow(3).scaled(rr.lambda);
  CHECK(lhs == rhs);

  // a perturbed tensor is refused, never silently reconstructed
  ThirdTensor<Rat> bad = tensor_of(f);
  bad.at(0, 1, 2) = bad.at(0, 1, 2) + Rat(1);
  CHECK_THROWS_AS(reconstruct_g(bad, a), DomainError);  // symmetry breaks first
  // TS-degenerate input is refused with the dedicated message
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3+x3^3+x4^3", 5));
  CHECK_THROWS_AS(reconstruct_g(tensor_of(fermat), a), DomainError);
}

TEST_CASE("hessian_equality_probe: scalars, perturbations, coordinate changes") {
  std::vector<Rat> a{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)};
  WaringForm<Rat> w = gen_waring_normal(a);
  DForm<Rat> f(w.f);
  DForm<Rat> g2(w.f.scaled(Rat(2)));
  CHECK(hessian_equality_probe(f, g2) == HessianEqual::equal_up_to_scalar);

  // small perturbation: still smooth, different hessian
  MultiPoly<Rat> pert = w.f + poly_parse_q("x0^3", 5);
  DForm<Rat> gp(pert);
  REQUIRE(smoothness_check(gp));
  CHECK(hessian_equality_probe(f, gp) == HessianEqual::different);

  // a genuine coordinate change moves the hessian as a raw polynomial
  Rng rng(31);
  Mat<Rat> m(5, 5, Rat(0));
  do {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = Rat(static_cast<long>(rng.small_any()));
  } while (k_is_zero(det(m)));
  LinearChange<Rat> A(m);
  DForm<Rat> gc(change_coords(w.f, A));
  CHECK(hessian_equality_probe(f, gc) == HessianEqual::different);
}

TEST_CASE("tensor JSON: round trip and the symmetry-checked loader") {
  std::vector<Rat> a{Rat(1), Rat(2), Rat(1), Rat(1), Rat(3)};
  WaringForm<Rat> w = gen_waring_normal(a);
  ThirdTensor<Rat> t = tensor_of(DForm<Rat>(w.f));
  json j = tensor_json(t);
  ThirdTensor<Rat> back = tensor_from_json(j);
  CHECK(back == t);

  json broken = j;
  broken["entries"][0][1][2] = "999";
  CHECK_THROWS_AS(tensor_from_json(broken), DomainError);
}
