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

#include "hessloci/apolar.hpp"
#include "hessloci/families.hpp"
#include "hessloci/graded.hpp"
#include "hessloci/poly_io.hpp"

using namespace hessloci;

TEST_CASE("hilbert function matches the complete-intersection series") {
  // smooth cubic surface: (1, 4, 6, 4, 1, 0)
  DForm<Rat> f3(poly_parse_q("x0^3+x1^3+x2^3+x3^3", 4));
  CHECK(hilbert_function(f3) == std::vector<long long>{1, 4, 6, 4, 1, 0});
  // smooth cubic threefold: (1, 5, 10, 10, 5, 1, 0)
  DForm<Rat> f4(poly_parse_q("x0^3+x1^3+x2^3+x3^3+x4^3", 5));
  CHECK(hilbert_function(f4) == std::vector<long long>{1, 5, 10, 10, 5, 1, 0});

  // the independent series oracle ((1-t^{d-1})/(1-t))^{n+1}
  Rng rng(11);
  for (int n = 2; n <= 3; ++n) {
    MultiPoly<Rat> f(n + 1, Rat(0));
    for (int attempt = 0; attempt < 32; ++attempt) {
      f = random_form<Rat>(rng, n + 1, 3, Rat(0));
      if (smoothness_check(DForm<Rat>(f))) break;
    }
    DForm<Rat> df(f);
    REQUIRE(smoothness_check(df));
    auto dims = hilbert_function(df);
    auto series = complete_intersection_hilbert(n + 1, 3);
    REQUIRE(dims.size() == series.size());
    for (std::size_t i = 0; i < dims.size(); ++i) CHECK(dims[i] == series[i]);
    // hilbert symmetry dim (R_f)_m = dim (R_f)_{N-m}
    const int N = df.socle_degree();
    for (int m = 0; m <= N; ++m)
      CHECK(dims[static_cast<std::size_t>(m)] == dims[static_cast<std::size_t>(N - m)]);
  }

  // a cone never reaches zero by degree N+1
  DForm<Rat> cone(poly_parse_q("x0^3", 2));
  auto dims = hilbert_function(cone);
  CHECK(dims.back() != 0);
  CHECK(!smoothness_check(cone));
}

TEST_CASE("ideal membership: member, non-member, re-verified certificates") {
  // Fermat n=2: h_f = 216 x0 x1 x2 is not in (x0^2, x1^2, x2^2)
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3", 3));
  JacobianRing<Rat> jr(fermat);
  auto cert = ideal_membership(jr, fermat.hessian_poly());
  CHECK(!cert.member);
  CHECK(!cert.witness.empty());

  // Fermat n=1: 36 x0^2 = 12 * (3 x0^2), constant cofactors
  DForm<Rat> f1(poly_parse_q("x0^3+x1^3", 2));
  JacobianRing<Rat> jr1(f1);
  auto target = poly_parse_q("36*x0^2", 2);
  auto c1 = ideal_membership(jr1, target);
  CHECK(c1.member);
  CHECK(c1.cofactors[0] == MultiPoly<Rat>::constant(2, Rat(12)));
  CHECK(c1.cofactors[1].is_zero());

  // x0 d_1(h) for Fermat n=1: h = 36 x0 x1, x0 d_1 h = 36 x0^2
  CHECK(MultiPoly<Rat>::var(2, 0, Rat(0)) * f1.hessian_poly().partial(1) == target);

  // degree gate
  CHECK_THROWS_AS(ideal_membership(jr1, poly_parse_q("x0", 2)), DomainError);
}

TEST_CASE("membership flips for an isolated singularity (cusp cubic)") {
  // h_f = -24 x0 x1^2 lies in (3x0^2, -2x1x2, -x1^2), cofactors (0, 0, 24x0)
  DForm<Rat> cusp(poly_parse_q("x0^3 - x1^2*x2", 3));
  JacobianRing<Rat> jr(cusp);
  auto cert = ideal_membership(jr, cusp.hessian_poly());
  CHECK(cert.member);
  CHECK(cert.cofactors[0].is_zero());
  CHECK(cert.cofactors[1].is_zero());
  CHECK(cert.cofactors[2] == poly_parse_q("24*x0", 3));
  // re-verification by direct expansion is part of ideal_membership itself
}

TEST_CASE("socle report and the smoothness gate") {
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3", 3));
  auto rep = socle_check(fermat);
  CHECK(!rep.refused);
  CHECK(rep.socle_dim == 1);
  CHECK(rep.h_nonmember);
  CHECK(rep.ok());

  DForm<Rat> f3(poly_parse_q("x0^3+x1^3+x2^3+x3^3+x0*x1*x2", 4));
  REQUIRE(smoothness_check(f3));
  CHECK(socle_check(f3).ok());

  // a nodal-type singular input is refused with a diagnostic
  DForm<Rat> nodal(poly_parse_q("x0*x1*x2 + x3^3", 4));
  auto ref = socle_check(nodal);
  CHECK(ref.refused);
  CHECK(!ref.refusal.empty());
}

TEST_CASE("thmd_certificates: diagonal zeros, quartics, vacuous cases") {
  // n = 1: the diagonal targets x_i d_i h - h vanish identically
  DForm<Rat> f1(poly_parse_q("x0^3+x1^3", 2));
  auto rep1 = thmd_certificates(f1);
  CHECK(rep1.all_member);
  REQUIRE(rep1.certs.size() == 4);
  CHECK(rep1.certs[0].target.is_zero());  // (0,0) diagonal
  CHECK(rep1.certs[0].cofactors[0].is_zero());

  // d = 4 Fermat n=2: the full 9-certificate suite
  DForm<Rat> q2(poly_parse_q("x0^4+x1^4+x2^4", 3));
  auto rep2 = thmd_certificates(q2);
  CHECK(rep2.certs.size() == 9);
  CHECK(rep2.all_member);

  // h identically zero: vacuous, reported not solved
  DForm<Rat> gn(poly_parse_q("x0^3+x1^3", 3));
  CHECK(gn.hessian_poly().is_zero());
  CHECK(thmd_certificates(gn).vacuous);
}

TEST_CASE("thmd_certificates hold for a singular form with h != 0") {
  DForm<Rat> cusp(poly_parse_q("x0^3 - x1^2*x2", 3));
  REQUIRE(!cusp.hessian_poly().is_zero());
  auto rep = thmd_certificates(cusp);
  CHECK(rep.all_member);
}

TEST_CASE("apolar contractions and the degree-2 product") {
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3", 3));
  // d_0 d_1 f = 0: x0 x1 = 0 in the apolar ring
  Expo op = Expo::unit(3, 0).plus(Expo::unit(3, 1));
  CHECK(apolar_contract(op, fermat.poly()).is_zero());
  auto p0 = ProjPoint<Rat>::coordinate(3, 0, Rat(0));
  auto p1 = ProjPoint<Rat>::coordinate(3, 1, Rat(0));
  CHECK(apolar_product_zero(fermat, p0, p1));
  CHECK(!apolar_product_zero(fermat, p0, p0));

  // y^t H_f(x) y = 2 (d_x f)(y) as a polynomial identity
  Rng rng(55);
  for (int rep = 0; rep < 20; ++rep) {
    DForm<Rat> f(random_form<Rat>(rng, 4, 3, Rat(0)));
    ProjPoint<Rat> x(random_point_coords<Rat>(rng, 4, Rat(0)));
    CHECK(second_polar_identity_holds(f, x));
  }

  // step-2 family relations: x0 x1 never appears, so y0 y1 = 0 in A_g
  auto s2 = step2_family(std::vector<Rat>(5, Rat(1)), Rat(1),
                         std::vector<Rat>(5, Rat(1)));
  DForm<Rat> g(s2.g);
  CHECK(apolar_product_zero(g, ProjPoint<Rat>::coordinate(5, 0, Rat(0)),
                            ProjPoint<Rat>::coordinate(5, 1, Rat(0))));
}

TEST_CASE("annihilator dimensions and the cone flag") {
  auto ad = ann_dims(poly_parse_q("x0^3+x1^3+x2^3", 3));
  CHECK(ad.dims == std::vector<long long>{1, 3, 3, 1});
  CHECK(ad.gorenstein_symmetric);
  CHECK(!ad.cone);

  auto cone = ann_dims(poly_parse_q("x0^3", 2));
  CHECK(cone.dims[1] == 1);  // dim A^1 = 1 < 2
  CHECK(cone.cone);

  // general rank-6 form: dim A^1 = 5 (not a cone)
  WaringForm<Rat> w =
      gen_waring_normal(std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
  auto ad6 = ann_dims(w.f);
  CHECK(ad6.dims[1] == 5);

  // annihilator bases really annihilate: apply each kernel combination
  auto fermat = poly_parse_q("x0^3+x1^3+x2^3", 3);
  auto basis2 = ann_basis(fermat, 2);
  CHECK(basis2.size() == 6 - 3);  // dim L^2 - dim A^2
  const auto ops = monomials_of(3, 2);
  for (const auto& v : basis2) {
    MultiPoly<Rat> image(3, Rat(0));
    for (std::size_t c = 0; c < ops.size(); ++c)
      image = image + apolar_contract(ops[c], fermat).scaled(v[c]);
    CHECK(image.is_zero());
  }
}
