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

#include "hessloci/dform.hpp"
#include "hessloci/poly_io.hpp"
#include "hessloci/rng.hpp"

using namespace hessloci;

namespace {
template <class K>
K like_of();
template <>
Rat like_of<Rat>() { return Rat(0); }
template <>
Fp like_of<Fp>() { return Fp(0, 10007); }
}  // namespace

TEST_CASE("scalars: canonical forms and inverses") {
  Rat a = rat_from_string("6/4");
  CHECK(a.get_num() == 3);
  CHECK(a.get_den() == 2);
  CHECK(k_str(a) == "3/2");
  CHECK_THROWS_AS(rat_from_string("1/0"), DomainError);

  Fp x(17, 13);
  CHECK(x.value() == 4);
  CHECK((x * x.inv()).value() == 1);
  CHECK_THROWS_AS(Fp(0, 13).inv(), DomainError);
  CHECK_THROWS_AS(Fp(1, 13) + Fp(1, 7), DomainError);
  // unattached zero combines with any modulus
  CHECK((Fp{} + Fp(5, 13)).value() == 5);

  CHECK(is_prime_u64(10007));
  CHECK(!is_prime_u64(10006));
  CHECK(reduce_mod(rat_from_string("-1/2"), 7).value() == 3);  // -1 * inv(2) = 6*4
  CHECK_THROWS_AS(reduce_mod(rat_from_string("1/7"), 7), DomainError);
}

TEST_CASE("parse: the grammar round-trips and reports errors with positions") {
  auto f = poly_parse_q("x0^3 + x1^3 + x2^3", 3);
  CHECK(f.degree() == 3);
  CHECK(f.terms().size() == 3);
  CHECK(poly_print(f) == "x0^3 + x1^3 + x2^3");

  // parenthesized linear-form powers expand on parse
  auto g = poly_parse_q("x0^3+x1^3+x2^3+x3^3+x4^3+(x0+x1+x2+x3+x4)^3", 5);
  CHECK(g.degree() == 3);
  CHECK(g.terms().size() == 35);
  CHECK(g.coeff(Expo::unit(5, 0, 3)) == Rat(2));  // x0^3 + (sum)^3 contribution

  auto h = poly_parse_q("3/2*x0*x1 - x2^2", 3);
  CHECK(h.coeff(Expo::unit(3, 0).plus(Expo::unit(3, 1))) == Rat(3, 2));
  CHECK(h.coeff(Expo::unit(3, 2, 2)) == Rat(-1));
  CHECK(poly_parse_q(poly_print(h), 3) == h);

  CHECK_THROWS_AS(poly_parse_q("x0^2 + x1^3", 2), ParseError);  // inhomogeneous
  CHECK_THROWS_AS(poly_parse_q("x5", 3), ParseError);           // index range
  CHECK_THROWS_AS(poly_parse_q("x0 + + x1", 3), ParseError);    // syntax
  CHECK_THROWS_AS(poly_parse_q("(x0^2)^2", 2), ParseError);     // non-linear parens
  try {
    poly_parse_q("x0^3 + x9^3", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 7);
  }
}

TEST_CASE("arith: products, multinomials, cancellation") {
  auto a = poly_parse_q("x0+x1", 2);
  auto b = poly_parse_q("x0-x1", 2);
  CHECK(a * b == poly_parse_q("x0^2-x1^2", 2));

  auto cube = poly_parse_q("(x0+x1+x2)^3", 3);
  CHECK(cube.terms().size() == 10);
  Expo m = Expo::unit(3, 0).plus(Expo::unit(3, 1)).plus(Expo::unit(3, 2));
  CHECK(cube.coeff(m) == Rat(6));

  auto f = poly_parse_q("x0^3+2*x1^3", 2);
  CHECK((f - f).is_zero());
  CHECK((f - f).degree() == -1);  // zero polynomial sentinel

  CHECK_THROWS_AS(poly_parse_q("x0^2", 2) + poly_parse_q("x0^3", 2), DomainError);
}

TEST_CASE("partial derivatives") {
  auto f = poly_parse_q("x0^3", 2);
  CHECK(f.partial(0) == poly_parse_q("3*x0^2", 2));
  CHECK(f.partial(1).is_zero());
  auto fermat = poly_parse_q("x0^3+x1^3+x2^3", 3);
  CHECK(fermat.partial(1) == poly_parse_q("3*x1^2", 3));
  CHECK_THROWS_AS(fermat.partial(3), DomainError);
}

TEST_CASE_TEMPLATE("euler identities on random cubics", K, Rat, Fp) {
  const K like = like_of<K>();
  Rng rng(1234);
  for (int rep = 0; rep < 20; ++rep) {
    const int nv = 2 + static_cast<int>(rng.range(0, 3));
    MultiPoly<K> f = random_form<K>(rng, nv, 3, like);
    const int d = f.degree();
    // sum x_i d_i f = d f
    CHECK(euler_apply(f) == f.scaled(k_int(d, like)));
    // (d-1) d_j f = sum_i x_i d_i d_j f
    for (int j = 0; j < nv; ++j) {
      MultiPoly<K> fj = f.partial(j);
      MultiPoly<K> acc(nv, like);
      for (int i = 0; i < nv; ++i)
        acc = acc + MultiPoly<K>::var(nv, i, like) * fj.partial(i);
      CHECK(acc == fj.scaled(k_int(d - 1, like)));
    }
  }
}

TEST_CASE_TEMPLATE("ring axioms on random triples", K, Rat, Fp) {
  const K like = like_of<K>();
  Rng rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    const int nv = 2 + static_cast<int>(rng.range(0, 2));
    MultiPoly<K> a = random_form<K>(rng, nv, 1, like);
    MultiPoly<K> b = random_form<K>(rng, nv, 2, like);
    MultiPoly<K> c = random_form<K>(rng, nv, 2, like);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(b * c == c * b);
  }
}

TEST_CASE("change_coords: identity, swap, inverse round trip") {
  auto f = poly_parse_q("x0^3+2*x1^3", 2);
  LinearChange<Rat> id(Mat<Rat>::identity(2, Rat(0)));
  CHECK(change_coords(f, id) == f);

  Mat<Rat> sw(2, 2, Rat(0));
  sw(0, 1) = Rat(1);
  sw(1, 0) = Rat(1);
  LinearChange<Rat> swap_ch(sw);
  CHECK(change_coords(f, swap_ch) == poly_parse_q("2*x0^3+x1^3", 2));

  Rng rng(7);
  Mat<Rat> m(3, 3, Rat(0));
  do {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Rat(static_cast<long>(rng.small_any()));
  } while (k_is_zero(det(m)));
  LinearChange<Rat> A(m);
  auto fermat = poly_parse_q("x0^3+x1^3+x2^3", 3);
  CHECK(change_coords(change_coords(fermat, A), A.inverted()) == fermat);

  Mat<Rat> sing(2, 2, Rat(0));
  sing(0, 0) = Rat(1);
  CHECK_THROWS_AS(LinearChange<Rat>{sing}, DomainError);
}

TEST_CASE("hessian covariance h_{f o A} = det(A)^2 (h_f o A)") {
  Rng rng(2024);
  auto fermat = poly_parse_q("x0^3+x1^3+x2^3", 3);
  for (int rep = 0; rep < 3; ++rep) {
    Mat<Rat> m(3, 3, Rat(0));
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Rat(static_cast<long>(rng.small_any()));
    } while (k_is_zero(det(m)));
    LinearChange<Rat> A(m);
    DForm<Rat> df(change_coords(fermat, A));
    DForm<Rat> d0(fermat);
    const Rat dA = det(m);
    const Rat dA2 = dA * dA;
    CHECK(df.hessian_poly() == change_coords(d0.hessian_poly(), A).scaled(dA2));
  }
}

TEST_CASE("homogeneity is preserved by the operations") {
  Rng rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    MultiPoly<Rat> f = random_form<Rat>(rng, 3, 2, Rat(0));
    MultiPoly<Rat> g = random_form<Rat>(rng, 3, 3, Rat(0));
    CHECK((f * g).degree() == 5);
    CHECK((f + f).degree() == 2);
    MultiPoly<Rat> p = g.partial(0);
    CHECK((p.is_zero() || p.degree() == 2));
  }
}
