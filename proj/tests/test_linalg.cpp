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
#include "hessloci/polymatrix.hpp"
#include "hessloci/rng.hpp"

using namespace hessloci;

namespace {

template <class K>
K like_of() {
  if constexpr (std::is_same_v<K, Rat>) return Rat(0);
  else return Fp(0, 10007);
}

/// Independent rank oracle: largest k with a nonzero k x k minor.
template <class K>
int rank_by_minors(const Mat<K>& A) {
  const int n = std::min(A.rows(), A.cols());
  int best = 0;
  std::function<K(std::vector<int>, std::vector<int>)> dets =
      [&](std::vector<int> rows, std::vector<int> cols) -> K {
    if (rows.size() == 1) return A(rows[0], cols[0]);
    K acc = k_zero(A.like());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<int> rs(rows.begin() + 1, rows.end());
      std::vector<int> cs;
      for (std::size_t t = 0; t < cols.size(); ++t)
        if (t != j) cs.push_back(cols[t]);
      K term = A(rows[0], cols[j]) * dets(rs, cs);
      if (j % 2 == 0) acc = acc + term;
      else acc = acc - term;
    }
    return acc;
  };
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
    do {
      std::vector<int> cols(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
      do {
        if (!k_is_zero(dets(rows, cols))) { found = true; break; }
      } while (!found && detail::next_combination(cols, A.cols()));
      if (found) break;
    } while (detail::next_combination(rows, A.rows()));
    if (found) best = k;
    else break;
  }
  return best;
}

/// Laplace expansion along the first row: the division-free oracle for the
/// subset-memoized determinant.
template <class K>
MultiPoly<K> laplace_det(const PolyMatrix<K>& m) {
  if (m.size() == 1) return m(0, 0);
  MultiPoly<K> acc(m.nvars(), m.like());
  for (int j = 0; j < m.size(); ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<int> rows, cols;
    for (int i = 1; i < m.size(); ++i) rows.push_back(i);
    for (int c = 0; c < m.size(); ++c)
      if (c != j) cols.push_back(c);
    MultiPoly<K> t = m(0, j) * laplace_det(m.submatrix(rows, cols));
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

}  // namespace

TEST_CASE("rank_kernel on the worked examples") {
  // diag(6, 0, 0): rank 1, kernel spanned by e1, e2
  Mat<Rat> d(3, 3, Rat(0));
  d(0, 0) = Rat(6);
  auto [r1, k1] = rank_kernel(d);
  CHECK(r1 == 1);
  REQUIRE(k1.size() == 2);
  CHECK(k1[0][1] == Rat(1));
  CHECK(k1[1][2] == Rat(1));

  // H_Fermat(n=2) at [1:1:1] = diag(6,6,6): rank 3, empty kernel
  DForm<Rat> fermat(poly_parse_q("x0^3+x1^3+x2^3", 3));
  std::vector<Rat> ones(3, Rat(1));
  auto [r2, k2] = rank_kernel(fermat.hessian().eval(ones));
  CHECK(r2 == 3);
  CHECK(k2.empty());

  // rank-6 form with a = (1,1,1,1,1) at Q01 = [-1:1:0:0:0]:
  // H = 6 diag(-1,1,0,0,0) since L(Q01) = 0, so rank 2
  WaringForm<Rat> w = gen_waring_normal(std::vector<Rat>(5, Rat(1)));
  DForm<Rat> f6(w.f);
  std::vector<Rat> q01{Rat(-1), Rat(1), Rat(0), Rat(0), Rat(0)};
  Mat<Rat> h = f6.hessian().eval(q01);
  Mat<Rat> expected(5, 5, Rat(0));
  expected(0, 0) = Rat(-6);
  expected(1, 1) = Rat(6);
  CHECK(h == expected);
  CHECK(rank_of(h) == 2);
}

TEST_CASE_TEMPLATE("rank agrees with the exhaustive minor oracle", K, Rat, Fp) {
  const K like = like_of<K>();
  Rng rng(321);
  for (int rep = 0; rep < 15; ++rep) {
    const int rows = 2 + static_cast<int>(rng.range(0, 2));
    const int cols = 2 + static_cast<int>(rng.range(0, 2));
    Mat<K> A(rows, cols, like);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        // skewed draw so rank deficiencies actually occur
        A(i, j) = k_int(rng.range(-2, 2), like);
    CHECK(rank_of(A) == rank_by_minors(A));
    auto [r, kb] = rank_kernel(A);
    CHECK(r + static_cast<int>(kb.size()) == cols);
  }
}

TEST_CASE("rank over Q matches rank over F_p for a non-unlucky prime") {
  Rng rng(654);
  for (int rep = 0; rep < 10; ++rep) {
    Mat<Rat> A(4, 5, Rat(0));
    Mat<Fp> B(4, 5, Fp(0, 10007));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) {
        const long v = static_cast<long>(rng.small_any());
        A(i, j) = Rat(v);
        B(i, j) = Fp::from_int(v, 10007);
      }
    CHECK(rank_of(A) == rank_of(B));
  }
}

TEST_CASE("determinant and inverse") {
  Rng rng(777);
  Mat<Rat> m(4, 4, Rat(0));
  do {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = Rat(static_cast<long>(rng.small_any()));
  } while (k_is_zero(det(m)));
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m.mul(*inv) == Mat<Rat>::identity(4, Rat(0)));
  // det via Bareiss equals the exhaustive expansion oracle on a poly lift
  PolyMatrix<Rat> pm(4, 1, Rat(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      pm(i, j) = MultiPoly<Rat>::constant(1, m(i, j));
  CHECK(pm.det().constant_value() == det(m));
}

TEST_CASE("poly_det: examples, Laplace oracle, zero row, block products") {
  // diag(6x0, 6x1, 6x2) -> 216 x0 x1 x2
  PolyMatrix<Rat> d(3, 3, Rat(0));
  for (int i = 0; i < 3; ++i)
    d(i, i) = MultiPoly<Rat>::var(3, i, Rat(0)).scaled(Rat(6));
  CHECK(poly_print(d.det()) == "216*x0*x1*x2");

  // any matrix with a zero row has determinant zero
  PolyMatrix<Rat> z(3, 3, Rat(0));
  z(0, 0) = MultiPoly<Rat>::var(3, 0, Rat(0));
  z(2, 2) = MultiPoly<Rat>::var(3, 1, Rat(0));
  CHECK(z.det().is_zero());

  Rng rng(888);
  for (int rep = 0; rep < 5; ++rep) {
    const int n = 3 + static_cast<int>(rng.range(0, 1));
    PolyMatrix<Rat> m(n, 3, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = random_form<Rat>(rng, 3, 1, Rat(0));
    CHECK(m.det() == laplace_det(m));
  }

  // block-diagonal multiplicativity
  PolyMatrix<Rat> blk(4, 2, Rat(0));
  PolyMatrix<Rat> a(2, 2, Rat(0)), b(2, 2, Rat(0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = random_form<Rat>(rng, 2, 1, Rat(0));
      b(i, j) = random_form<Rat>(rng, 2, 1, Rat(0));
      blk(i, j) = a(i, j);
      blk(i + 2, j + 2) = b(i, j);
    }
  CHECK(blk.det() == a.det() * b.det());

  PolyMatrix<Rat> big(9, 1, Rat(0));
  CHECK_THROWS_AS(big.det(), DomainError);
}

TEST_CASE("evaluation commutes with the determinant") {
  Rng rng(111);
  DForm<Rat> f(random_form<Rat>(rng, 4, 3, Rat(0)));
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Rat> pt = random_point_coords<Rat>(rng, 4, Rat(0));
    CHECK(f.hessian_poly().eval(pt) == det(f.hessian().eval(pt)));
  }
}

TEST_CASE("schwartz symmetry: H_f(x) y = H_f(y) x for cubics") {
  Rng rng(222);
  for (int rep = 0; rep < 10; ++rep) {
    DForm<Rat> f(random_form<Rat>(rng, 4, 3, Rat(0)));
    std::vector<Rat> x = random_point_coords<Rat>(rng, 4, Rat(0));
    std::vector<Rat> y = random_point_coords<Rat>(rng, 4, Rat(0));
    CHECK(f.hessian().eval(x).mul_vec(y) == f.hessian().eval(y).mul_vec(x));
  }
}

TEST_CASE("laplace consistency: expansion along any row agrees") {
  Rng rng(333);
  PolyMatrix<Rat> m(3, 2, Rat(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = random_form<Rat>(rng, 2, 1, Rat(0));
  const MultiPoly<Rat> d = m.det();
  for (int row = 0; row < 3; ++row) {
    MultiPoly<Rat> acc(2, Rat(0));
    for (int j = 0; j < 3; ++j) {
      MultiPoly<Rat> t = m(row, j) * m.deleted(row, j).det();
      acc = (row + j) % 2 == 0 ? acc + t : acc - t;
    }
    CHECK(acc == d);
  }
}
