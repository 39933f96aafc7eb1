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
 * @file apolar.hpp
 * @brief Apolarity: differential-operator contractions, catalecticant
 *        matrices and annihilator dimensions, and the degree-2 product test
 *        "x*y = 0 in A_f" computed three independent ways and forced to
 *        agree (operator contraction, H_f(x)*y, H_f(y)*x).
 */

#ifndef HESSLOCI_APOLAR_HPP
#define HESSLOCI_APOLAR_HPP

#include <vector>

#include "hessloci/dform.hpp"

namespace hessloci {

/// Apply the operator monomial y^op (a product of d/dx_i) to f.
template <class K>
MultiPoly<K> apolar_contract(const Expo& op, const MultiPoly<K>& f) {
  if (op.n != f.nvars()) throw DomainError("apolar_contract: nvars mismatch");
  MultiPoly<K> r = f;
  for (int i = 0; i < op.n; ++i)
    for (int k = 0; k < op[i]; ++k) r = r.partial(i);
  return r;
}

/// Directional derivative sum_i x_i df/dx_i at a scalar point x.
template <class K>
MultiPoly<K> directional_derivative(const DForm<K>& f, const ProjPoint<K>& x) {
  MultiPoly<K> acc(f.nvars(), f.like());
  for (int i = 0; i < f.nvars(); ++i)
    acc = acc + f.gradient()[static_cast<std::size_t>(i)].scaled(x[i]);
  return acc;
}

/// Second-order contraction d_x d_y f (a form of degree d-2).
template <class K>
MultiPoly<K> polar_second(const DForm<K>& f, const ProjPoint<K>& x, const ProjPoint<K>& y) {
  MultiPoly<K> acc(f.nvars(), f.like());
  for (int i = 0; i < f.nvars(); ++i) {
    if (k_is_zero(x[i])) continue;
    for (int j = 0; j < f.nvars(); ++j) {
      if (k_is_zero(y[j])) continue;
      acc = acc + f.hessian()(i, j).scaled(x[i] * y[j]);
    }
  }
  return acc;
}

/// "x*y = 0 in A_f^2" for a cubic f, computed three ways: the operator
/// contraction d_x d_y f, the matrix product H_f(x)*y, and the symmetric
/// H_f(y)*x. The three must agree; a disagreement is an internal error.
template <class K>
bool apolar_product_zero(const DForm<K>& f, const ProjPoint<K>& x, const ProjPoint<K>& y) {
  if (f.d() != 3) throw DomainError("apolar_product_zero: needs a cubic form");
  const bool contraction_zero = polar_second(f, x, y).is_zero();

  auto matvec_zero = [&](const ProjPoint<K>& a, const ProjPoint<K>& b) {
    const std::vector<K> w = f.hessian().eval(a.coords()).mul_vec(b.coords());
    for (const K& c : w)
      if (!k_is_zero(c)) return false;
    return true;
  };
  const bool hxy = matvec_zero(x, y);
  const bool hyx = matvec_zero(y, x);
  if (contraction_zero != hxy || hxy != hyx)
    throw Error("internal: apolar product tests disagree");
  return contraction_zero;
}

/// Second-polar identity: y^t H_f(x) y = 2 (d_x f)(y) as a polynomial identity
/// in the coordinates of y (x a fixed point, f cubic).
template <class K>
bool second_polar_identity_holds(const DForm<K>& f, const ProjPoint<K>& x) {
  if (f.d() != 3) throw DomainError("second_polar_identity: needs a cubic form");
  const int nv = f.nvars();
  // lhs: quadratic form with matrix H_f(x) in the ambient variables
  Mat<K> H = f.hessian().eval(x.coords());
  MultiPoly<K> lhs(nv, f.like());
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (k_is_zero(H(i, j))) continue;
      lhs.add_term(Expo::unit(nv, i).plus(Expo::unit(nv, j)), H(i, j));
    }
  MultiPoly<K> rhs = directional_derivative(f, x).scaled(k_int(2, f.like()));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Catalecticants and annihilator dimensions
// ---------------------------------------------------------------------------

/// Matrix of the contraction pairing L^k x S^d -> S^{d-k}: rows indexed by
/// monomials of S^{d-k}, columns by operator monomials of degree k. The
/// column kernel is (Ann f)_k; the rank is dim A_f^k.
template <class K>
Mat<K> catalecticant(const MultiPoly<K>& f, int k) {
  if (f.is_zero()) throw DomainError("catalecticant of zero polynomial");
  const int d = f.degree();
  if (k < 0 || k > d) throw DomainError("catalecticant: degree out of range");
  const int nv = f.nvars();
  const std::vector<Expo> rows = monomials_of(nv, d - k);
  const std::vector<Expo> cols = monomials_of(nv, k);
  std::map<Expo, int, GrlexOrder> rindex;
  for (std::size_t r = 0; r < rows.size(); ++r) rindex.emplace(rows[r], static_cast<int>(r));
  Mat<K> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()), f.like());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    // d^beta x^{mu+beta} = prod_i (mu_i + beta_i)! / mu_i! * x^mu
    const Expo& beta = cols[c];
    for (const auto& [mt, ct] : f.terms()) {
      if (!beta.divides(mt)) continue;
      const Expo mu = mt.minus(beta);
      long long factor = 1;
      for (int i = 0; i < nv; ++i)
        for (int e = mu[i] + 1; e <= mt[i]; ++e) factor *= e;
      m(rindex.at(mu), static_cast<int>(c)) = ct * k_int(factor, f.like());
    }
  }
  return m;
}

/// Basis of (Ann f)_k: the operator monomial combinations annihilating f,
/// i.e. the column kernel of the degree-k catalecticant.
template <class K>
std::vector<std::vector<K>> ann_basis(const MultiPoly<K>& f, int k) {
  return kernel_basis(catalecticant(f, k));
}

template <class K>
struct AnnDimsReport {
  std::vector<long long> dims;  // dim A_f^k for k = 0..d
  bool gorenstein_symmetric = false;
  bool cone = false;            // dim A_f^1 < n+1
};

template <class K>
AnnDimsReport<K> ann_dims(const MultiPoly<K>& f) {
  AnnDimsReport<K> rep;
  const int d = f.degree();
  for (int k = 0; k <= d; ++k)
    rep.dims.push_back(rank_of(catalecticant(f, k)));
  rep.gorenstein_symmetric = true;
  for (int k = 0; k <= d; ++k)
    rep.gorenstein_symmetric = rep.gorenstein_symmetric &&
                               rep.dims[static_cast<std::size_t>(k)] ==
                                   rep.dims[static_cast<std::size_t>(d - k)];
  if (!rep.gorenstein_symmetric)
    throw Error("internal: catalecticant ranks break Gorenstein symmetry");
  rep.cone = rep.dims[1] < f.nvars();
  return rep;
}

}  // namespace hessloci

#endif  // HESSLOCI_APOLAR_HPP
