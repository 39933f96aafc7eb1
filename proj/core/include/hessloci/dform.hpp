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
 * @file dform.hpp
 * @brief A degree-d form with its cached gradient and Hessian matrix, plus
 *        the hessian polynomial computed once on demand.
 *
 * The cached values are immutable after construction (the hessian
 * polynomial under a call_once guard), so a DForm may be shared freely
 * across worker threads; every operation on it is a pure function.
 */

#ifndef HESSLOCI_DFORM_HPP
#define HESSLOCI_DFORM_HPP

#include <mutex>
#include <optional>

#include "hessloci/polymatrix.hpp"
#include "hessloci/projective.hpp"

namespace hessloci {

template <class K>
class DForm {
 public:
  explicit DForm(MultiPoly<K> f) : f_(std::move(f)) {
    if (f_.is_zero()) throw DomainError("DForm: zero polynomial");
    if (f_.degree() < 3) throw DomainError("DForm: degree must be >= 3");
    if (f_.nvars() < 2) throw DomainError("DForm: need at least 2 variables");
    const int nv = f_.nvars();
    grad_.reserve(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) grad_.push_back(f_.partial(i));
    hess_.emplace(nv, nv, f_.like());
    for (int i = 0; i < nv; ++i)
      for (int j = i; j < nv; ++j) {
        MultiPoly<K> s = grad_[static_cast<std::size_t>(i)].partial(j);
        (*hess_)(j, i) = s;
        (*hess_)(i, j) = std::move(s);
      }
    // Euler identity on the gradient: sum_i x_i f_i = d * f
    MultiPoly<K> e(nv, f_.like());
    for (int i = 0; i < nv; ++i)
      e = e + MultiPoly<K>::var(nv, i, f_.like()) * grad_[static_cast<std::size_t>(i)];
    if (e != f_.scaled(k_int(f_.degree(), f_.like())))
      throw Error("internal: Euler identity failed on gradient");
  }

  DForm(const DForm&) = delete;
  DForm& operator=(const DForm&) = delete;

  const MultiPoly<K>& poly() const { return f_; }
  int nvars() const { return f_.nvars(); }
  int n() const { return f_.nvars() - 1; }
  int d() const { return f_.degree(); }
  const K& like() const { return f_.like(); }
  const std::vector<MultiPoly<K>>& gradient() const { return grad_; }
  const PolyMatrix<K>& hessian() const { return *hess_; }

  /// Socle degree N = (n+1)(d-2).
  int socle_degree() const { return f_.nvars() * (f_.degree() - 2); }

  /// det of the Hessian matrix; the zero polynomial is a legal outcome
  /// (Gordan-Noether locus) and is reported, never an error.
  const MultiPoly<K>& hessian_poly() const {
    std::call_once(hpoly_once_, [this] { hpoly_.emplace(hess_->det()); });
    return *hpoly_;
  }

 private:
  MultiPoly<K> f_;
  std::vector<MultiPoly<K>> grad_;
  std::optional<PolyMatrix<K>> hess_;
  mutable std::once_flag hpoly_once_;
  mutable std::optional<MultiPoly<K>> hpoly_;
};

// ---------------------------------------------------------------------------
// Pointwise operations
// ---------------------------------------------------------------------------

template <class K>
int rank_at(const DForm<K>& f, const ProjPoint<K>& p) {
  if (p.nvars() != f.nvars()) throw DomainError("rank_at: dimension mismatch");
  return rank_of(f.hessian().eval(p.coords()));
}

/// Membership in the hessian locus D_k = { rank H_f <= k }. For k = n this
/// is cross-checked against the vanishing of the hessian polynomial.
template <class K>
bool in_dk(const DForm<K>& f, const ProjPoint<K>& p, int k) {
  const int r = rank_at(f, p);
  const bool member = r <= k;
  if (k == f.n()) {
    const bool hzero = k_is_zero(f.hessian_poly().eval(p.coords()));
    if (hzero != member)
      throw Error("internal: D_n membership disagrees with h_f vanishing");
  }
  return member;
}

/// The kernel correspondence: P(ker H_f(p)). Errors out when p is not in
/// the hessian locus (empty kernel).
template <class K>
LinearSpace<K> iota(const DForm<K>& f, const ProjPoint<K>& p) {
  Mat<K> H = f.hessian().eval(p.coords());
  auto [rank, kb] = rank_kernel(H);
  if (kb.empty())
    throw DomainError("iota: empty kernel, point is not in the hessian locus");
  std::vector<ProjPoint<K>> pts;
  pts.reserve(kb.size());
  for (auto& v : kb) pts.emplace_back(std::move(v));
  LinearSpace<K> s = LinearSpace<K>::from_points(std::move(pts));
  if (s.dim() != f.n() - rank) throw Error("internal: kernel dimension mismatch");
  return s;
}

// ---------------------------------------------------------------------------
// Restriction to a span
// ---------------------------------------------------------------------------

/// H_f evaluated at the generic point sum_i lambda_i B_i of the span of the
/// given points: an (n+1)x(n+1) matrix of forms in fresh parameter
/// variables lambda_0..lambda_k (linear for cubics).
template <class K>
PolyMatrix<K> hessian_on_span(const DForm<K>& f, const std::vector<ProjPoint<K>>& span_pts) {
  if (span_pts.empty()) throw DomainError("hessian_on_span: empty span");
  const int nv = f.nvars();
  const int k1 = static_cast<int>(span_pts.size());
  Mat<K> B(k1, nv, f.like());
  for (int i = 0; i < k1; ++i) {
    if (span_pts[static_cast<std::size_t>(i)].nvars() != nv)
      throw DomainError("hessian_on_span: dimension mismatch");
    for (int j = 0; j < nv; ++j) B(i, j) = span_pts[static_cast<std::size_t>(i)][j];
  }
  if (rank_of(B) != k1) throw DomainError("hessian_on_span: degenerate basis");
  // substitution rows: x_j -> sum_i lambda_i * B(i, j)
  Mat<K> rows(nv, k1, f.like());
  for (int j = 0; j < nv; ++j)
    for (int i = 0; i < k1; ++i) rows(j, i) = B(i, j);
  PolyMatrix<K> out(nv, k1, f.like());
  for (int i = 0; i < nv; ++i)
    for (int j = i; j < nv; ++j) {
      MultiPoly<K> s = f.hessian()(i, j).substitute_linear(rows, k1);
      out(j, i) = s;
      out(i, j) = std::move(s);
    }
  return out;
}

template <class K>
PolyMatrix<K> hessian_on_span(const DForm<K>& f, const LinearSpace<K>& s) {
  return hessian_on_span(f, s.basis());
}

/// Row indices of identically-zero rows of a polynomial matrix; for the
/// restricted Hessian at a kernel point these carve out the block M_P.
template <class K>
std::vector<int> vanishing_rows(const PolyMatrix<K>& m) {
  std::vector<int> out;
  for (int i = 0; i < m.size(); ++i) {
    bool zero = true;
    for (int j = 0; j < m.size() && zero; ++j) zero = m(i, j).is_zero();
    if (zero) out.push_back(i);
  }
  return out;
}

namespace detail {

inline bool next_combination(std::vector<int>& c, int m) {
  const int t = static_cast<int>(c.size());
  int i = t - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == m - t + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < t; ++j)
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

inline std::vector<int> first_combination(int t) {
  std::vector<int> c(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

}  // namespace detail

/// A nonzero minor exhibited as a counterexample certificate.
template <class K>
struct MinorWitness {
  std::vector<int> rows;
  std::vector<int> cols;
  MultiPoly<K> minor;
};

template <class K>
struct SpaceInDkReport {
  bool ok = false;
  std::optional<MinorWitness<K>> witness;  // set when ok == false
};

/// True iff the whole span of S lies in D_k(f): every (k+1)x(k+1) minor of
/// the restricted Hessian vanishes identically. Otherwise returns a nonzero
/// minor as certificate.
template <class K>
SpaceInDkReport<K> verify_space_in_dk(const DForm<K>& f, const LinearSpace<K>& s, int k) {
  SpaceInDkReport<K> rep;
  const int nv = f.nvars();
  if (k >= nv) {  // D_{n+1} is all of P^n
    rep.ok = true;
    return rep;
  }
  if (k < 0) throw DomainError("verify_space_in_dk: negative k");
  PolyMatrix<K> hs = hessian_on_span(f, s);
  const int t = k + 1;
  std::vector<int> rows = detail::first_combination(t);
  do {
    std::vector<int> cols = detail::first_combination(t);
    do {
      MultiPoly<K> d = hs.submatrix(rows, cols).det();
      if (!d.is_zero()) {
        rep.ok = false;
        rep.witness = MinorWitness<K>{rows, cols, std::move(d)};
        return rep;
      }
    } while (detail::next_combination(cols, nv));
  } while (detail::next_combination(rows, nv));
  rep.ok = true;
  return rep;
}

// ---------------------------------------------------------------------------
// Kernel preimages and constant kernels (cubics)
// ---------------------------------------------------------------------------

enum class PreimageRelation { equal, strictly_contains };

template <class K>
struct KernelPreimage {
  std::optional<LinearSpace<K>> space;  // empty = the Thm-B second-branch signature
  /// classification of the solution-space basis points: iota(P) vs S
  std::vector<std::pair<ProjPoint<K>, PreimageRelation>> classified;
};

/// Solve { P : H_f(P) v = 0 for all v in basis(S) }. For cubics H_f(P) v =
/// H_f(v) P, so this is one exact linear solve.
template <class K>
KernelPreimage<K> kernel_preimage(const DForm<K>& f, const LinearSpace<K>& s) {
  if (f.d() != 3)
    throw DomainError("kernel_preimage: linearity needs a cubic form");
  const int nv = f.nvars();
  const int k1 = static_cast<int>(s.basis().size());
  Mat<K> stack(k1 * nv, nv, f.like());
  for (int b = 0; b < k1; ++b) {
    Mat<K> H = f.hessian().eval(s.basis()[static_cast<std::size_t>(b)].coords());
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) stack(b * nv + i, j) = H(i, j);
  }
  KernelPreimage<K> out;
  auto kb = kernel_basis(stack);
  if (kb.empty()) return out;
  std::vector<ProjPoint<K>> pts;
  for (auto& v : kb) pts.emplace_back(std::move(v));
  out.space = LinearSpace<K>::from_points(std::move(pts));
  for (const auto& p : out.space->basis()) {
    LinearSpace<K> ker = iota(f, p);
    if (!ker.contains(s)) throw Error("internal: preimage point misses S");
    out.classified.emplace_back(
        p, ker.dim() == s.dim() ? PreimageRelation::equal
                                : PreimageRelation::strictly_contains);
  }
  return out;
}

enum class ConstantKernelDiag { ok, kernel_not_contained, generic_rank_too_low };

template <class K>
struct ConstantKernelReport {
  bool ok = false;
  ConstantKernelDiag diag = ConstantKernelDiag::ok;
};

/// "ell has constant kernel r": H_f restricted to ell annihilates every
/// basis vector of r identically in the line parameter, and the generic
/// rank along ell is exactly n-1 (so the kernel is generically r itself,
/// not larger).
template <class K>
ConstantKernelReport<K> verify_constant_kernel(const DForm<K>& f,
                                               const LinearSpace<K>& ell,
                                               const LinearSpace<K>& r) {
  if (ell.dim() != 1 || r.dim() != 1)
    throw DomainError("verify_constant_kernel: both spaces must be lines");
  ConstantKernelReport<K> rep;
  PolyMatrix<K> hs = hessian_on_span(f, ell);
  const int nv = f.nvars();
  for (const auto& v : r.basis()) {
    for (int i = 0; i < nv; ++i) {
      MultiPoly<K> acc(hs.nvars(), f.like());
      for (int j = 0; j < nv; ++j) acc = acc + hs(i, j).scaled(v[j]);
      if (!acc.is_zero()) {
        rep.diag = ConstantKernelDiag::kernel_not_contained;
        return rep;
      }
    }
  }
  // generic rank exactly n-1 <=> some (n-1)x(n-1) minor is not identically 0
  // (rank <= n-1 already follows from the 2-dimensional kernel above)
  const int t = nv - 2;
  std::vector<int> rows = detail::first_combination(t);
  do {
    std::vector<int> cols = detail::first_combination(t);
    do {
      if (!hs.submatrix(rows, cols).det().is_zero()) {
        rep.ok = true;
        return rep;
      }
    } while (detail::next_combination(cols, nv));
  } while (detail::next_combination(rows, nv));
  rep.diag = ConstantKernelDiag::generic_rank_too_low;
  return rep;
}

// ---------------------------------------------------------------------------
// Cones
// ---------------------------------------------------------------------------

/// Kernel of v -> sum_i v_i * dg/dx_i. A nonempty kernel is the space of
/// cone vertex directions of V(g).
template <class K>
std::optional<LinearSpace<K>> cone_check(const MultiPoly<K>& g) {
  if (g.is_zero()) throw DomainError("cone_check: zero polynomial");
  const int nv = g.nvars();
  const std::vector<Expo> basis = monomials_of(nv, g.degree() - 1);
  Mat<K> A(static_cast<int>(basis.size()), nv, g.like());
  for (int i = 0; i < nv; ++i) {
    MultiPoly<K> gi = g.partial(i);
    for (std::size_t r = 0; r < basis.size(); ++r)
      A(static_cast<int>(r), i) = gi.coeff(basis[r]);
  }
  auto kb = kernel_basis(A);
  if (kb.empty()) return std::nullopt;
  std::vector<ProjPoint<K>> pts;
  for (auto& v : kb) pts.emplace_back(std::move(v));
  return LinearSpace<K>::from_points(std::move(pts));
}

}  // namespace hessloci

#endif  // HESSLOCI_DFORM_HPP
