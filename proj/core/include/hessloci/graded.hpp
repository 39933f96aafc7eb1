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
 * @file graded.hpp
 * @brief The Jacobian ring degreewise: Hilbert functions, ideal membership
 *        with re-verified certificates, socle checks, and the
 *        x_i d_j(h_f) - (d-2) delta_ij h_f membership suite.
 *
 * All graded membership is dense linear algebra in a fixed degree, no
 * Groebner machinery. The slice of (J_f)_m is spanned by the products
 * (monomial of degree m-d+1) * df/dx_i; one echelon factorization with a
 * tracked transform serves every solve and every dual witness in that
 * degree. Membership claims are always certified: cofactors re-expand to
 * the target, witnesses re-pair against freshly computed generators.
 *
 * Smoothness ("the Jacobian ring vanishes in degree N+1") takes a mod-p
 * fast path first: full rank mod p already proves full rank over Q. Only a
 * rank deficit forces the exact rational elimination.
 */

#ifndef HESSLOCI_GRADED_HPP
#define HESSLOCI_GRADED_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hessloci/dform.hpp"
#include "hessloci/fp_fast.hpp"

namespace hessloci {

template <class K>
struct GradedSlice {
  int degree = 0;
  std::vector<Expo> mons;                       // basis of S^m, descending grlex
  std::map<Expo, int, GrlexOrder> index;        // monomial -> row
  std::vector<std::pair<Expo, int>> gens;       // (multiplier monomial, partial index)
  Mat<K> A;                                     // |S^m| x |gens|
  EchelonResult<K> ech;                         // with transform E*A = R
};

template <class K>
class JacobianRing {
 public:
  explicit JacobianRing(const DForm<K>& f) : f_(&f) {}

  const DForm<K>& form() const { return *f_; }

  long long s_dim(int m) const { return monomial_count(f_->nvars(), m); }

  const GradedSlice<K>& slice(int m) const {
    std::lock_guard<std::mutex> lock(mx_);
    auto it = cache_.find(m);
    if (it == cache_.end())
      it = cache_.emplace(m, build_slice(m)).first;
    return *it->second;
  }

  int jacobian_rank(int m) const { return slice(m).ech.rank; }

  /// dim (R_f)_m = dim S^m - rank (J_f)_m.
  long long quotient_dim(int m) const { return s_dim(m) - jacobian_rank(m); }

 private:
  std::shared_ptr<const GradedSlice<K>> build_slice(int m) const {
    auto s = std::make_shared<GradedSlice<K>>();
    s->degree = m;
    s->mons = monomials_of(f_->nvars(), m);
    for (std::size_t r = 0; r < s->mons.size(); ++r)
      s->index.emplace(s->mons[r], static_cast<int>(r));
    const int md = m - (f_->d() - 1);
    if (md >= 0) {
      for (const Expo& mu : monomials_of(f_->nvars(), md))
        for (int i = 0; i < f_->nvars(); ++i) s->gens.emplace_back(mu, i);
    }
    s->A = Mat<K>(static_cast<int>(s->mons.size()),
                  static_cast<int>(s->gens.size()), f_->like());
    for (std::size_t c = 0; c < s->gens.size(); ++c) {
      const auto& [mu, i] = s->gens[c];
      for (const auto& [mt, ct] : f_->gradient()[static_cast<std::size_t>(i)].terms())
        s->A(s->index.at(mu.plus(mt)), static_cast<int>(c)) = ct;
    }
    s->ech = rref_with_transform(s->A);
    return s;
  }

  const DForm<K>* f_;
  mutable std::mutex mx_;
  mutable std::map<int, std::shared_ptr<const GradedSlice<K>>> cache_;
};

// ---------------------------------------------------------------------------
// Hilbert function and smoothness
// ---------------------------------------------------------------------------

/// dim (R_f)_m for m = 0 .. N+1, N the socle degree.
template <class K>
std::vector<long long> hilbert_function(const DForm<K>& f) {
  JacobianRing<K> jr(f);
  std::vector<long long> out;
  for (int m = 0; m <= f.socle_degree() + 1; ++m) out.push_back(jr.quotient_dim(m));
  return out;
}

/// Coefficients of ((1 - t^{d-1}) / (1 - t))^{n+1} up to degree N+1: the
/// complete-intersection Hilbert series a smooth f must match.
inline std::vector<long long> complete_intersection_hilbert(int nvars, int d) {
  const int top = nvars * (d - 2) + 1;
  std::vector<long long> series(static_cast<std::size_t>(top) + 1, 0);
  series[0] = 1;
  // multiply by (1 + t + ... + t^{d-2}) nvars times
  for (int rep = 0; rep < nvars; ++rep) {
    std::vector<long long> next(series.size(), 0);
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (series[i] == 0) continue;
      for (int j = 0; j <= d - 2 && i + static_cast<std::size_t>(j) < next.size(); ++j)
        next[i + static_cast<std::size_t>(j)] += series[i];
    }
    series = std::move(next);
  }
  return series;
}

namespace detail {

/// Rank of (J_f)_m mod p straight from integer-scaled coefficients.
/// Returns -1 when a denominator of f collides with p.
inline int jacobian_rank_mod_p(const DForm<Rat>& f, int m, std::uint64_t p) {
  const Barrett bp(p);
  const int nv = f.nvars();
  // scale f integral: does not change the span of (J_f)_m
  mpz_class l(1);
  for (const auto& [mt, ct] : f.poly().terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ct.get_den().get_mpz_t());
  std::vector<std::vector<std::pair<Expo, std::uint64_t>>> parts(
      static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i)
    for (const auto& [mt, ct] : f.gradient()[static_cast<std::size_t>(i)].terms()) {
      Rat c = ct * Rat(l);
      if (mpz_fdiv_ui(c.get_den().get_mpz_t(), p) == 0) return -1;
      std::uint64_t v = reduce_mod(c, p).value();
      if (v != 0) parts[static_cast<std::size_t>(i)].emplace_back(mt, v);
    }
  const std::vector<Expo> mons = monomials_of(nv, m);
  std::map<Expo, int, GrlexOrder> index;
  for (std::size_t r = 0; r < mons.size(); ++r)
    index.emplace(mons[r], static_cast<int>(r));
  const int md = m - (f.d() - 1);
  std::vector<Expo> mults = md >= 0 ? monomials_of(nv, md) : std::vector<Expo>{};
  const std::size_t ncols = mults.size() * static_cast<std::size_t>(nv);
  std::vector<std::vector<std::uint64_t>> M(mons.size(),
                                            std::vector<std::uint64_t>(ncols, 0));
  std::size_t c = 0;
  for (const Expo& mu : mults)
    for (int i = 0; i < nv; ++i, ++c)
      for (const auto& [mt, v] : parts[static_cast<std::size_t>(i)])
        M[static_cast<std::size_t>(index.at(mu.plus(mt)))][c] = v;
  return fp_rank_dense(M, bp);
}

}  // namespace detail

/// True iff (R_f)_{N+1} = 0, i.e. V(f) is smooth. Full rank mod p is a
/// sound certificate; only a mod-p deficit falls back to the exact rank.
template <class K>
bool smoothness_check(const DForm<K>& f) {
  const int m = f.socle_degree() + 1;
  const long long full = monomial_count(f.nvars(), m);
  if constexpr (std::is_same_v<K, Rat>) {
    for (std::uint64_t p : {1000003ull, 1000033ull, 999983ull}) {
      const int r = detail::jacobian_rank_mod_p(f, m, p);
      if (r == static_cast<int>(full)) return true;
      if (r >= 0) break;  // genuine deficit mod p: confirm over Q
    }
    JacobianRing<K> jr(f);
    return jr.jacobian_rank(m) == full;
  } else {
    JacobianRing<K> jr(f);
    return jr.jacobian_rank(m) == full;
  }
}

// ---------------------------------------------------------------------------
// Membership certificates
// ---------------------------------------------------------------------------

template <class K>
struct MembershipCertificate {
  MultiPoly<K> target;
  int degree = 0;
  bool member = false;
  std::vector<MultiPoly<K>> cofactors;  // target = sum_i cofactors[i] * df/dx_i
  std::vector<K> witness;               // dual functional on S^m when non-member
};

/// Decide r in (J_f)_m by one linear solve against the cached slice; the
/// certificate is re-verified by direct polynomial arithmetic before being
/// returned (no trust in the solver).
template <class K>
MembershipCertificate<K> ideal_membership(const JacobianRing<K>& jr, const MultiPoly<K>& r) {
  const DForm<K>& f = jr.form();
  if (!r.is_zero() && r.nvars() != f.nvars())
    throw DomainError("ideal_membership: nvars mismatch");
  MembershipCertificate<K> cert{r, r.degree(), false, {}, {}};
  if (r.is_zero()) {
    // the zero polynomial is trivially a member with zero cofactors
    cert.member = true;
    cert.cofactors.assign(static_cast<std::size_t>(f.nvars()),
                          MultiPoly<K>(f.nvars(), f.like()));
    return cert;
  }
  const int m = r.degree();
  if (m < f.d() - 1)
    throw DomainError("ideal_membership: degree below d-1");
  const GradedSlice<K>& s = jr.slice(m);

  std::vector<K> rv(s.mons.size(), k_zero(f.like()));
  for (const auto& [mt, ct] : r.terms())
    rv[static_cast<std::size_t>(s.index.at(mt))] = ct;
  const std::vector<K> y = s.ech.E.mul_vec(rv);

  // consistency rows beyond the rank: a nonzero residue is a dual witness
  for (int i = s.ech.rank; i < s.ech.E.rows(); ++i) {
    if (k_is_zero(y[static_cast<std::size_t>(i)])) continue;
    cert.member = false;
    cert.witness.reserve(static_cast<std::size_t>(s.ech.E.cols()));
    for (int j = 0; j < s.ech.E.cols(); ++j)
      cert.witness.push_back(s.ech.E(i, j));
    // re-verify: the functional kills every generator and not the target
    for (const auto& [mu, pi] : s.gens) {
      MultiPoly<K> gen =
          MultiPoly<K>::from_term(f.nvars(), mu, k_one(f.like())) *
          f.gradient()[static_cast<std::size_t>(pi)];
      K acc = k_zero(f.like());
      for (const auto& [mt, ct] : gen.terms())
        acc = acc + cert.witness[static_cast<std::size_t>(s.index.at(mt))] * ct;
      if (!k_is_zero(acc))
        throw Error("internal: witness does not annihilate (J_f)_m");
    }
    K wr = k_zero(f.like());
    for (const auto& [mt, ct] : r.terms())
      wr = wr + cert.witness[static_cast<std::size_t>(s.index.at(mt))] * ct;
    if (k_is_zero(wr)) throw Error("internal: witness vanishes on the target");
    return cert;
  }

  // consistent: read the solution off the pivot columns
  cert.member = true;
  cert.cofactors.assign(static_cast<std::size_t>(f.nvars()),
                        MultiPoly<K>(f.nvars(), f.like()));
  for (int row = 0; row < s.ech.rank; ++row) {
    const K& c = y[static_cast<std::size_t>(row)];
    if (k_is_zero(c)) continue;
    const auto& [mu, pi] = s.gens[static_cast<std::size_t>(s.ech.pivots[static_cast<std::size_t>(row)])];
    cert.cofactors[static_cast<std::size_t>(pi)].add_term(mu, c);
  }
  // re-verify: sum_i c_i * f_i == r exactly
  MultiPoly<K> acc(f.nvars(), f.like());
  for (int i = 0; i < f.nvars(); ++i)
    acc = acc + cert.cofactors[static_cast<std::size_t>(i)] *
                    f.gradient()[static_cast<std::size_t>(i)];
  if (acc != r) throw Error("internal: cofactor re-verification failed");
  return cert;
}

// ---------------------------------------------------------------------------
// Socle facts and the hessian-derivative membership suite
// ---------------------------------------------------------------------------

template <class K>
struct SocleReport {
  bool refused = false;       // non-smooth inputs are refused
  std::string refusal;
  long long socle_dim = -1;   // dim (R_f)_N, must be 1
  bool h_nonmember = false;   // h_f not in (J_f), with witness below
  std::vector<K> witness;
  bool ok() const { return !refused && socle_dim == 1 && h_nonmember; }
};

template <class K>
SocleReport<K> socle_check(const DForm<K>& f) {
  SocleReport<K> rep;
  if (!smoothness_check(f)) {
    rep.refused = true;
    rep.refusal = "socle facts need a smooth hypersurface";
    return rep;
  }
  JacobianRing<K> jr(f);
  const int N = f.socle_degree();
  rep.socle_dim = jr.quotient_dim(N);
  MembershipCertificate<K> cert = ideal_membership(jr, f.hessian_poly());
  rep.h_nonmember = !cert.member;
  rep.witness = std::move(cert.witness);
  return rep;
}

template <class K>
struct ThmDReport {
  bool vacuous = false;  // h_f identically zero
  std::vector<MembershipCertificate<K>> certs;  // (n+1)^2, row-major (i, j)
  bool all_member = false;
};

/// Certify x_i d_j(h_f) - (d-2) delta_ij h_f in (J_f) for all i, j. Holds
/// for any f with h_f != 0, smooth or not.
template <class K>
ThmDReport<K> thmd_certificates(const DForm<K>& f) {
  ThmDReport<K> rep;
  const MultiPoly<K>& h = f.hessian_poly();
  if (h.is_zero()) {
    rep.vacuous = true;
    return rep;
  }
  JacobianRing<K> jr(f);
  const int nv = f.nvars();
  const K dm2 = k_int(f.d() - 2, f.like());
  rep.all_member = true;
  for (int i = 0; i < nv; ++i) {
    const MultiPoly<K> xi = MultiPoly<K>::var(nv, i, f.like());
    for (int j = 0; j < nv; ++j) {
      MultiPoly<K> target = xi * h.partial(j);
      if (i == j) target = target - h.scaled(dm2);
      MembershipCertificate<K> c = ideal_membership(jr, target);
      rep.all_member = rep.all_member && c.member;
      rep.certs.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace hessloci

#endif  // HESSLOCI_GRADED_HPP
