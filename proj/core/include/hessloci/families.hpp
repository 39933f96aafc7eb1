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
 * @file families.hpp
 * @brief Constructors and verifiers for the special families: direct sums
 *        (Thom-Sebastiani) and cyclic forms, Waring rank-(n+2) normal forms
 *        with their closed-form Hessians, the rank-6 configuration of 15
 *        points / 20 lines / 15 planes, the exceptional linear system of
 *        cubics whose Hessian contains a plane that is no kernel, and the
 *        obstruction family ruling that system out among rank-6 Hessians.
 *
 * Built forms come with their verification: a TS form carries the
 * linear-space certificate for its split, the Waring normal form asserts
 * both closed-form identities exactly, the configuration verifier replays
 * every incidence count and every kernel statement symbolically.
 */

#ifndef HESSLOCI_FAMILIES_HPP
#define HESSLOCI_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hessloci/apolar.hpp"
#include "hessloci/graded.hpp"
#include "hessloci/rng.hpp"
#include "hessloci/sixsets.hpp"
#include "hessloci/strata.hpp"

namespace hessloci {

// ---------------------------------------------------------------------------
// Thom-Sebastiani / cyclic forms
// ---------------------------------------------------------------------------

template <class K>
struct TsForm {
  MultiPoly<K> f;
  int split_k;  // f = f1(x_0..x_k) + f2(x_{k+1}..x_n)
  bool certificate_ok;  // the coordinate P^k lies in D_{k+1}(f)
};

namespace detail {

template <class K>
std::pair<int, int> variable_block(const MultiPoly<K>& f) {
  int lo = f.nvars(), hi = -1;
  for (const auto& [m, c] : f.terms())
    for (int i = 0; i < f.nvars(); ++i)
      if (m[i] > 0) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
      }
  return {lo, hi};
}

}  // namespace detail

/// Sum of two forms on disjoint leading/trailing variable blocks; attaches
/// the constructive certificate of the split (the coordinate P^k inside
/// D_{k+1}).
template <class K>
TsForm<K> gen_ts(const MultiPoly<K>& f1, const MultiPoly<K>& f2) {
  if (f1.nvars() != f2.nvars()) throw DomainError("gen_ts: nvars mismatch");
  if (f1.is_zero() || f2.is_zero()) throw DomainError("gen_ts: zero summand");
  auto [lo1, hi1] = detail::variable_block(f1);
  auto [lo2, hi2] = detail::variable_block(f2);
  if (hi1 >= lo2) throw DomainError("gen_ts: overlapping variable blocks");
  TsForm<K> out{f1 + f2, hi1, false};
  const int k = out.split_k;
  DForm<K> df(out.f);
  std::vector<ProjPoint<K>> span;
  for (int i = 0; i <= k; ++i)
    span.push_back(ProjPoint<K>::coordinate(out.f.nvars(), i, out.f.like()));
  out.certificate_ok =
      verify_space_in_dk(df, LinearSpace<K>::from_points(span), k + 1).ok;
  return out;
}

/// Cyclic form x_0^d + f2(x_1..x_n); f2 given in the full ring without x_0.
template <class K>
TsForm<K> gen_cyclic(const MultiPoly<K>& f2) {
  MultiPoly<K> cube = MultiPoly<K>::from_term(
      f2.nvars(), Expo::unit(f2.nvars(), 0, f2.degree()), k_one(f2.like()));
  return gen_ts(cube, f2);
}

/// True iff f o A has no monomial mixing {x_0..x_k} with {x_{k+1}..x_n}.
template <class K>
bool verify_ts_split(const MultiPoly<K>& f, const LinearChange<K>& A, int k) {
  MultiPoly<K> g = change_coords(f, A);
  for (const auto& [m, c] : g.terms()) {
    bool low = false, high = false;
    for (int i = 0; i < g.nvars(); ++i)
      if (m[i] > 0) (i <= k ? low : high) = true;
    if (low && high) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Waring rank n+2 normal forms
// ---------------------------------------------------------------------------

template <class K>
struct WaringForm {
  MultiPoly<K> f;        // sum x_i^3 + L^3
  std::vector<K> a;      // L = sum a_i x_i, all a_i != 0
  MultiPoly<K> L;
};

template <class K>
WaringForm<K> gen_waring_normal(const std::vector<K>& a) {
  const int nv = static_cast<int>(a.size());
  if (nv < 2) throw DomainError("gen_waring_normal: need at least 2 variables");
  for (const K& c : a)
    if (k_is_zero(c))
      throw DomainError(
          "gen_waring_normal: zero coefficient degenerates to Thom-Sebastiani type");
  const K like = a.front();
  MultiPoly<K> L = MultiPoly<K>::linear_form(nv, a, like);
  MultiPoly<K> f(nv, like);
  for (int i = 0; i < nv; ++i)
    f.add_term(Expo::unit(nv, i, 3), k_one(like));
  f = f + L.pow(3);
  return WaringForm<K>{std::move(f), a, std::move(L)};
}

template <class K>
struct ClosedFormsReport {
  bool hessian_ok = false;   // H_f = 6 (Delta + L a a^T), exactly
  bool hesspoly_ok = false;  // h_f = 6^{n+1} (prod x_i + L sum a_i^2 xhat_i)
  bool ok() const { return hessian_ok && hesspoly_ok; }
};

/// The two closed forms of the rank-(n+2) family, with the scalar
/// factors (6 and 6^{n+1}) kept explicit rather than projectivized away.
template <class K>
ClosedFormsReport<K> closed_forms_check(const WaringForm<K>& w) {
  ClosedFormsReport<K> rep;
  const int nv = w.f.nvars();
  const K like = w.f.like();
  const K six = k_int(6, like);
  DForm<K> df(w.f);

  PolyMatrix<K> expected(nv, nv, like);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      MultiPoly<K> e = w.L.scaled(w.a[static_cast<std::size_t>(i)] *
                                  w.a[static_cast<std::size_t>(j)]);
      if (i == j) e = e + MultiPoly<K>::var(nv, i, like);
      expected(i, j) = e.scaled(six);
    }
  rep.hessian_ok = df.hessian() == expected;

  MultiPoly<K> prod = MultiPoly<K>::constant(nv, k_one(like));
  for (int i = 0; i < nv; ++i) prod = prod * MultiPoly<K>::var(nv, i, like);
  MultiPoly<K> sum(nv, like);
  for (int i = 0; i < nv; ++i) {
    MultiPoly<K> hat = MultiPoly<K>::constant(nv, k_one(like));
    for (int j = 0; j < nv; ++j)
      if (j != i) hat = hat * MultiPoly<K>::var(nv, j, like);
    sum = sum + hat.scaled(w.a[static_cast<std::size_t>(i)] * w.a[static_cast<std::size_t>(i)]);
  }
  MultiPoly<K> expected_h = (prod + w.L * sum).scaled(k_pow(six, static_cast<unsigned>(nv), like));
  rep.hesspoly_ok = df.hessian_poly() == expected_h;
  return rep;
}

// ---------------------------------------------------------------------------
// The rank-6 configuration (n = 4): 15 points, 20 lines, 15 planes
// ---------------------------------------------------------------------------

template <class K>
struct Rank6Config {
  std::vector<K> a;                           // 5 nonzero entries
  std::vector<std::vector<K>> form_coeffs;    // L_0..L_5 (L_i = x_i, L_5 = sum a_i x_i)
  std::vector<std::pair<std::array<int, 4>, ProjPoint<K>>> points;
  std::vector<std::pair<std::array<int, 3>, LinearSpace<K>>> lines;
  std::vector<std::pair<std::array<int, 2>, LinearSpace<K>>> planes;

  const ProjPoint<K>& point(const std::array<int, 4>& s) const {
    for (const auto& [key, p] : points)
      if (key == s) return p;
    throw DomainError("rank6 config: unknown point index set");
  }
  const LinearSpace<K>& line(const std::array<int, 3>& s) const {
    for (const auto& [key, l] : lines)
      if (key == s) return l;
    throw DomainError("rank6 config: unknown line index set");
  }
  const LinearSpace<K>& plane(const std::array<int, 2>& s) const {
    for (const auto& [key, pl] : planes)
      if (key == s) return pl;
    throw DomainError("rank6 config: unknown plane index set");
  }
};

template <class K>
Rank6Config<K> rank6_config(const std::vector<K>& a) {
  if (a.size() != 5) throw DomainError("rank6_config: a must have 5 entries");
  for (const K& c : a)
    if (k_is_zero(c)) throw DomainError("rank6_config: all a_i must be nonzero");
  const K like = a.front();
  Rank6Config<K> cfg;
  cfg.a = a;
  for (int i = 0; i < 5; ++i) {
    std::vector<K> v(5, k_zero(like));
    v[static_cast<std::size_t>(i)] = k_one(like);
    cfg.form_coeffs.push_back(std::move(v));
  }
  cfg.form_coeffs.push_back(a);

  auto cut_space = [&](const int* idx, int count) {
    std::vector<MultiPoly<K>> forms;
    for (int t = 0; t < count; ++t)
      forms.push_back(MultiPoly<K>::linear_form(
          5, cfg.form_coeffs[static_cast<std::size_t>(idx[t])], like));
    return LinearSpace<K>::from_forms(std::move(forms));
  };

  for (const auto& q : sixsets::quads()) {
    LinearSpace<K> s = cut_space(q.data(), 4);
    if (s.dim() != 0) throw DomainError("rank6_config: degenerate a (point has wrong dim)");
    cfg.points.emplace_back(q, s.basis().front());
  }
  for (const auto& t : sixsets::triples()) {
    LinearSpace<K> s = cut_space(t.data(), 3);
    if (s.dim() != 1) throw DomainError("rank6_config: degenerate a (line has wrong dim)");
    cfg.lines.emplace_back(t, std::move(s));
  }
  for (const auto& p : sixsets::pairs()) {
    LinearSpace<K> s = cut_space(p.data(), 2);
    if (s.dim() != 2) throw DomainError("rank6_config: degenerate a (plane has wrong dim)");
    cfg.planes.emplace_back(p, std::move(s));
  }

  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.points.size(); ++j)
      if (cfg.points[i].second == cfg.points[j].second)
        throw DomainError("rank6_config: degenerate a (coincident points)");
  for (std::size_t i = 0; i < cfg.lines.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.lines.size(); ++j)
      if (cfg.lines[i].second == cfg.lines[j].second)
        throw DomainError("rank6_config: degenerate a (coincident lines)");
  for (std::size_t i = 0; i < cfg.planes.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.planes.size(); ++j)
      if (cfg.planes[i].second == cfg.planes[j].second)
        throw DomainError("rank6_config: degenerate a (coincident planes)");
  return cfg;
}

struct ConfigReport {
  bool points_rank2 = false;        // rank H_f = 2 at each of the 15 points
  bool lines_constant_kernel = false;  // iota(l_ijk) = l_lmn for all 20 lines
  bool iota_points = false;         // iota(P_ijkl) = Pi_mn
  bool preimage_planes = false;     // kernel_preimage(Pi_mn) = {P_ijkl}, equality
  bool lines_in_sing = false;       // each line inside D_{n-1}(f), symbolically
  bool incidence = false;           // all incidence counts of the configuration
  bool ok() const {
    return points_rank2 && lines_constant_kernel && iota_points &&
           preimage_planes && lines_in_sing && incidence;
  }
};

template <class K>
ConfigReport verify_config(const DForm<K>& f, const Rank6Config<K>& cfg) {
  ConfigReport rep;
  if (f.nvars() != 5 || f.d() != 3)
    throw DomainError("verify_config: expects a cubic threefold");

  rep.points_rank2 = true;
  for (const auto& [key, p] : cfg.points)
    rep.points_rank2 = rep.points_rank2 && rank_at(f, p) == 2;

  rep.lines_constant_kernel = true;
  for (const auto& [key, l] : cfg.lines) {
    const auto comp = sixsets::complement(key);
    rep.lines_constant_kernel =
        rep.lines_constant_kernel && verify_constant_kernel(f, l, cfg.line(comp)).ok;
  }

  rep.iota_points = true;
  for (const auto& [key, p] : cfg.points) {
    const auto comp = sixsets::complement(key);
    rep.iota_points = rep.iota_points && iota(f, p) == cfg.plane(comp);
  }

  rep.preimage_planes = true;
  for (const auto& [key, pl] : cfg.planes) {
    const auto comp = sixsets::complement(key);
    KernelPreimage<K> pre = kernel_preimage(f, pl);
    const bool good = pre.space.has_value() && pre.space->dim() == 0 &&
                      pre.space->basis().front() == cfg.point(comp) &&
                      pre.classified.size() == 1 &&
                      pre.classified.front().second == PreimageRelation::equal;
    rep.preimage_planes = rep.preimage_planes && good;
  }

  rep.lines_in_sing = true;
  for (const auto& [key, l] : cfg.lines)
    rep.lines_in_sing = rep.lines_in_sing && verify_space_in_dk(f, l, f.n() - 1).ok;

  // incidence counts of the configuration, checked geometrically
  rep.incidence = true;
  for (const auto& [pk, pl] : cfg.planes) {
    int nlines = 0, npoints = 0;
    for (const auto& [lk, l] : cfg.lines)
      if (pl.contains(l)) {
        ++nlines;
        if (!sixsets::subset_of(pk, lk)) rep.incidence = false;
      }
    for (const auto& [qk, q] : cfg.points)
      if (pl.contains(q)) {
        ++npoints;
        if (!sixsets::subset_of(pk, qk)) rep.incidence = false;
      }
    rep.incidence = rep.incidence && nlines == 4 && npoints == 6;
  }
  for (const auto& [lk, l] : cfg.lines) {
    int npoints = 0, nplanes = 0;
    for (const auto& [qk, q] : cfg.points)
      if (l.contains(q)) ++npoints;
    for (const auto& [pk, pl] : cfg.planes)
      if (pl.contains(l)) ++nplanes;
    rep.incidence = rep.incidence && npoints == 3 && nplanes == 3;
  }
  for (const auto& [qk, q] : cfg.points) {
    int nlines = 0;
    for (const auto& [lk, l] : cfg.lines)
      if (l.contains(q)) ++nlines;
    rep.incidence = rep.incidence && nlines == 4;
  }
  return rep;
}

/// Exact D_2 count over F_p (full enumeration); the configuration has 15 points.
inline long long rank6_d2_count_mod_p(const DForm<Rat>& f, std::uint64_t p) {
  DForm<Fp> fp(reduce_poly_mod(f.poly(), p));
  return enumerate_stratum(fp, 2, {}).count;
}

// ---------------------------------------------------------------------------
// The exceptional linear system: cubics whose Hessian contains a plane
// that is nobody's kernel
// ---------------------------------------------------------------------------

template <class K>
struct StarForm {
  int n = 0;
  std::uint64_t seed = 0;
  MultiPoly<K> f;
};

/// Monomial basis of the linear system: Sym^3 W + <x_{n-2}^3>
/// + x_n^2 <x_0..x_{n-1}> + x_n (Sym^2 W + x_{n-2}^2 + x_{n-1}^2 +
/// x_{n-3} x_{n-2}), with W = <x_0..x_{n-3}>.
inline std::vector<Expo> star_monomials(int n) {
  if (n < 3) throw DomainError("star family needs n >= 3");
  const int nv = n + 1;
  std::vector<Expo> out;
  const int w = n - 2;  // W spans x_0..x_{n-3}, i.e. the first n-2 variables
  for (const Expo& m : monomials_of(w, 3)) {
    Expo e = Expo::zero(nv);
    for (int i = 0; i < w; ++i) e.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(m[i]);
    out.push_back(e);
  }
  out.push_back(Expo::unit(nv, n - 2, 3));
  for (int i = 0; i <= n - 1; ++i)
    out.push_back(Expo::unit(nv, n, 2).plus(Expo::unit(nv, i)));
  for (const Expo& m : monomials_of(w, 2)) {
    Expo e = Expo::unit(nv, n);
    for (int i = 0; i < w; ++i)
      e.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(m[i]);
    out.push_back(e);
  }
  out.push_back(Expo::unit(nv, n).plus(Expo::unit(nv, n - 2, 2)));
  out.push_back(Expo::unit(nv, n).plus(Expo::unit(nv, n - 1, 2)));
  out.push_back(Expo::unit(nv, n).plus(Expo::unit(nv, n - 3)).plus(Expo::unit(nv, n - 2)));
  return out;
}

template <class K>
StarForm<K> gen_star(int n, std::uint64_t seed, const K& like) {
  Rng rng(seed);
  MultiPoly<K> f(n + 1, like);
  for (const Expo& m : star_monomials(n))
    f.add_term(m, k_int(rng.small_nonzero(), like));
  return StarForm<K>{n, seed, std::move(f)};
}

/// The plane Pi = V(x_{n-2}, x_n) of the construction.
template <class K>
LinearSpace<K> star_plane(int n, const K& like) {
  const int nv = n + 1;
  std::vector<MultiPoly<K>> forms;
  forms.push_back(MultiPoly<K>::var(nv, n - 2, like));
  forms.push_back(MultiPoly<K>::var(nv, n, like));
  return LinearSpace<K>::from_forms(std::move(forms));
}

struct StarReport {
  bool plane_in_hessian = false;  // det of H on the span of Pi vanishes
  bool preimage_empty = false;    // no P with iota(P) containing Pi
  bool smooth = false;
  int retries_used = 0;
  std::uint64_t seed = 0;
  bool ok() const { return plane_in_hessian && preimage_empty && smooth; }
};

template <class K>
StarReport verify_star(const StarForm<K>& s) {
  StarReport rep;
  rep.seed = s.seed;
  DForm<K> f(s.f);
  LinearSpace<K> pi = star_plane(s.n, s.f.like());
  rep.plane_in_hessian = hessian_on_span(f, pi).det().is_zero();
  rep.preimage_empty = !kernel_preimage(f, pi).space.has_value();
  rep.smooth = smoothness_check(f);
  return rep;
}

/// Seeded draw with the genericity conditions checked; redraws (bounded)
/// when the smoothness gate fails, logging the retries.
inline std::pair<StarForm<Rat>, StarReport> draw_verified_star(int n, std::uint64_t seed,
                                                               int max_retries = 16) {
  Rng stream(seed);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    const std::uint64_t sub = attempt == 0 ? seed : stream.fork();
    StarForm<Rat> s = gen_star<Rat>(n, sub, Rat(0));
    StarReport rep = verify_star(s);
    rep.retries_used = attempt;
    rep.seed = sub;
    if (rep.ok()) return {std::move(s), rep};
  }
  throw DomainError("star family: retries exhausted for seed " + std::to_string(seed));
}

template <class K>
struct TwoLinesReport {
  bool minor_22 = false, minor_23 = false, minor_33 = false;
  int sign = 0;                 // +1: plain-submatrix minors match with no sign flip
  bool p_nonzero = false;       // the binary quadratic p is not identically 0
  bool p_nondegenerate = false; // discriminant != 0: two distinct lines
  bool beta3_zero = false, beta5_zero = false;  // degeneration diagnostics
  MultiPoly<K> p;
  bool ok() const {
    return minor_22 && minor_23 && minor_33 && p_nonzero && p_nondegenerate;
  }
};

/// For n = 4: on the plane {x_2 = x_4 = 0} the three relevant 4x4 minors of
/// the restricted Hessian factor through one binary quadratic p; p = 0 cuts
/// two lines for general coefficients.
template <class K>
TwoLinesReport<K> star_two_lines_check(const StarForm<K>& s) {
  if (s.n != 4) throw DomainError("star_two_lines_check: needs n = 4");
  const K like = s.f.like();
  TwoLinesReport<K> rep{false, false, false, 0, false, false, false, false,
                        MultiPoly<K>(3, like)};
  DForm<K> f(s.f);
  // span of {x2 = x4 = 0} in the order e0, e1, e3: lambda_0, lambda_1, lambda_2
  std::vector<ProjPoint<K>> span{ProjPoint<K>::coordinate(5, 0, like),
                                 ProjPoint<K>::coordinate(5, 1, like),
                                 ProjPoint<K>::coordinate(5, 3, like)};
  PolyMatrix<K> hs = hessian_on_span(f, span);

  const K beta3 = s.f.coeff(Expo::unit(5, 3, 2).plus(Expo::unit(5, 4)));
  const K beta5 = s.f.coeff(Expo::unit(5, 1).plus(Expo::unit(5, 2)).plus(Expo::unit(5, 4)));
  rep.beta3_zero = k_is_zero(beta3);
  rep.beta5_zero = k_is_zero(beta5);

  const std::vector<int> r01{0, 1};
  rep.p = hs.submatrix(r01, r01).det();
  rep.p_nonzero = !rep.p.is_zero();

  // 2*beta3*lambda_2 and beta5*lambda_1 as forms in the span parameters
  MultiPoly<K> t3 = MultiPoly<K>::var(3, 2, like).scaled(k_int(2, like) * beta3);
  MultiPoly<K> t5 = MultiPoly<K>::var(3, 1, like).scaled(beta5);

  MultiPoly<K> m22 = hs.deleted(2, 2).det();
  MultiPoly<K> m23 = hs.deleted(2, 3).det();
  MultiPoly<K> m33 = hs.deleted(3, 3).det();
  MultiPoly<K> e22 = -(t3 * t3 * rep.p);
  MultiPoly<K> e23 = -(t5 * t3 * rep.p);
  MultiPoly<K> e33 = -(t5 * t5 * rep.p);
  if (m22 == e22 && m23 == e23 && m33 == e33) {
    rep.sign = 1;
    rep.minor_22 = rep.minor_23 = rep.minor_33 = true;
  } else if (m22 == -e22 && m23 == -e23 && m33 == -e33) {
    rep.sign = -1;
    rep.minor_22 = rep.minor_23 = rep.minor_33 = true;
  }

  if (rep.p_nonzero) {
    // p = a l0^2 + b l0 l1 + c l1^2; two distinct lines iff b^2 - 4ac != 0
    const K a = rep.p.coeff(Expo::unit(3, 0, 2));
    const K b = rep.p.coeff(Expo::unit(3, 0).plus(Expo::unit(3, 1)));
    const K c = rep.p.coeff(Expo::unit(3, 1, 2));
    const K disc = b * b - k_int(4, like) * a * c;
    rep.p_nondegenerate = !k_is_zero(disc);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The Step-2 obstruction family g = sum alpha_k x_k^3 + lambda L x_4^2
// ---------------------------------------------------------------------------

template <class K>
struct Step2Report {
  MultiPoly<K> g;
  K minor;            // det of the rows/cols {0,1,4} block of H_g(Q_04)
  K expected;         // 24 lambda^2 a_0^2 a_1^2 alpha_0 a_4
  bool minor_matches = false;
  int rank_at_q04 = 0;
  bool obstruction = false;  // rank > 2: Q_04 cannot lie in D_2(g)
};

template <class K>
Step2Report<K> step2_family(const std::vector<K>& alpha, const K& lambda,
                            const std::vector<K>& a) {
  if (alpha.size() != 5 || a.size() != 5)
    throw DomainError("step2_family: alpha and a need 5 entries");
  if (k_is_zero(lambda))
    throw DomainError("step2_family: lambda = 0 degenerates to Thom-Sebastiani type");
  for (const K& c : a)
    if (k_is_zero(c))
      throw DomainError("step2_family: zero a_i degenerates to Thom-Sebastiani type");
  for (int i = 0; i < 4; ++i)
    if (k_is_zero(alpha[static_cast<std::size_t>(i)]))
      throw DomainError("step2_family: alpha_" + std::to_string(i) +
                        " = 0 makes the coordinate point singular");
  const K like = lambda;
  MultiPoly<K> g(5, like);
  for (int i = 0; i < 5; ++i)
    g.add_term(Expo::unit(5, i, 3), alpha[static_cast<std::size_t>(i)]);
  MultiPoly<K> L = MultiPoly<K>::linear_form(5, a, like);
  MultiPoly<K> x4sq = MultiPoly<K>::from_term(5, Expo::unit(5, 4, 2), k_one(like));
  g = g + (L * x4sq).scaled(lambda);

  Step2Report<K> rep{g, k_zero(like), k_zero(like), false, 0, false};
  DForm<K> dg(g);
  std::vector<K> q04{k_zero(like) - a[4], k_zero(like), k_zero(like), k_zero(like), a[0]};
  Mat<K> H = dg.hessian().eval(q04);
  Mat<K> block(3, 3, like);
  const int idx[3] = {0, 1, 4};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) block(i, j) = H(idx[i], idx[j]);
  rep.minor = det(block);
  rep.expected = k_int(24, like) * lambda * lambda * a[0] * a[0] * a[1] * a[1] *
                 alpha[0] * a[4];
  rep.minor_matches = rep.minor == rep.expected;
  rep.rank_at_q04 = rank_of(H);
  rep.obstruction = rep.rank_at_q04 > 2;
  return rep;
}

// ---------------------------------------------------------------------------
// Waring sums from explicit linear forms (Sylvester-style inputs)
// ---------------------------------------------------------------------------

template <class K>
MultiPoly<K> waring_sum(const std::vector<std::vector<K>>& form_coeffs, int nvars,
                        const K& like, int d = 3) {
  MultiPoly<K> f(nvars, like);
  for (const auto& v : form_coeffs) {
    if (static_cast<int>(v.size()) != nvars)
      throw DomainError("waring_sum: coefficient vector has wrong length");
    f = f + MultiPoly<K>::linear_form(nvars, v, like).pow(static_cast<unsigned>(d));
  }
  if (f.is_zero()) throw DomainError("waring_sum: the forms cancel");
  return f;
}

}  // namespace hessloci

#endif  // HESSLOCI_FAMILIES_HPP
