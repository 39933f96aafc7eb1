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
 * @file strata.hpp
 * @brief Finite-field enumeration of hessian strata and two-prime dimension
 *        estimation.
 *
 * Full enumeration walks canonical projective representatives (first
 * nonzero coordinate 1), partitioned into contiguous index ranges across
 * workers; partial results merge by addition and concatenation in range
 * order, so the output is deterministic and independent of the worker
 * count. For cubics the Hessian entries are linear and evaluated from the
 * third-derivative coefficient table.
 *
 * F_p counts are evidence, not scheme theory: points of a stratum can be
 * invisible over F_p (irrational), so counts are lower bounds on geometric
 * behavior and every report says which field it talks about.
 */

#ifndef HESSLOCI_STRATA_HPP
#define HESSLOCI_STRATA_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "hessloci/dform.hpp"
#include "hessloci/fp_fast.hpp"

namespace hessloci {

inline constexpr long long kFullEnumerationBound = 2'000'000;

struct StrataOptions {
  bool full = true;
  std::uint64_t seed = 0;
  std::uint64_t trials = 200'000;   // sampling mode
  std::size_t store_limit = 4096;   // keep explicit points up to this many
  unsigned threads = 0;             // 0 = hardware concurrency
};

struct StrataReport {
  std::uint64_t prime = 0;
  int k = 0;
  bool full = true;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;          // sampling mode only
  long long scanned = 0;             // representatives visited
  long long count = 0;               // stratum members found
  bool truncated = false;            // points list cut at store_limit
  std::vector<std::vector<std::uint64_t>> points;  // canonical representatives
};

/// One full scan classifying every point of P^n(F_p) by rank of H_f.
struct RankProfile {
  std::uint64_t prime = 0;
  long long scanned = 0;
  std::vector<long long> count_by_rank;                        // index 0..n+1
  std::vector<std::vector<std::vector<std::uint64_t>>> points; // per rank, truncated
  std::vector<bool> truncated;
};

namespace detail {

inline long long projective_size(int nvars, std::uint64_t p) {
  long long t = 0, power = 1;
  for (int i = 0; i < nvars; ++i) {
    t += power;
    if (t > (1LL << 62) / static_cast<long long>(p)) throw DomainError("projective space too large");
    power *= static_cast<long long>(p);
  }
  return t;
}

/// Decode the global representative index into coordinates: blocks by the
/// position of the first nonzero coordinate (last position first, so block
/// sizes increase), then base-p digits for the free coordinates.
inline void decode_point(long long g, int nvars, std::uint64_t p, std::uint64_t* x) {
  int lead = 0;
  for (int i = nvars - 1; i >= 0; --i) {
    long long power = 1;  // points with first nonzero at i: p^(nvars-1-i)
    for (int j = 0; j < nvars - 1 - i; ++j) power *= static_cast<long long>(p);
    if (g < power) { lead = i; break; }
    g -= power;
  }
  for (int i = 0; i < nvars; ++i) x[i] = 0;
  x[lead] = 1;
  for (int i = nvars - 1; i > lead; --i) {
    x[i] = static_cast<std::uint64_t>(g % static_cast<long long>(p));
    g /= static_cast<long long>(p);
  }
}

/// Third-derivative coefficient table of a cubic mod p: H_ij = sum_k T[ijk] x_k.
struct CubicTable {
  int nv = 0;
  std::vector<std::uint64_t> t;  // (i*nv + j)*nv + k
  std::uint64_t at(int i, int j, int k) const {
    return t[static_cast<std::size_t>((i * nv + j) * nv + k)];
  }
};

inline CubicTable cubic_table(const DForm<Fp>& f) {
  CubicTable tab;
  tab.nv = f.nvars();
  tab.t.assign(static_cast<std::size_t>(tab.nv) * tab.nv * tab.nv, 0);
  for (int i = 0; i < tab.nv; ++i)
    for (int j = 0; j < tab.nv; ++j) {
      const MultiPoly<Fp>& e = f.hessian()(i, j);
      for (int k = 0; k < tab.nv; ++k)
        tab.t[static_cast<std::size_t>((i * tab.nv + j) * tab.nv + k)] =
            e.coeff(Expo::unit(tab.nv, k)).value();
    }
  return tab;
}

}  // namespace detail

/// Classify all of P^n(F_p) by rank of the Hessian. Requires the full
/// enumeration bound; cubics take the linear-entry fast path.
inline RankProfile rank_profile(const DForm<Fp>& f, const StrataOptions& opt = {}) {
  const std::uint64_t p = f.like().prime();
  const int nv = f.nvars();
  const long long total = detail::projective_size(nv, p);
  if (total > kFullEnumerationBound)
    throw DomainError("full enumeration bound exceeded (use sampling)");
  const Barrett bp(p);

  const bool cubic = f.d() == 3;
  detail::CubicTable tab;
  if (cubic) tab = detail::cubic_table(f);

  const unsigned nthreads = std::max(1u, opt.threads ? opt.threads
                                                     : std::thread::hardware_concurrency());
  const long long chunk = (total + nthreads - 1) / static_cast<long long>(nthreads);

  struct Partial {
    std::vector<long long> count_by_rank;
    std::vector<std::vector<std::vector<std::uint64_t>>> points;
  };
  std::vector<Partial> parts(nthreads);

  auto work = [&](unsigned w) {
    Partial& pa = parts[w];
    pa.count_by_rank.assign(static_cast<std::size_t>(nv) + 1, 0);
    pa.points.assign(static_cast<std::size_t>(nv) + 1, {});
    const long long lo = static_cast<long long>(w) * chunk;
    const long long hi = std::min(total, lo + chunk);
    std::uint64_t x[kMaxVars];
    std::uint64_t h[kMaxVars * kMaxVars];
    std::vector<Fp> xf(static_cast<std::size_t>(nv), Fp(0, p));
    for (long long g = lo; g < hi; ++g) {
      detail::decode_point(g, nv, p, x);
      int rank;
      if (cubic) {
        for (int i = 0; i < nv; ++i)
          for (int j = i; j < nv; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < nv; ++k) acc += tab.at(i, j, k) * x[k];
            const std::uint64_t v = bp.reduce(acc);
            h[i * nv + j] = v;
            h[j * nv + i] = v;
          }
        rank = fp_rank_small(h, nv, bp);
      } else {
        for (int i = 0; i < nv; ++i) xf[static_cast<std::size_t>(i)] = Fp(x[i], p);
        Mat<Fp> m = f.hessian().eval(xf);
        rank = rank_of(m);
      }
      ++pa.count_by_rank[static_cast<std::size_t>(rank)];
      auto& pts = pa.points[static_cast<std::size_t>(rank)];
      if (pts.size() < opt.store_limit)
        pts.emplace_back(x, x + nv);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 1; w < nthreads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  RankProfile prof;
  prof.prime = p;
  prof.scanned = total;
  prof.count_by_rank.assign(static_cast<std::size_t>(nv) + 1, 0);
  prof.points.assign(static_cast<std::size_t>(nv) + 1, {});
  prof.truncated.assign(static_cast<std::size_t>(nv) + 1, false);
  for (const auto& pa : parts)
    for (int r = 0; r <= nv; ++r) {
      prof.count_by_rank[static_cast<std::size_t>(r)] +=
          pa.count_by_rank[static_cast<std::size_t>(r)];
      for (const auto& pt : pa.points[static_cast<std::size_t>(r)]) {
        if (prof.points[static_cast<std::size_t>(r)].size() < opt.store_limit)
          prof.points[static_cast<std::size_t>(r)].push_back(pt);
        else
          prof.truncated[static_cast<std::size_t>(r)] = true;
      }
    }
  return prof;
}

/// Exact F_p points of D_k(f) (full mode), or seeded sampling counts.
inline StrataReport enumerate_stratum(const DForm<Fp>& f, int k,
                                      const StrataOptions& opt = {}) {
  const std::uint64_t p = f.like().prime();
  const int nv = f.nvars();
  StrataReport rep;
  rep.prime = p;
  rep.k = k;
  rep.full = opt.full;
  rep.seed = opt.seed;
  if (opt.full) {
    const long long total = detail::projective_size(nv, p);
    if (total > kFullEnumerationBound)
      throw DomainError("full enumeration bound exceeded (use sampling)");
    RankProfile prof = rank_profile(f, opt);
    rep.scanned = prof.scanned;
    for (int r = 0; r <= std::min(k, nv); ++r) {
      rep.count += prof.count_by_rank[static_cast<std::size_t>(r)];
      for (const auto& pt : prof.points[static_cast<std::size_t>(r)]) {
        if (rep.points.size() < opt.store_limit) rep.points.push_back(pt);
        else rep.truncated = true;
      }
      if (prof.truncated[static_cast<std::size_t>(r)]) rep.truncated = true;
    }
    std::sort(rep.points.begin(), rep.points.end());
    return rep;
  }
  // sampling: seeded, single-threaded, deterministic
  std::mt19937_64 eng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  const Barrett bp(p);
  const bool cubic = f.d() == 3;
  detail::CubicTable tab;
  if (cubic) tab = detail::cubic_table(f);
  std::uint64_t x[kMaxVars];
  std::uint64_t h[kMaxVars * kMaxVars];
  std::vector<Fp> xf(static_cast<std::size_t>(nv), Fp(0, p));
  rep.trials = opt.trials;
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    bool nonzero = false;
    for (int i = 0; i < nv; ++i) {
      x[i] = dist(eng);
      nonzero = nonzero || x[i] != 0;
    }
    if (!nonzero) x[0] = 1;
    ++rep.scanned;
    int rank;
    if (cubic) {
      for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j) {
          std::uint64_t acc = 0;
          for (int kk = 0; kk < nv; ++kk) acc += tab.at(i, j, kk) * x[kk];
          const std::uint64_t v = bp.reduce(acc);
          h[i * nv + j] = v;
          h[j * nv + i] = v;
        }
      rank = fp_rank_small(h, nv, bp);
    } else {
      for (int i = 0; i < nv; ++i) xf[static_cast<std::size_t>(i)] = Fp(x[i], p);
      rank = rank_of(f.hessian().eval(xf));
    }
    if (rank <= k) {
      ++rep.count;
      if (rep.points.size() < opt.store_limit) {
        std::vector<Fp> cf;
        for (int i = 0; i < nv; ++i) cf.emplace_back(x[i], p);
        ProjPoint<Fp> pp(cf);  // canonical representative
        std::vector<std::uint64_t> raw;
        for (int i = 0; i < nv; ++i) raw.push_back(pp[i].value());
        rep.points.push_back(std::move(raw));
      } else {
        rep.truncated = true;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Dimension estimation
// ---------------------------------------------------------------------------

struct DimensionEstimate {
  int dim = -1;                    // -1 = no estimate
  bool agreed = false;             // the two per-prime exponents coincide
  int dim_p1 = -1, dim_p2 = -1;    // round(log_p count) per prime
  double ratio_exponent = 0.0;     // free two-point fit, diagnostic only
  double residual = 0.0;           // max over primes of |log_p count - dim|
  bool low_confidence = false;     // residual > 0.25
  bool empty_over_tested = false;  // both counts zero (not "empty variety")
  bool inconsistent = false;       // counts or exponents contradict each other
  bool lifted_zero_dimensional = false;  // dim 0 via verified rational lifts
  std::uint64_t p1 = 0, p2 = 0;
  long long count1 = 0, count2 = 0;
};

namespace detail {

/// Rational reconstruction of residue r mod M with numerator and
/// denominator bounded by `bound` (standard extended-Euclid lattice walk).
inline std::optional<Rat> rational_reconstruct(std::uint64_t r, std::uint64_t M,
                                               std::uint64_t bound) {
  long long r0 = static_cast<long long>(M), r1 = static_cast<long long>(r % M);
  long long s0 = 0, s1 = 1;
  while (r1 > static_cast<long long>(bound)) {
    const long long q = r0 / r1;
    long long t = r0 - q * r1; r0 = r1; r1 = t;
    t = s0 - q * s1; s0 = s1; s1 = t;
  }
  if (r1 == 0 && s1 != 1 && s1 != -1) return std::nullopt;
  long long num = r1, den = s1;
  if (den == 0) return std::nullopt;
  if (den < 0) { den = -den; num = -num; }
  if (den > static_cast<long long>(bound)) return std::nullopt;
  Rat q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  // must reduce back to r (den invertible mod M)
  if (std::gcd(static_cast<long long>(den), static_cast<long long>(M)) != 1) return std::nullopt;
  return q;
}

/// CRT-combine two normalized coordinate vectors and rationally reconstruct
/// a small-height point; nullopt when any coordinate fails.
inline std::optional<std::vector<Rat>> lift_point(const std::vector<std::uint64_t>& x1,
                                                  std::uint64_t p1,
                                                  const std::vector<std::uint64_t>& x2,
                                                  std::uint64_t p2,
                                                  std::uint64_t height_bound) {
  if (x1.size() != x2.size()) return std::nullopt;
  const std::uint64_t M = p1 * p2;
  // CRT: find m mod M with m = x1 mod p1, m = x2 mod p2
  const Barrett b2(p2);
  const std::uint64_t p1_inv_mod_p2 = b2.inv(p1 % p2);
  std::vector<Rat> out;
  for (std::size_t i = 0; i < x1.size(); ++i) {
    const std::uint64_t d = b2.reduce(p2 + x2[i] - (x1[i] % p2));
    const std::uint64_t m = x1[i] + p1 * b2.mul(d, p1_inv_mod_p2);
    auto q = rational_reconstruct(m, M, height_bound);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return out;
}

}  // namespace detail

/// Try to exhibit the two F_p point sets as reductions of one common set of
/// small-height rational points, each verified by `lift_ok`. Success means
/// the stratum is (evidence for) a fixed finite set: dimension 0.
inline bool lift_zero_dimensional(const StrataReport& r1, const StrataReport& r2,
                                  const std::function<bool(const std::vector<Rat>&)>& lift_ok) {
  if (r1.count != r2.count || r1.count == 0) return false;
  if (r1.truncated || r2.truncated) return false;
  if (static_cast<long long>(r1.points.size()) != r1.count ||
      static_cast<long long>(r2.points.size()) != r2.count)
    return false;
  const std::uint64_t bound = 16;  // small-height: the scope's coordinates
  std::vector<bool> used(r2.points.size(), false);
  for (const auto& x1 : r1.points) {
    bool matched = false;
    for (std::size_t j = 0; j < r2.points.size() && !matched; ++j) {
      if (used[j]) continue;
      auto lift = detail::lift_point(x1, r1.prime, r2.points[j], r2.prime, bound);
      if (!lift) continue;
      if (!lift_ok(*lift)) continue;
      used[j] = true;
      matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

/// The exponent report: per-prime exponents round(log_p count) that must
/// agree, a verified-lift path that settles dimension 0, and the free
/// two-point fit kept as a diagnostic. Counts that disagree structurally
/// produce "no estimate", never a guess.
inline DimensionEstimate dimension_from_reports(
    const StrataReport& r1, const StrataReport& r2, int nmax,
    const std::function<bool(const std::vector<Rat>&)>& lift_ok) {
  DimensionEstimate e;
  e.p1 = r1.prime; e.p2 = r2.prime;
  e.count1 = r1.count; e.count2 = r2.count;
  if (r1.prime == r2.prime) throw DomainError("dimension estimate needs two distinct primes");
  if (r1.count == 0 && r2.count == 0) {
    e.empty_over_tested = true;
    return e;
  }
  if (r1.count == 0 || r2.count == 0) {
    e.inconsistent = true;
    return e;
  }
  e.ratio_exponent =
      std::log(static_cast<double>(r1.count) / static_cast<double>(r2.count)) /
      std::log(static_cast<double>(r1.prime) / static_cast<double>(r2.prime));
  if (lift_ok && lift_zero_dimensional(r1, r2, lift_ok)) {
    e.dim = 0;
    e.agreed = true;
    e.lifted_zero_dimensional = true;
    e.dim_p1 = e.dim_p2 = 0;
    return e;
  }
  auto logexp = [](long long n, std::uint64_t p) {
    return std::log(static_cast<double>(n)) / std::log(static_cast<double>(p));
  };
  const double e1 = logexp(r1.count, r1.prime);
  const double e2 = logexp(r2.count, r2.prime);
  auto clampround = [nmax](double v) {
    int d = static_cast<int>(std::lround(v));
    if (d < 0) d = 0;
    if (d > nmax) d = nmax;
    return d;
  };
  e.dim_p1 = clampround(e1);
  e.dim_p2 = clampround(e2);
  e.agreed = e.dim_p1 == e.dim_p2;
  if (!e.agreed) {
    e.inconsistent = true;
    return e;
  }
  e.dim = e.dim_p1;
  e.residual = std::max(std::abs(e1 - e.dim), std::abs(e2 - e.dim));
  // implied component count c = N / p^dim; a geometrically irreducible
  // stratum has c near a positive integer (Lang-Weil), so a fractional c
  // well below 1 marks a many-components bias in the log_p exponent
  const double c1 = static_cast<double>(r1.count) /
                    std::pow(static_cast<double>(r1.prime), e.dim);
  const double c2 = static_cast<double>(r2.count) /
                    std::pow(static_cast<double>(r2.prime), e.dim);
  const double cfloor = e.dim >= 2 ? 0.75 : 0.4;
  e.low_confidence = e.residual > 0.25 || std::min(c1, c2) < cfloor;
  return e;
}

/// Dimension of the common zero locus of a list of forms (given over Q),
/// from full enumeration at two primes.
inline DimensionEstimate estimate_dimension(const std::vector<MultiPoly<Rat>>& polys,
                                            std::uint64_t p1, std::uint64_t p2,
                                            std::uint64_t seed = 0) {
  if (polys.empty()) throw DomainError("estimate_dimension: empty system");
  const int nv = polys.front().nvars();
  auto report_at = [&](std::uint64_t p) {
    const long long total = detail::projective_size(nv, p);
    if (total > kFullEnumerationBound)
      throw DomainError("full enumeration bound exceeded");
    std::vector<MultiPoly<Fp>> red;
    red.reserve(polys.size());
    for (const auto& q : polys) red.push_back(reduce_poly_mod(q, p));
    StrataReport rep;
    rep.prime = p;
    rep.seed = seed;
    std::uint64_t x[kMaxVars];
    std::vector<Fp> xf(static_cast<std::size_t>(nv), Fp(0, p));
    for (long long g = 0; g < total; ++g) {
      detail::decode_point(g, nv, p, x);
      ++rep.scanned;
      for (int i = 0; i < nv; ++i) xf[static_cast<std::size_t>(i)] = Fp(x[i], p);
      bool all = true;
      for (const auto& q : red)
        if (!k_is_zero(q.eval(xf))) { all = false; break; }
      if (!all) continue;
      ++rep.count;
      if (rep.points.size() < StrataOptions{}.store_limit)
        rep.points.emplace_back(x, x + nv);
      else
        rep.truncated = true;
    }
    return rep;
  };
  auto lift_ok = [&](const std::vector<Rat>& pt) {
    for (const auto& q : polys)
      if (!k_is_zero(q.eval(pt))) return false;
    return true;
  };
  return dimension_from_reports(report_at(p1), report_at(p2), nv - 1, lift_ok);
}

/// Dimension of the stratum D_k(f) from rank counts at two primes; lifted
/// candidate points are re-verified with the exact rank over Q.
inline DimensionEstimate estimate_stratum_dimension(const DForm<Rat>& f, int k,
                                                    std::uint64_t p1, std::uint64_t p2,
                                                    const StrataOptions& opt = {}) {
  auto report_at = [&](std::uint64_t p) {
    DForm<Fp> fp(reduce_poly_mod(f.poly(), p));
    StrataOptions o = opt;
    o.full = true;
    return enumerate_stratum(fp, k, o);
  };
  auto lift_ok = [&](const std::vector<Rat>& pt) {
    return rank_at(f, ProjPoint<Rat>(pt)) <= k;
  };
  return dimension_from_reports(report_at(p1), report_at(p2), f.n(), lift_ok);
}

// ---------------------------------------------------------------------------
// Cyclic D_1 verification
// ---------------------------------------------------------------------------

struct CyclicD1Report {
  bool p0_rank_one = false;    // rank_at(P_0) = 1 over the base field
  bool only_point = false;     // D_1 = {P_0} over both tested primes
  long long count1 = 0, count2 = 0;
  std::uint64_t p1 = 0, p2 = 0;
};

/// For f = x0^3 + f1(x1..xn) in cyclic coordinates: P_0 lies in D_1; full
/// enumeration over two primes finds no other D_1 point.
inline CyclicD1Report verify_cyclic_d1(const DForm<Rat>& f, std::uint64_t p1,
                                       std::uint64_t p2, const StrataOptions& opt = {}) {
  // structural gate: monomials containing x0 must be exactly x0^3
  for (const auto& [m, c] : f.poly().terms())
    if (m[0] > 0 && !(m[0] == f.d() && m.deg() == f.d()))
      throw DomainError("verify_cyclic_d1: f is not in cyclic coordinates");
  CyclicD1Report rep;
  rep.p1 = p1; rep.p2 = p2;
  ProjPoint<Rat> p0 = ProjPoint<Rat>::coordinate(f.nvars(), 0, Rat(0));
  rep.p0_rank_one = rank_at(f, p0) == 1;
  auto run = [&](std::uint64_t p) {
    DForm<Fp> fp(reduce_poly_mod(f.poly(), p));
    StrataOptions o = opt;
    o.full = true;
    return enumerate_stratum(fp, 1, o);
  };
  StrataReport r1 = run(p1), r2 = run(p2);
  rep.count1 = r1.count;
  rep.count2 = r2.count;
  auto is_p0 = [&](const StrataReport& r) {
    if (r.count != 1 || r.points.size() != 1) return false;
    const auto& pt = r.points.front();
    if (pt[0] != 1) return false;
    for (std::size_t i = 1; i < pt.size(); ++i)
      if (pt[i] != 0) return false;
    return true;
  };
  rep.only_point = rep.p0_rank_one && is_p0(r1) && is_p0(r2);
  return rep;
}

}  // namespace hessloci

#endif  // HESSLOCI_STRATA_HPP
