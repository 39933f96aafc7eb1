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
 * @file reconstruct.hpp
 * @brief Recover a cubic from its third-derivative tensor and the Waring
 *        datum a: anchor one mixed entry, read lambda off it, fill every
 *        not-all-equal entry through the column-proportionality relations,
 *        read the diagonal coefficients b_i, and reassemble
 *        g = sum b_i x_i^3 + lambda L^3 / 6. The assembled g must
 *        reproduce the input tensor exactly; any mismatch is an error,
 *        not a silent repair.
 *
 * Convention pinned by the round trip: lambda scales only the Waring tail
 * (T[iii] = 6 b_i + lambda a_i^3), so the b_i are the cube coefficients of
 * the recovered g itself; on the tensor of sum x_i^3 + L^3 this reads off
 * lambda = 6 and b_i = 1, and 6 g = 6 sum b_i x_i^3 + lambda L^3 becomes
 * the closed form with lambda normalized to 1.
 */

#ifndef HESSLOCI_RECONSTRUCT_HPP
#define HESSLOCI_RECONSTRUCT_HPP

#include <array>
#include <string>
#include <vector>

#include "hessloci/dform.hpp"

namespace hessloci {

template <class K>
class ThirdTensor {
 public:
  ThirdTensor(int nvars, const K& like)
      : nv_(nvars),
        t_(static_cast<std::size_t>(nvars) * nvars * nvars, k_zero(like)) {
    if (nvars < 2) throw DomainError("ThirdTensor: need at least 2 variables");
  }

  int nvars() const { return nv_; }
  const K& like() const { return t_.front(); }

  K& at(int i, int j, int k) {
    return t_[static_cast<std::size_t>((i * nv_ + j) * nv_ + k)];
  }
  const K& at(int i, int j, int k) const {
    return t_[static_cast<std::size_t>((i * nv_ + j) * nv_ + k)];
  }

  /// Full symmetry under index permutations (the Schwartz condition).
  bool symmetric() const {
    for (int i = 0; i < nv_; ++i)
      for (int j = 0; j < nv_; ++j)
        for (int k = 0; k < nv_; ++k) {
          const K& v = at(i, j, k);
          if (!(at(i, k, j) == v) || !(at(j, i, k) == v) || !(at(j, k, i) == v) ||
              !(at(k, i, j) == v) || !(at(k, j, i) == v))
            return false;
        }
    return true;
  }

  friend bool operator==(const ThirdTensor& a, const ThirdTensor& b) {
    if (a.nv_ != b.nv_) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i] == b.t_[i])) return false;
    return true;
  }

 private:
  int nv_;
  std::vector<K> t_;
};

/// T[i][j][k] = third partial of g; Sigma x_i A_i rebuilds H_g.
template <class K>
ThirdTensor<K> tensor_of(const DForm<K>& g) {
  if (g.d() != 3) throw DomainError("tensor_of: needs a cubic form");
  const int nv = g.nvars();
  ThirdTensor<K> t(nv, g.like());
  for (int i = 0; i < nv; ++i)
    for (int j = i; j < nv; ++j) {
      const MultiPoly<K>& hij = g.hessian()(i, j);  // linear form
      for (int k = 0; k < nv; ++k) {
        const K v = hij.coeff(Expo::unit(nv, k));
        t.at(i, j, k) = v;
        t.at(j, i, k) = v;
      }
    }
  if (!t.symmetric()) throw Error("internal: third tensor not symmetric");
  return t;
}

struct RelationViolation {
  int i, j, k;  // a_k (A_i)^j = a_j (A_i)^k fails in row `row`
  int row;
};

struct RelationsReport {
  bool proportionality_ok = false;
  bool has_nonzero_mixed = false;  // some entry with pairwise distinct indices
  std::vector<RelationViolation> violations;
  /// The rank-6 structure needs both: proportional columns and a nonzero
  /// mixed entry (all mixed entries zero is the excluded TS shape).
  bool ok() const { return proportionality_ok && has_nonzero_mixed; }
};

/// Check a_k (A_i)^j = a_j (A_i)^k for all pairwise distinct i, j, k (as
/// full column vectors); list the violating rows.
template <class K>
RelationsReport validate_relations(const ThirdTensor<K>& t, const std::vector<K>& a) {
  const int nv = t.nvars();
  if (static_cast<int>(a.size()) != nv)
    throw DomainError("validate_relations: a has wrong length");
  for (const K& c : a)
    if (k_is_zero(c)) throw DomainError("validate_relations: zero a_i");
  RelationsReport rep;
  rep.proportionality_ok = true;
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < nv; ++k) {
        if (k == i) continue;
        for (int row = 0; row < nv; ++row) {
          const K lhs = a[static_cast<std::size_t>(k)] * t.at(i, j, row);
          const K rhs = a[static_cast<std::size_t>(j)] * t.at(i, k, row);
          if (!(lhs == rhs)) {
            rep.proportionality_ok = false;
            rep.violations.push_back({i, j, k, row});
          }
        }
      }
    }
  for (int i = 0; i < nv && !rep.has_nonzero_mixed; ++i)
    for (int j = 0; j < nv && !rep.has_nonzero_mixed; ++j)
      for (int k = 0; k < nv && !rep.has_nonzero_mixed; ++k)
        if (i != j && j != k && i != k && !k_is_zero(t.at(i, j, k)))
          rep.has_nonzero_mixed = true;
  return rep;
}

template <class K>
struct ReconstructionResult {
  K lambda;                    // raw scale read off the anchor entry
  std::vector<K> b;            // cube coefficients of g: 6g = 6 sum b_i x_i^3 + lambda L^3
  MultiPoly<K> g;              // sum b_i x_i^3 + lambda L^3/6; tensor_of(g) == T
  std::array<int, 3> anchor;   // the (alpha, beta, gamma) entry that set lambda
};

/// The Step-3 algorithm. Preconditions: the proportionality relations hold
/// and some mixed entry is nonzero (otherwise the tensor is TS-degenerate
/// and the family excludes it).
template <class K>
ReconstructionResult<K> reconstruct_g(const ThirdTensor<K>& t, const std::vector<K>& a) {
  const int nv = t.nvars();
  if (!t.symmetric()) throw DomainError("reconstruct_g: tensor is not symmetric");
  RelationsReport rel = validate_relations(t, a);
  if (!rel.proportionality_ok)
    throw DomainError("reconstruct_g: proportionality relations violated (" +
                      std::to_string(rel.violations.size()) + " rows)");
  if (!rel.has_nonzero_mixed)
    throw DomainError("reconstruct_g: all mixed entries vanish (TS-degenerate tensor)");
  const K like = t.like();

  // anchor: lexicographically smallest pairwise-distinct (i, j, k) with a
  // nonzero entry; deterministic
  std::array<int, 3> anchor{-1, -1, -1};
  for (int i = 0; i < nv && anchor[0] < 0; ++i)
    for (int j = 0; j < nv && anchor[0] < 0; ++j)
      for (int k = 0; k < nv && anchor[0] < 0; ++k)
        if (i != j && j != k && i != k && !k_is_zero(t.at(i, j, k)))
          anchor = {i, j, k};
  const K aaa = a[static_cast<std::size_t>(anchor[0])] *
                a[static_cast<std::size_t>(anchor[1])] *
                a[static_cast<std::size_t>(anchor[2])];
  const K lambda = t.at(anchor[0], anchor[1], anchor[2]) * k_inv(aaa);

  // every not-all-equal entry must match lambda a_i a_j a_k exactly
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j)
      for (int k = 0; k < nv; ++k) {
        if (i == j && j == k) continue;
        const K expect = lambda * a[static_cast<std::size_t>(i)] *
                         a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)];
        if (!(t.at(i, j, k) == expect))
          throw DomainError("reconstruct_g: entry (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) +
                            ") breaks the lambda * a_i a_j a_k shape");
      }

  // diagonal readout: T[iii] = 6 b_i + lambda a_i^3
  const K six = k_int(6, like);
  std::vector<K> b;
  b.reserve(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) {
    const K ai = a[static_cast<std::size_t>(i)];
    const K bi = (t.at(i, i, i) - lambda * ai * ai * ai) * k_inv(six);
    b.push_back(bi);
  }

  // assemble g = sum b_i x_i^3 + lambda L^3/6 (double integration collapsed)
  MultiPoly<K> L = MultiPoly<K>::linear_form(nv, a, like);
  MultiPoly<K> g(nv, like);
  for (int i = 0; i < nv; ++i)
    g.add_term(Expo::unit(nv, i, 3), b[static_cast<std::size_t>(i)]);
  const K tail = lambda * k_inv(six);
  g = g + L.pow(3).scaled(tail);

  ReconstructionResult<K> out{lambda, std::move(b), std::move(g), anchor};
  DForm<K> dg(out.g);
  if (!(tensor_of(dg) == t))
    throw Error("internal: reconstructed g does not reproduce the tensor");
  return out;
}

enum class HessianEqual { equal_up_to_scalar, different };

/// Compare h_f and h_g projectively by exact cross-multiplication.
template <class K>
HessianEqual hessian_equality_probe(const DForm<K>& f, const DForm<K>& g) {
  if (f.nvars() != g.nvars())
    throw DomainError("hessian_equality_probe: nvars mismatch");
  const MultiPoly<K>& hf = f.hessian_poly();
  const MultiPoly<K>& hg = g.hessian_poly();
  if (hf.is_zero() && hg.is_zero()) return HessianEqual::equal_up_to_scalar;
  if (hf.is_zero() || hg.is_zero()) return HessianEqual::different;
  const K cf = hf.leading().second;
  const K cg = hg.leading().second;
  return hf.scaled(cg) == hg.scaled(cf) ? HessianEqual::equal_up_to_scalar
                                        : HessianEqual::different;
}

}  // namespace hessloci

#endif  // HESSLOCI_RECONSTRUCT_HPP
