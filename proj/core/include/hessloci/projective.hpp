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
 * @file projective.hpp
 * @brief Projective points (normalized: first nonzero coordinate = 1) and
 *        linear subspaces given by both a point basis and the dual basis of
 *        linear forms cutting them out. The two presentations are checked
 *        against each other on construction.
 */

#ifndef HESSLOCI_PROJECTIVE_HPP
#define HESSLOCI_PROJECTIVE_HPP

#include <span>
#include <vector>

#include "hessloci/multipoly.hpp"

namespace hessloci {

template <class K>
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<K> coords) : x_(std::move(coords)) {
    int lead = -1;
    for (std::size_t i = 0; i < x_.size(); ++i)
      if (!k_is_zero(x_[i])) { lead = static_cast<int>(i); break; }
    if (lead < 0) throw DomainError("projective point needs a nonzero coordinate");
    const K inv = k_inv(x_[static_cast<std::size_t>(lead)]);
    for (auto& c : x_) c = c * inv;
  }

  static ProjPoint coordinate(int nvars, int i, const K& like) {
    std::vector<K> v(static_cast<std::size_t>(nvars), k_zero(like));
    v[static_cast<std::size_t>(i)] = k_one(like);
    return ProjPoint(std::move(v));
  }

  int nvars() const { return static_cast<int>(x_.size()); }
  const std::vector<K>& coords() const { return x_; }
  const K& operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }

  /// Field exemplar derived from a nonzero coordinate (always exists).
  K field_like() const {
    for (const auto& c : x_)
      if (!k_is_zero(c)) return k_zero(c);
    throw Error("internal: projective point with no nonzero coordinate");
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.x_.size() != b.x_.size()) return false;
    for (std::size_t i = 0; i < a.x_.size(); ++i)
      if (!(a.x_[i] == b.x_[i])) return false;
    return true;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

 private:
  std::vector<K> x_;
};

template <class K>
class LinearSpace {
 public:
  /// Span of the given points; cutting forms are computed as the kernel of
  /// the coordinate matrix.
  static LinearSpace from_points(std::vector<ProjPoint<K>> pts) {
    if (pts.empty()) throw DomainError("linear space needs at least one point");
    const int nv = pts.front().nvars();
    const K like = pts.front().field_like();
    Mat<K> B(static_cast<int>(pts.size()), nv, like);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].nvars() != nv) throw DomainError("mixed ambient dimensions");
      for (int j = 0; j < nv; ++j) B(static_cast<int>(i), j) = pts[i][j];
    }
    if (rank_of(B) != static_cast<int>(pts.size()))
      throw DomainError("basis points are dependent");
    std::vector<MultiPoly<K>> forms;
    for (const auto& v : kernel_basis(B))
      forms.push_back(MultiPoly<K>::linear_form(nv, v, like));
    return LinearSpace(nv, std::move(pts), std::move(forms));
  }

  /// Zero locus of the given independent linear forms.
  static LinearSpace from_forms(std::vector<MultiPoly<K>> forms) {
    if (forms.empty()) throw DomainError("need at least one cutting form");
    const int nv = forms.front().nvars();
    const K like = forms.front().like();
    Mat<K> F(static_cast<int>(forms.size()), nv, like);
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (forms[i].nvars() != nv || forms[i].is_zero() || forms[i].degree() != 1)
        throw DomainError("cutting forms must be nonzero linear forms");
      for (int j = 0; j < nv; ++j)
        F(static_cast<int>(i), j) = forms[i].coeff(Expo::unit(nv, j));
    }
    if (rank_of(F) != static_cast<int>(forms.size()))
      throw DomainError("cutting forms are dependent");
    std::vector<ProjPoint<K>> pts;
    for (const auto& v : kernel_basis(F)) pts.emplace_back(v);
    if (pts.empty()) throw DomainError("cutting forms have no projective zero");
    return LinearSpace(nv, std::move(pts), std::move(forms));
  }

  int ambient_nvars() const { return nvars_; }
  /// Projective dimension (a point has dim 0, a line dim 1, ...).
  int dim() const { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<ProjPoint<K>>& basis() const { return basis_; }
  const std::vector<MultiPoly<K>>& cutting_forms() const { return forms_; }
  K field_like() const { return basis_.front().field_like(); }

  bool contains(const ProjPoint<K>& p) const {
    for (const auto& f : forms_)
      if (!k_is_zero(f.eval(p.coords()))) return false;
    return true;
  }

  bool contains(const LinearSpace& other) const {
    for (const auto& p : other.basis_)
      if (!contains(p)) return false;
    return true;
  }

  friend bool operator==(const LinearSpace& a, const LinearSpace& b) {
    if (a.nvars_ != b.nvars_ || a.dim() != b.dim()) return false;
    return a.contains(b) && b.contains(a);
  }
  friend bool operator!=(const LinearSpace& a, const LinearSpace& b) { return !(a == b); }

 private:
  LinearSpace(int nv, std::vector<ProjPoint<K>> pts, std::vector<MultiPoly<K>> forms)
      : nvars_(nv), basis_(std::move(pts)), forms_(std::move(forms)) {
    if (static_cast<int>(basis_.size() + forms_.size()) != nvars_)
      throw Error("internal: inconsistent linear space presentation");
    for (const auto& f : forms_)
      for (const auto& p : basis_)
        if (!k_is_zero(f.eval(p.coords())))
          throw Error("internal: cutting form does not vanish on basis");
  }

  int nvars_;
  std::vector<ProjPoint<K>> basis_;
  std::vector<MultiPoly<K>> forms_;
};

}  // namespace hessloci

#endif  // HESSLOCI_PROJECTIVE_HPP
