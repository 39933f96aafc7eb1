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
 * @file multipoly.hpp
 * @brief Sparse homogeneous multivariate polynomials over an exact field.
 *
 * Invariants maintained by every operation:
 *   - no stored zero coefficients;
 *   - all exponent vectors sum to the common degree;
 *   - the zero polynomial is the empty term map with degree -1.
 * Term maps iterate in descending graded-lex order, so printing and
 * serialization are deterministic. Values are immutable in practice: all
 * operations are pure functions returning fresh polynomials.
 */

#ifndef HESSLOCI_MULTIPOLY_HPP
#define HESSLOCI_MULTIPOLY_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hessloci/linalg.hpp"
#include "hessloci/monomial.hpp"
#include "hessloci/scalar.hpp"

namespace hessloci {

template <class K>
class MultiPoly {
 public:
  using Terms = std::map<Expo, K, GrlexOrder>;

  MultiPoly(int nvars, const K& like) : nvars_(nvars), zero_(k_zero(like)) {
    Expo::check_nvars(nvars);
  }

  static MultiPoly from_term(int nvars, const Expo& m, const K& c) {
    MultiPoly p(nvars, c);
    p.add_term(m, c);
    return p;
  }

  /// The variable x_i as a degree-1 polynomial.
  static MultiPoly var(int nvars, int i, const K& like) {
    return from_term(nvars, Expo::unit(nvars, i), k_one(like));
  }

  static MultiPoly constant(int nvars, const K& c) {
    return from_term(nvars, Expo::zero(nvars), c);
  }

  /// Linear form sum_i coeffs[i] * x_i.
  static MultiPoly linear_form(int nvars, std::span<const K> coeffs, const K& like) {
    if (static_cast<int>(coeffs.size()) != nvars)
      throw DomainError("linear form needs nvars coefficients");
    MultiPoly p(nvars, like);
    for (int i = 0; i < nvars; ++i) p.add_term(Expo::unit(nvars, i), coeffs[static_cast<std::size_t>(i)]);
    return p;
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  const K& like() const { return zero_; }

  K coeff(const Expo& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero_ : it->second;
  }

  /// Accumulate c * x^m, preserving the invariants.
  void add_term(const Expo& m, const K& c) {
    if (m.n != nvars_) throw DomainError("nvars mismatch in add_term");
    if (k_is_zero(c)) return;
    const int d = m.deg();
    if (degree_ >= 0 && d != degree_)
      throw DomainError("inhomogeneous term insertion");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (k_is_zero(it->second)) terms_.erase(it);
    }
    degree_ = terms_.empty() ? -1 : d;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    require_compatible(o);
    if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
      throw DomainError("degree mismatch in polynomial sum");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r(nvars_, zero_);
    r.degree_ = degree_;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, zero_ - c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

  MultiPoly scaled(const K& c) const {
    MultiPoly r(nvars_, zero_);
    if (k_is_zero(c)) return r;
    for (const auto& [m, a] : terms_) r.add_term(m, a * c);
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    require_compatible(o);
    MultiPoly r(nvars_, zero_);
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma.plus(mb), ca * cb);
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(nvars_, k_one(zero_));
    MultiPoly b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  MultiPoly partial(int i) const {
    if (i < 0 || i >= nvars_) throw DomainError("partial: index out of range");
    MultiPoly r(nvars_, zero_);
    for (const auto& [m, c] : terms_) {
      const int e = m[i];
      if (e == 0) continue;
      Expo m2 = m.minus(Expo::unit(nvars_, i));
      r.add_term(m2, c * k_int(e, zero_));
    }
    return r;
  }

  K eval(std::span<const K> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw DomainError("eval: dimension mismatch");
    K acc = zero_;
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = t * k_pow(x[static_cast<std::size_t>(i)], static_cast<unsigned>(m[i]), zero_);
      acc = acc + t;
    }
    return acc;
  }

  /// Substitute x_j := sum_m rows(j, m) * y_m; `rows` is nvars x out_nvars.
  MultiPoly substitute_linear(const Mat<K>& rows, int out_nvars) const {
    if (rows.rows() != nvars_ || rows.cols() != out_nvars)
      throw DomainError("substitute_linear: dimension mismatch");
    // per-variable image powers, computed once up to the needed exponent
    std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(nvars_));
    std::vector<int> maxe(static_cast<std::size_t>(nvars_), 0);
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > maxe[static_cast<std::size_t>(i)]) maxe[static_cast<std::size_t>(i)] = m[i];
    for (int i = 0; i < nvars_; ++i) {
      auto& pw = powers[static_cast<std::size_t>(i)];
      pw.push_back(constant_out(out_nvars, k_one(zero_)));
      if (maxe[static_cast<std::size_t>(i)] == 0) continue;
      MultiPoly img(out_nvars, zero_);
      for (int mcol = 0; mcol < out_nvars; ++mcol)
        img.add_term(Expo::unit(out_nvars, mcol), rows(i, mcol));
      for (int e = 1; e <= maxe[static_cast<std::size_t>(i)]; ++e)
        pw.push_back(pw.back() * img);
    }
    MultiPoly r(out_nvars, zero_);
    for (const auto& [m, c] : terms_) {
      MultiPoly t = constant_out(out_nvars, c);
      for (int i = 0; i < nvars_; ++i)
        if (m[i] > 0) t = t * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(m[i])];
      if (r.is_zero()) r = std::move(t);
      else if (t.is_zero()) continue;
      else {
        for (const auto& [mm, cc] : t.terms_) r.add_term(mm, cc);
      }
    }
    return r;
  }

  /// Re-embed into new_nvars variables, shifting x_i to x_{i+offset}.
  MultiPoly embed(int new_nvars, int offset) const {
    if (offset < 0 || nvars_ + offset > new_nvars)
      throw DomainError("embed: variables do not fit");
    MultiPoly r(new_nvars, zero_);
    for (const auto& [m, c] : terms_) {
      Expo m2 = Expo::zero(new_nvars);
      for (int i = 0; i < nvars_; ++i)
        m2.e[static_cast<std::size_t>(i + offset)] = static_cast<std::uint8_t>(m[i]);
      r.add_term(m2, c);
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Leading term in graded-lex order; polynomial must be nonzero.
  std::pair<Expo, K> leading() const {
    if (is_zero()) throw DomainError("leading term of zero polynomial");
    return {terms_.begin()->first, terms_.begin()->second};
  }

  /// Constant value of a degree-0 polynomial (zero polynomial gives 0).
  K constant_value() const {
    if (is_zero()) return zero_;
    if (degree_ != 0) throw DomainError("constant_value of non-constant");
    return terms_.begin()->second;
  }

 private:
  MultiPoly constant_out(int out_nvars, const K& c) const {
    MultiPoly p(out_nvars, zero_);
    p.add_term(Expo::zero(out_nvars), c);
    return p;
  }

  void require_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("nvars mismatch between polynomials");
  }

  int nvars_;
  int degree_ = -1;
  K zero_{};
  Terms terms_;
};

/// f composed with the change of variables A: (f o A)(x) = f(A x).
template <class K>
MultiPoly<K> change_coords(const MultiPoly<K>& f, const LinearChange<K>& A) {
  if (A.A.rows() != f.nvars()) throw DomainError("change_coords: dimension mismatch");
  return f.substitute_linear(A.A, f.nvars());
}

/// Coefficientwise reduction mod p; throws when a denominator collides.
inline MultiPoly<Fp> reduce_poly_mod(const MultiPoly<Rat>& f, std::uint64_t p) {
  MultiPoly<Fp> r(f.nvars(), Fp(0, p));
  for (const auto& [m, c] : f.terms()) r.add_term(m, reduce_mod(c, p));
  return r;
}

/// Euler operator sum_i x_i * df/dx_i (equals deg(f) * f for homogeneous f).
template <class K>
MultiPoly<K> euler_apply(const MultiPoly<K>& f) {
  MultiPoly<K> acc(f.nvars(), f.like());
  for (int i = 0; i < f.nvars(); ++i) {
    MultiPoly<K> xi = MultiPoly<K>::var(f.nvars(), i, f.like());
    acc = acc + xi * f.partial(i);
  }
  return acc;
}

}  // namespace hessloci

#endif  // HESSLOCI_MULTIPOLY_HPP
