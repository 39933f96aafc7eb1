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
 * @file polymatrix.hpp
 * @brief Square matrices with polynomial entries: symbolic determinants via
 *        minor expansion memoized on column subsets, entrywise evaluation,
 *        submatrix selection.
 *
 * The determinant is division-free: minors of the first k rows are built
 * over all k-subsets of columns, Theta(2^m * m) polynomial multiplies. The
 * size is capped at m <= 8, which covers every matrix in scope.
 */

#ifndef HESSLOCI_POLYMATRIX_HPP
#define HESSLOCI_POLYMATRIX_HPP

#include <bit>
#include <optional>
#include <span>
#include <vector>

#include "hessloci/multipoly.hpp"

namespace hessloci {

template <class K>
class PolyMatrix {
 public:
  PolyMatrix(int size, int nvars, const K& like)
      : size_(size), nvars_(nvars),
        e_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size),
           MultiPoly<K>(nvars, like)) {
    if (size < 1) throw DomainError("PolyMatrix size must be positive");
  }

  int size() const { return size_; }
  int nvars() const { return nvars_; }
  const K& like() const { return e_.front().like(); }

  MultiPoly<K>& operator()(int i, int j) {
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
              static_cast<std::size_t>(j)];
  }
  const MultiPoly<K>& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
              static_cast<std::size_t>(j)];
  }

  bool is_symmetric() const {
    for (int i = 0; i < size_; ++i)
      for (int j = i + 1; j < size_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Common degree of the nonzero entries, or -1 if all entries vanish.
  /// Throws if nonzero entries disagree (uniform entry degree invariant).
  int entry_degree() const {
    int d = -1;
    for (const auto& p : e_) {
      if (p.is_zero()) continue;
      if (d < 0) d = p.degree();
      else if (p.degree() != d) throw DomainError("non-uniform entry degrees");
    }
    return d;
  }

  Mat<K> eval(std::span<const K> x) const {
    Mat<K> m(size_, size_, like());
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) m(i, j) = (*this)(i, j).eval(x);
    return m;
  }

  PolyMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const {
    if (rows.size() != cols.size() || rows.empty())
      throw DomainError("submatrix selection must be square and nonempty");
    PolyMatrix s(static_cast<int>(rows.size()), nvars_, like());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        s(static_cast<int>(i), static_cast<int>(j)) =
            (*this)(rows[i], cols[j]);
    return s;
  }

  /// Submatrix with one row and one column deleted; its determinant is the
  /// plain minor, no cofactor sign.
  PolyMatrix deleted(int row, int col) const {
    std::vector<int> rs, cs;
    for (int i = 0; i < size_; ++i) if (i != row) rs.push_back(i);
    for (int j = 0; j < size_; ++j) if (j != col) cs.push_back(j);
    return submatrix(rs, cs);
  }

  MultiPoly<K> det() const {
    if (size_ > 8) throw DomainError("poly_det: size exceeds scope bound (8)");
    entry_degree();  // validates uniformity
    const int m = size_;
    const std::size_t full = std::size_t{1} << m;
    std::vector<std::optional<MultiPoly<K>>> memo(full);
    memo[0] = MultiPoly<K>::constant(nvars_, k_one(like()));
    // subsets by popcount: minor of rows 0..k-1 and column set `mask`
    for (int k = 1; k <= m; ++k) {
      for (std::size_t mask = 0; mask < full; ++mask) {
        if (std::popcount(mask) != k) continue;
        MultiPoly<K> acc(nvars_, like());
        int pos = 0;
        for (int j = 0; j < m; ++j) {
          if (!(mask & (std::size_t{1} << j))) continue;
          const MultiPoly<K>& a = (*this)(k - 1, j);
          if (!a.is_zero()) {
            MultiPoly<K> t = a * (*memo[mask ^ (std::size_t{1} << j)]);
            const bool negative = ((k - 1) + pos) % 2 != 0;
            acc = negative ? acc - t : acc + t;
          }
          ++pos;
        }
        memo[mask] = std::move(acc);
      }
      // minors over k-1 rows are no longer needed; free them
      for (std::size_t mask = 0; mask < full; ++mask)
        if (std::popcount(mask) == k - 1) memo[mask].reset();
    }
    return *memo[full - 1];
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size_ != b.size_ || a.nvars_ != b.nvars_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }

 private:
  int size_;
  int nvars_;
  std::vector<MultiPoly<K>> e_;
};

template <class K>
MultiPoly<K> poly_det(const PolyMatrix<K>& m) {
  return m.det();
}

}  // namespace hessloci

#endif  // HESSLOCI_POLYMATRIX_HPP
