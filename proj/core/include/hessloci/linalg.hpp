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
 * @file linalg.hpp
 * @brief Exact dense linear algebra over a field K.
 *
 * Elimination strategy:
 *   - over the rationals: rows are scaled integral, then fraction-free
 *     Bareiss elimination bounds intermediate bit growth; pivot rows are
 *     normalized to a reduced echelon form only at the end;
 *   - over F_p: plain Gauss-Jordan with modular inverses.
 * Pivoting is deterministic (first nonzero), so kernels, transforms and all
 * downstream reports are bit-reproducible.
 *
 * rref_with_transform returns E with E*A = R, which later feeds ideal
 * membership: consistency checks, cofactor solves and dual witnesses all
 * read off the same factorization.
 */

#ifndef HESSLOCI_LINALG_HPP
#define HESSLOCI_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hessloci/scalar.hpp"

namespace hessloci {

template <class K>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, const K& like)
      : rows_(rows), cols_(cols), zero_(k_zero(like)),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), k_zero(like)) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  }

  static Mat identity(int n, const K& like) {
    Mat m(n, n, like);
    for (int i = 0; i < n; ++i) m(i, i) = k_one(like);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const K& like() const { return zero_; }

  K& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
  }
  const K& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  Mat mul(const Mat& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product dimension mismatch");
    Mat r(rows_, o.cols_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (k_is_zero((*this)(i, k))) continue;
        for (int j = 0; j < o.cols_; ++j) {
          K t = (*this)(i, k) * o(k, j);
          r(i, j) = r(i, j) + t;
        }
      }
    return r;
  }

  std::vector<K> mul_vec(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DomainError("matvec dimension mismatch");
    std::vector<K> r(static_cast<std::size_t>(rows_), zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        K t = (*this)(i, j) * v[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] + t;
      }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }

 private:
  int rows_, cols_;
  K zero_{};
  std::vector<K> a_;
};

template <class K>
struct EchelonResult {
  Mat<K> R;                 // reduced row echelon form of A
  Mat<K> E;                 // row transform, E * A = R
  std::vector<int> pivots;  // pivot column of each pivot row
  int rank = 0;
};

namespace detail {

// Clear denominators row by row so the Bareiss updates stay integral.
inline void scale_rows_integral(Mat<Rat>& W) {
  for (int i = 0; i < W.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < W.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), W(i, j).get_den().get_mpz_t());
    if (l != 1) {
      Rat f(l);
      for (int j = 0; j < W.cols(); ++j) W(i, j) = W(i, j) * f;
    }
  }
}

}  // namespace detail

/// RREF of [A] together with the transform E (E*A = R). `acols` is the
/// number of columns of A that participate in pivoting; the remaining
/// columns of W are carried along (used internally for augmented solves).
template <class K>
EchelonResult<K> rref_with_transform(const Mat<K>& A) {
  const int rows = A.rows(), acols = A.cols();
  const int width = acols + rows;
  Mat<K> W(rows, width, A.like());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < acols; ++j) W(i, j) = A(i, j);
    W(i, acols + i) = k_one(A.like());
  }

  std::vector<int> pivots;
  int r = 0;

  if constexpr (std::is_same_v<K, Rat>) {
    detail::scale_rows_integral(W);
    Rat prev(1);
    for (int col = 0; col < acols && r < rows; ++col) {
      int sel = -1;
      for (int i = r; i < rows; ++i)
        if (!k_is_zero(W(i, col))) { sel = i; break; }
      if (sel < 0) continue;
      if (sel != r) W.swap_rows(sel, r);
      const Rat pivot = W(r, col);
      for (int i = r + 1; i < rows; ++i) {
        const Rat f = W(i, col);
        for (int j = col; j < width; ++j) {
          // fraction-free update; exact division by the previous pivot
          W(i, j) = (pivot * W(i, j) - f * W(r, j)) / prev;
        }
        W(i, col) = Rat(0);
      }
      prev = pivot;
      pivots.push_back(col);
      ++r;
    }
  } else {
    for (int col = 0; col < acols && r < rows; ++col) {
      int sel = -1;
      for (int i = r; i < rows; ++i)
        if (!k_is_zero(W(i, col))) { sel = i; break; }
      if (sel < 0) continue;
      if (sel != r) W.swap_rows(sel, r);
      const K pinv = k_inv(W(r, col));
      for (int j = col; j < width; ++j) W(r, j) = W(r, j) * pinv;
      for (int i = r + 1; i < rows; ++i) {
        if (k_is_zero(W(i, col))) continue;
        const K f = W(i, col);
        for (int j = col; j < width; ++j) {
          K t = f * W(r, j);
          W(i, j) = W(i, j) - t;
        }
      }
      pivots.push_back(col);
      ++r;
    }
  }

  // Normalize pivots to 1 and clear above (Jordan sweep).
  for (int pr = r - 1; pr >= 0; --pr) {
    const int pc = pivots[static_cast<std::size_t>(pr)];
    const K pinv = k_inv(W(pr, pc));
    for (int j = 0; j < width; ++j) W(pr, j) = W(pr, j) * pinv;
    for (int i = 0; i < pr; ++i) {
      if (k_is_zero(W(i, pc))) continue;
      const K f = W(i, pc);
      for (int j = 0; j < width; ++j) {
        K t = f * W(pr, j);
        W(i, j) = W(i, j) - t;
      }
    }
  }

  EchelonResult<K> out;
  out.R = Mat<K>(rows, acols, A.like());
  out.E = Mat<K>(rows, rows, A.like());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < acols; ++j) out.R(i, j) = W(i, j);
    for (int j = 0; j < rows; ++j) out.E(i, j) = W(i, acols + j);
  }
  out.pivots = std::move(pivots);
  out.rank = r;
  return out;
}

template <class K>
int rank_of(const Mat<K>& A) {
  // forward elimination only; cheaper than the full RREF
  Mat<K> W = A;
  const int rows = W.rows(), cols = W.cols();
  int r = 0;
  if constexpr (std::is_same_v<K, Rat>) {
    detail::scale_rows_integral(W);
    Rat prev(1);
    for (int col = 0; col < cols && r < rows; ++col) {
      int sel = -1;
      for (int i = r; i < rows; ++i)
        if (!k_is_zero(W(i, col))) { sel = i; break; }
      if (sel < 0) continue;
      if (sel != r) W.swap_rows(sel, r);
      const Rat pivot = W(r, col);
      for (int i = r + 1; i < rows; ++i) {
        const Rat f = W(i, col);
        for (int j = col; j < cols; ++j)
          W(i, j) = (pivot * W(i, j) - f * W(r, j)) / prev;
      }
      prev = pivot;
      ++r;
    }
  } else {
    for (int col = 0; col < cols && r < rows; ++col) {
      int sel = -1;
      for (int i = r; i < rows; ++i)
        if (!k_is_zero(W(i, col))) { sel = i; break; }
      if (sel < 0) continue;
      if (sel != r) W.swap_rows(sel, r);
      const K pinv = k_inv(W(r, col));
      for (int i = r + 1; i < rows; ++i) {
        if (k_is_zero(W(i, col))) continue;
        const K f = W(i, col) * pinv;
        for (int j = col; j < cols; ++j) {
          K t = f * W(r, j);
          W(i, j) = W(i, j) - t;
        }
      }
      ++r;
    }
  }
  return r;
}

/// Kernel of A as a list of vectors, one per free column, each with a 1 in
/// its free coordinate and zeros in the other free coordinates (a reduced
/// echelon presentation, deterministic).
template <class K>
std::vector<std::vector<K>> kernel_basis(const Mat<K>& A) {
  EchelonResult<K> ech = rref_with_transform(A);
  const int cols = A.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<K>> out;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    std::vector<K> v(static_cast<std::size_t>(cols), k_zero(A.like()));
    v[static_cast<std::size_t>(j)] = k_one(A.like());
    for (int r = 0; r < ech.rank; ++r)
      v[static_cast<std::size_t>(ech.pivots[static_cast<std::size_t>(r)])] =
          k_zero(A.like()) - ech.R(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

/// rank + kernel with the kernel vectors re-verified against A (M*v = 0).
template <class K>
std::pair<int, std::vector<std::vector<K>>> rank_kernel(const Mat<K>& A) {
  std::vector<std::vector<K>> kb = kernel_basis(A);
  for (const auto& v : kb) {
    std::vector<K> w = A.mul_vec(v);
    for (const K& x : w)
      if (!k_is_zero(x)) throw Error("internal: kernel vector fails M*v = 0");
  }
  int rank = A.cols() - static_cast<int>(kb.size());
  return {rank, std::move(kb)};
}

template <class K>
K det(const Mat<K>& A) {
  if (A.rows() != A.cols()) throw DomainError("determinant of non-square matrix");
  const int n = A.rows();
  if (n == 0) return k_one(A.like());
  Mat<K> W = A;
  K scale = k_one(A.like());  // accumulated row scalings to divide out
  bool neg = false;
  if constexpr (std::is_same_v<K, Rat>) {
    for (int i = 0; i < n; ++i) {
      mpz_class l(1);
      for (int j = 0; j < n; ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), W(i, j).get_den().get_mpz_t());
      if (l != 1) {
        Rat f(l);
        for (int j = 0; j < n; ++j) W(i, j) = W(i, j) * f;
        scale = scale * f;
      }
    }
    Rat prev(1);
    for (int col = 0; col < n; ++col) {
      int sel = -1;
      for (int i = col; i < n; ++i)
        if (!k_is_zero(W(i, col))) { sel = i; break; }
      if (sel < 0) return k_zero(A.like());
      if (sel != col) { W.swap_rows(sel, col); neg = !neg; }
      const Rat pivot = W(col, col);
      for (int i = col + 1; i < n; ++i) {
        const Rat f = W(i, col);
        for (int j = col; j < n; ++j)
          W(i, j) = (pivot * W(i, j) - f * W(col, j)) / prev;
      }
      prev = pivot;
    }
    Rat d = W(n - 1, n - 1) / scale;
    return neg ? Rat(-d) : d;
  } else {
    K d = k_one(A.like());
    for (int col = 0; col < n; ++col) {
      int sel = -1;
      for (int i = col; i < n; ++i)
        if (!k_is_zero(W(i, col))) { sel = i; break; }
      if (sel < 0) return k_zero(A.like());
      if (sel != col) { W.swap_rows(sel, col); neg = !neg; }
      d = d * W(col, col);
      const K pinv = k_inv(W(col, col));
      for (int i = col + 1; i < n; ++i) {
        if (k_is_zero(W(i, col))) continue;
        const K f = W(i, col) * pinv;
        for (int j = col; j < n; ++j) {
          K t = f * W(col, j);
          W(i, j) = W(i, j) - t;
        }
      }
    }
    if (neg) d = k_zero(A.like()) - d;
    return d;
  }
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& A) {
  if (A.rows() != A.cols()) throw DomainError("inverse of non-square matrix");
  EchelonResult<K> ech = rref_with_transform(A);
  if (ech.rank != A.rows()) return std::nullopt;
  return ech.E;
}

/// Invertible change of variables; the invariant det != 0 is checked once.
template <class K>
struct LinearChange {
  Mat<K> A;
  explicit LinearChange(Mat<K> m) : A(std::move(m)) {
    if (A.rows() != A.cols()) throw DomainError("LinearChange must be square");
    if (k_is_zero(det(A))) throw DomainError("LinearChange must be invertible");
  }
  LinearChange inverted() const {
    auto inv = inverse(A);
    return LinearChange(*inv);
  }
};

}  // namespace hessloci

#endif  // HESSLOCI_LINALG_HPP
