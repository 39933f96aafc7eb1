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
 * @file fp_fast.hpp
 * @brief Raw uint64 mod-p kernels for the hot paths: Barrett reduction,
 *        dense rank, and small-matrix rank used by projective enumeration.
 *        Requires p < 2^31.
 */

#ifndef HESSLOCI_FP_FAST_HPP
#define HESSLOCI_FP_FAST_HPP

#include <cstdint>
#include <vector>

#include "hessloci/scalar.hpp"

namespace hessloci {

struct Barrett {
  std::uint64_t p;
  std::uint64_t magic;  // floor(2^64 / p)

  explicit Barrett(std::uint64_t prime) : p(prime) {
    if (p < 2 || p >= (std::uint64_t{1} << 31))
      throw DomainError("fast mod-p path needs 2 <= p < 2^31");
    magic = static_cast<std::uint64_t>(~std::uint64_t{0} / p);
  }

  // x mod p for any 64-bit x
  std::uint64_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * magic) >> 64);
    std::uint64_t r = x - q * p;
    if (r >= p) r -= p;
    if (r >= p) r -= p;
    return r;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }

  std::uint64_t pow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

/// Rank of a dense matrix mod p; destroys M. Entries must be reduced.
inline int fp_rank_dense(std::vector<std::vector<std::uint64_t>>& M, const Barrett& bp) {
  const std::size_t rows = M.size();
  if (rows == 0) return 0;
  const std::size_t cols = M[0].size();
  const std::uint64_t p = bp.p;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (M[i][col] != 0) { sel = i; break; }
    if (sel == rows) continue;
    if (sel != r) M[sel].swap(M[r]);
    const std::uint64_t pinv = bp.inv(M[r][col]);
    // normalize pivot row once, then a single mulmod per eliminated entry
    for (std::size_t j = col; j < cols; ++j) M[r][j] = bp.mul(M[r][j], pinv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = M[i][col];
      if (f == 0) continue;
      const std::uint64_t fneg = p - f;
      const std::uint64_t* src = M[r].data();
      std::uint64_t* dst = M[i].data();
      for (std::size_t j = col; j < cols; ++j)
        dst[j] = bp.reduce(dst[j] + fneg * src[j]);
      dst[col] = 0;
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Rank of a small n x n matrix mod p held row-major in `a` (destroyed).
/// Used per enumeration point; n <= 8.
inline int fp_rank_small(std::uint64_t* a, int n, const Barrett& bp) {
  const std::uint64_t p = bp.p;
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int sel = -1;
    for (int i = r; i < n; ++i)
      if (a[i * n + col] != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = col; j < n; ++j) std::swap(a[sel * n + j], a[r * n + j]);
    const std::uint64_t piv = a[r * n + col];
    for (int i = r + 1; i < n; ++i) {
      const std::uint64_t f = a[i * n + col];
      if (f == 0) continue;
      // division-free: row_i = piv * row_i - f * row_r
      const std::uint64_t fneg = p - f;
      for (int j = col; j < n; ++j)
        a[i * n + j] = bp.reduce(bp.mul(piv, a[i * n + j]) + fneg * a[r * n + j]);
    }
    ++r;
  }
  return r;
}

}  // namespace hessloci

#endif  // HESSLOCI_FP_FAST_HPP
