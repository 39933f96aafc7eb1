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
 * @file sixsets.hpp
 * @brief Index bookkeeping over {0..5}: sorted pairs, triples, quadruples
 *        and complements. The rank-6 configuration (15 points, 20 lines,
 *        15 planes) lives entirely on this combinatorics.
 */

#ifndef HESSLOCI_SIXSETS_HPP
#define HESSLOCI_SIXSETS_HPP

#include <algorithm>
#include <array>
#include <vector>

#include "hessloci/scalar.hpp"

namespace hessloci {
namespace sixsets {

template <std::size_t T>
std::vector<std::array<int, T>> subsets() {
  static_assert(T >= 1 && T <= 6);
  std::vector<std::array<int, T>> out;
  std::array<int, T> c{};
  for (std::size_t i = 0; i < T; ++i) c[i] = static_cast<int>(i);
  while (true) {
    out.push_back(c);
    int i = static_cast<int>(T) - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == 6 - static_cast<int>(T) + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < T; ++j)
      c[j] = c[j - 1] + 1;
  }
  return out;
}

inline const std::vector<std::array<int, 2>>& pairs() {
  static const auto v = subsets<2>();
  return v;
}
inline const std::vector<std::array<int, 3>>& triples() {
  static const auto v = subsets<3>();
  return v;
}
inline const std::vector<std::array<int, 4>>& quads() {
  static const auto v = subsets<4>();
  return v;
}

template <std::size_t T>
std::array<int, 6 - T> complement(const std::array<int, T>& s) {
  std::array<bool, 6> in{};
  for (int x : s) {
    if (x < 0 || x > 5) throw DomainError("sixsets: index out of range");
    in[static_cast<std::size_t>(x)] = true;
  }
  std::array<int, 6 - T> out{};
  std::size_t j = 0;
  for (int x = 0; x < 6; ++x)
    if (!in[static_cast<std::size_t>(x)]) out[j++] = x;
  if (j != 6 - T) throw DomainError("sixsets: repeated index");
  return out;
}

template <std::size_t A, std::size_t B>
bool subset_of(const std::array<int, A>& small, const std::array<int, B>& big) {
  for (int x : small)
    if (std::find(big.begin(), big.end(), x) == big.end()) return false;
  return true;
}

}  // namespace sixsets
}  // namespace hessloci

#endif  // HESSLOCI_SIXSETS_HPP
