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
 * @file rng.hpp
 * @brief Seeded, reproducible draws. Random coefficients are small integers
 *        in [-9, 9] \ {0}; every randomized routine takes an explicit seed
 *        and reports it, so "general element" is a checked, replayable event.
 */

#ifndef HESSLOCI_RNG_HPP
#define HESSLOCI_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hessloci/monomial.hpp"
#include "hessloci/multipoly.hpp"

namespace hessloci {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [lo, hi].
  long long range(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng_);
  }

  /// Small nonzero coefficient in [-9, 9] \ {0}.
  long long small_nonzero() {
    long long v = range(1, 18);
    return v <= 9 ? v : 9 - v;  // 10..18 -> -1..-9
  }

  /// Small coefficient in [-9, 9], zero allowed.
  long long small_any() { return range(-9, 9); }

  /// Derive an independent stream (for per-task seeding).
  std::uint64_t fork() { return eng_(); }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Dense random homogeneous polynomial with small integer coefficients,
/// any of which may vanish, except that the result is never zero.
template <class K>
MultiPoly<K> random_form(Rng& rng, int nvars, int degree, const K& like) {
  MultiPoly<K> f(nvars, like);
  const std::vector<Expo> mons = monomials_of(nvars, degree);
  while (f.is_zero()) {
    for (const Expo& m : mons) f.add_term(m, k_int(rng.small_any(), like));
  }
  return f;
}

template <class K>
std::vector<K> random_point_coords(Rng& rng, int nvars, const K& like) {
  std::vector<K> v;
  v.reserve(static_cast<std::size_t>(nvars));
  bool nonzero = false;
  for (int i = 0; i < nvars; ++i) {
    const long long c = rng.small_any();
    nonzero = nonzero || c != 0;
    v.push_back(k_int(c, like));
  }
  if (!nonzero) v[0] = k_one(like);
  return v;
}

}  // namespace hessloci

#endif  // HESSLOCI_RNG_HPP
