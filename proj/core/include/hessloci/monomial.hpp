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
 * @file monomial.hpp
 * @brief Dense exponent vectors (nvars <= 8) with graded-lex ordering and
 *        monomial basis enumeration for graded slices S^m.
 */

#ifndef HESSLOCI_MONOMIAL_HPP
#define HESSLOCI_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "hessloci/scalar.hpp"

namespace hessloci {

inline constexpr int kMaxVars = 8;

struct Expo {
  std::array<std::uint8_t, kMaxVars> e{};
  int n = 0;  // number of variables

  static Expo zero(int nvars) {
    check_nvars(nvars);
    Expo x;
    x.n = nvars;
    return x;
  }

  static Expo unit(int nvars, int i, int k = 1) {
    Expo x = zero(nvars);
    if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
    x.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k);
    return x;
  }

  static void check_nvars(int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
      throw DomainError("nvars must be between 1 and " + std::to_string(kMaxVars));
  }

  int deg() const {
    int d = 0;
    for (int i = 0; i < n; ++i) d += e[static_cast<std::size_t>(i)];
    return d;
  }

  int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  Expo plus(const Expo& o) const {
    require_same(o);
    Expo r = *this;
    for (int i = 0; i < n; ++i) {
      int s = r.e[static_cast<std::size_t>(i)] + o.e[static_cast<std::size_t>(i)];
      if (s > 255) throw DomainError("exponent overflow");
      r.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s);
    }
    return r;
  }

  bool divides(const Expo& o) const {
    require_same(o);
    for (int i = 0; i < n; ++i)
      if (e[static_cast<std::size_t>(i)] > o.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  Expo minus(const Expo& o) const {
    require_same(o);
    Expo r = *this;
    for (int i = 0; i < n; ++i) {
      if (o.e[static_cast<std::size_t>(i)] > r.e[static_cast<std::size_t>(i)])
        throw DomainError("negative exponent in monomial quotient");
      r.e[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(r.e[static_cast<std::size_t>(i)] - o.e[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  void require_same(const Expo& o) const {
    if (n != o.n) throw DomainError("nvars mismatch between monomials");
  }

  friend bool operator==(const Expo& a, const Expo& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.e[static_cast<std::size_t>(i)] != b.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }
};

/// Map order: a term map sorted with this comparator iterates leading term
/// first (descending graded-lex, x0 > x1 > ...).
struct GrlexOrder {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = a.deg(), db = b.deg();
    if (da != db) return da > db;
    for (int i = 0; i < a.n && i < b.n; ++i) {
      if (a.e[static_cast<std::size_t>(i)] != b.e[static_cast<std::size_t>(i)])
        return a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)];
    }
    return a.n > b.n;
  }
};

/// All monomials of S^deg in descending graded-lex order.
inline std::vector<Expo> monomials_of(int nvars, int deg) {
  Expo::check_nvars(nvars);
  if (deg < 0) return {};
  std::vector<Expo> out;
  Expo cur = Expo::zero(nvars);
  // recursive descent: exponent of the current variable from deg down to 0
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(rem);
      out.push_back(cur);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k);
      self(self, var + 1, rem - k);
    }
  };
  rec(rec, 0, deg);
  return out;
}

inline long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// dim S^deg for nvars variables.
inline long long monomial_count(int nvars, int deg) {
  if (deg < 0) return 0;
  return binom(deg + nvars - 1, nvars - 1);
}

}  // namespace hessloci

#endif  // HESSLOCI_MONOMIAL_HPP
