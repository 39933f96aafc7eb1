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
 * @file scalar.hpp
 * @brief Exact scalar fields: arbitrary-precision rationals (GMP) and
 *        prime residue fields with a runtime modulus.
 *
 * Every algebraic routine in the library is templated over a field type K,
 * instantiated with Rat (= mpq_class, always canonical: lowest terms,
 * positive denominator) or Fp (residue in [0,p) carrying its prime).
 * A default-constructed Fp is the zero of an unspecified field; it combines
 * with any modulus, so that K{} is a universal additive identity.
 */

#ifndef HESSLOCI_SCALAR_HPP
#define HESSLOCI_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hessloci {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a precondition of an operation (bad index, singular
/// matrix, degenerate family parameters, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text-grammar error; carries the byte offset where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw DomainError("malformed rational: '" + s + "'");
  if (sgn(q.get_den()) == 0) throw DomainError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

class Fp {
 public:
  Fp() = default;  // unattached zero
  Fp(std::uint64_t v, std::uint64_t p) : p_(p) {
    if (p < 2) throw DomainError("Fp modulus must be >= 2");
    v_ = v % p;
  }

  static Fp from_int(long long x, std::uint64_t p) {
    if (p < 2) throw DomainError("Fp modulus must be >= 2");
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t prime() const { return p_; }
  bool attached() const { return p_ != 0; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const {
    if (v_ == 0) return *this;
    return Fp(p_ - v_, p_);
  }

  Fp inv() const {
    if (v_ == 0) throw DomainError("inverse of zero in Fp");
    return pow(p_ - 2);
  }

  Fp pow(std::uint64_t e) const {
    Fp r(1 % p_, p_), b = *this;
    // p_ >= 2 guaranteed: v_ != 0 implies attached
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  friend Fp operator+(const Fp& x, const Fp& y) {
    std::uint64_t p = join(x.p_, y.p_);
    if (p == 0) return Fp();
    std::uint64_t s = x.v_ + y.v_;
    if (s >= p) s -= p;
    return Fp(s, p);
  }
  friend Fp operator-(const Fp& x, const Fp& y) { return x + (-y); }
  friend Fp operator*(const Fp& x, const Fp& y) {
    std::uint64_t p = join(x.p_, y.p_);
    if (p == 0) return Fp();
    unsigned __int128 t =
        static_cast<unsigned __int128>(x.v_) * static_cast<unsigned __int128>(y.v_);
    return Fp(static_cast<std::uint64_t>(t % p), p);
  }
  friend Fp operator/(const Fp& x, const Fp& y) { return x * y.inv(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& x, const Fp& y) {
    join(x.p_, y.p_);  // reject mixed moduli
    return x.v_ == y.v_;
  }
  friend bool operator!=(const Fp& x, const Fp& y) { return !(x == y); }

 private:
  static std::uint64_t join(std::uint64_t a, std::uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw DomainError("Fp arithmetic across different moduli");
    return a;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

/// Reduce a rational mod p. Throws if the denominator vanishes mod p.
/// Primality of p is the caller's configuration-time responsibility.
inline Fp reduce_mod(const Rat& q, std::uint64_t p) {
  // mpz_fdiv_ui floors, so it already returns the representative in [0, p)
  std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (den == 0) throw DomainError("denominator vanishes mod p");
  std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  return Fp(num, p) / Fp(den, p);
}

// ---------------------------------------------------------------------------
// Generic field access used by the templated layers
// ---------------------------------------------------------------------------

template <class K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static bool is_zero(const Rat& x) { return sgn(x) == 0; }
  static Rat zero(const Rat&) { return Rat(0); }
  static Rat one(const Rat&) { return Rat(1); }
  static Rat from_int(long long n, const Rat&) {
    Rat r;
    mpq_set_si(r.get_mpq_t(), static_cast<long>(n), 1);
    return r;
  }
  static Rat inv(const Rat& x) {
    if (is_zero(x)) throw DomainError("inverse of zero");
    return Rat(1) / x;
  }
  static std::string str(const Rat& x) { return x.get_str(); }
  static const char* name() { return "q"; }
};

template <>
struct FieldOps<Fp> {
  static bool is_zero(const Fp& x) { return x.is_zero(); }
  static Fp zero(const Fp& like) {
    return like.attached() ? Fp(0, like.prime()) : Fp();
  }
  static Fp one(const Fp& like) {
    if (!like.attached()) throw DomainError("Fp one() needs a modulus");
    return Fp(1, like.prime());
  }
  static Fp from_int(long long n, const Fp& like) {
    if (!like.attached()) throw DomainError("Fp from_int() needs a modulus");
    return Fp::from_int(n, like.prime());
  }
  static Fp inv(const Fp& x) { return x.inv(); }
  static std::string str(const Fp& x) { return std::to_string(x.value()); }
  static const char* name() { return "fp"; }
};

template <class K>
bool k_is_zero(const K& x) {
  return FieldOps<K>::is_zero(x);
}
template <class K>
K k_zero(const K& like) {
  return FieldOps<K>::zero(like);
}
template <class K>
K k_one(const K& like) {
  return FieldOps<K>::one(like);
}
template <class K>
K k_int(long long n, const K& like) {
  return FieldOps<K>::from_int(n, like);
}
template <class K>
K k_inv(const K& x) {
  return FieldOps<K>::inv(x);
}
template <class K>
std::string k_str(const K& x) {
  return FieldOps<K>::str(x);
}
template <class K>
K k_pow(const K& base, unsigned e, const K& like) {
  K r = k_one(like);
  K b = base;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

}  // namespace hessloci

#endif  // HESSLOCI_SCALAR_HPP
