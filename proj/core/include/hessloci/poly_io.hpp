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
 * @file poly_io.hpp
 * @brief Text grammar for polynomials.
 *
 * Grammar: terms joined by '+'/'-'; term = [coefficient]['*']factors;
 * coefficient = integer or p/q; factor = xi, xi^e, or a parenthesized
 * linear form raised to a power, which is expanded on parse. Whitespace is
 * insignificant. Printing emits descending graded-lex terms and
 * round-trips through the parser.
 */

#ifndef HESSLOCI_POLY_IO_HPP
#define HESSLOCI_POLY_IO_HPP

#include <cctype>
#include <sstream>
#include <string>

#include "hessloci/multipoly.hpp"

namespace hessloci {

namespace detail {

template <class K>
class PolyParser {
 public:
  PolyParser(const std::string& text, int nvars, const K& like)
      : s_(text), nvars_(nvars), like_(like) {}

  MultiPoly<K> parse() {
    MultiPoly<K> r = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return r;
  }

 private:
  MultiPoly<K> parse_sum() {
    MultiPoly<K> acc(nvars_, like_);
    bool first = true;
    int degree = -1;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (get() == '-') sign = -1;
      } else if (!first) {
        break;
      }
      skip_ws();
      const std::size_t term_pos = pos_;
      MultiPoly<K> t = parse_term();
      if (sign < 0) t = -t;
      if (!t.is_zero()) {
        if (degree >= 0 && t.degree() != degree)
          throw ParseError("inhomogeneous input", term_pos);
        if (degree < 0) degree = t.degree();
      }
      if (acc.is_zero()) acc = std::move(t);
      else if (!t.is_zero()) acc = acc + t;
      first = false;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
    }
    if (first) throw ParseError("empty polynomial", pos_);
    return acc;
  }

  MultiPoly<K> parse_term() {
    bool have_coeff = false;
    K coeff = k_one(like_);
    if (std::isdigit(peek())) {
      coeff = parse_coefficient();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') { get(); skip_ws(); }
    }
    MultiPoly<K> mono = MultiPoly<K>::constant(nvars_, coeff);
    bool have_factor = false;
    while (true) {
      skip_ws();
      const char c = peek();
      if (c == 'x') {
        mono = mono * parse_var_factor();
        have_factor = true;
      } else if (c == '(') {
        mono = mono * parse_paren_factor();
        have_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (peek() == '*') { get(); skip_ws(); }
    }
    if (!have_coeff && !have_factor)
      throw ParseError("expected a coefficient or a monomial", pos_);
    return mono;
  }

  K parse_coefficient() {
    long long num = parse_integer();
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      const std::size_t dpos = pos_;
      long long den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", dpos);
      return k_int(num, like_) * k_inv(k_int(den, like_));
    }
    return k_int(num, like_);
  }

  long long parse_integer() {
    if (!std::isdigit(peek())) throw ParseError("expected an integer", pos_);
    long long v = 0;
    while (std::isdigit(peek())) {
      v = v * 10 + (get() - '0');
      if (v > (1LL << 60)) throw ParseError("integer literal too large", pos_);
    }
    return v;
  }

  MultiPoly<K> parse_var_factor() {
    const std::size_t vpos = pos_;
    get();  // 'x'
    if (!std::isdigit(peek())) throw ParseError("expected a variable index", pos_);
    long long idx = parse_integer();
    if (idx >= nvars_)
      throw ParseError("variable index out of range", vpos);
    int e = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      e = static_cast<int>(parse_integer());
    }
    if (e > 200) throw ParseError("exponent too large", vpos);
    return MultiPoly<K>::from_term(
        nvars_, Expo::unit(nvars_, static_cast<int>(idx), e), k_one(like_));
  }

  MultiPoly<K> parse_paren_factor() {
    const std::size_t ppos = pos_;
    get();  // '('
    MultiPoly<K> inner = parse_sum();
    skip_ws();
    if (peek() != ')') throw ParseError("expected ')'", pos_);
    get();
    if (inner.is_zero() || inner.degree() != 1)
      throw ParseError("parenthesized subexpression must be a linear form", ppos);
    unsigned e = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      long long k = parse_integer();
      if (k > 60) throw ParseError("exponent too large", ppos);
      e = static_cast<unsigned>(k);
    }
    return inner.pow(e);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int nvars_;
  K like_;
};

}  // namespace detail

template <class K>
MultiPoly<K> poly_parse(const std::string& text, int nvars, const K& like) {
  Expo::check_nvars(nvars);
  return detail::PolyParser<K>(text, nvars, like).parse();
}

inline MultiPoly<Rat> poly_parse_q(const std::string& text, int nvars) {
  return poly_parse<Rat>(text, nvars, Rat(0));
}

namespace detail {

inline std::string monomial_str(const Expo& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.n; ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << i;
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  return os.str();
}

inline bool coeff_negative(const Rat& c) { return sgn(c) < 0; }
inline bool coeff_negative(const Fp&) { return false; }
inline Rat coeff_abs(const Rat& c) { return sgn(c) < 0 ? Rat(-c) : c; }
inline Fp coeff_abs(const Fp& c) { return c; }

}  // namespace detail

template <class K>
std::string poly_print(const MultiPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = detail::coeff_negative(c);
    const K a = detail::coeff_abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const std::string ms = detail::monomial_str(m);
    const bool unit = (a == k_one(p.like()));
    if (ms.empty()) {
      os << k_str(a);
    } else if (unit) {
      os << ms;
    } else {
      os << k_str(a) << "*" << ms;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hessloci

#endif  // HESSLOCI_POLY_IO_HPP
