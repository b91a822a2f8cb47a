// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sparse multivariate polynomials over arbitrary-precision integers.
//
// Terms are kept in graded-lexicographic order, largest first, with
// w1 > w2 > ... inside a degree. Equal polynomials therefore have identical
// term sequences and identical text forms.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chainlat/error.hpp"

namespace chainlat {

using BigInt = boost::multiprecision::cpp_int;
using Var = std::uint32_t;

class Monomial {
 public:
  using Power = std::pair<Var, std::uint32_t>;

  Monomial() = default;

  /// Accepts powers in any order; merges repeated variables and drops zero
  /// exponents.
  explicit Monomial(std::vector<Power> powers) {
    std::sort(powers.begin(), powers.end());
    for (const auto& [v, e] : powers) {
      if (e == 0) continue;
      if (!powers_.empty() && powers_.back().first == v) {
        powers_.back().second += e;
      } else {
        powers_.emplace_back(v, e);
      }
    }
  }

  static Monomial variable(Var v, std::uint32_t exponent = 1) {
    return Monomial({{v, exponent}});
  }

  const std::vector<Power>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& p : powers_) d += p.second;
    return d;
  }

  std::uint32_t exponent(Var v) const {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), Power{v, 0});
    return (it != powers_.end() && it->first == v) ? it->second : 0;
  }

  bool divides(const Monomial& other) const {
    std::size_t j = 0;
    for (const auto& [v, e] : powers_) {
      while (j < other.powers_.size() && other.powers_[j].first < v) ++j;
      if (j == other.powers_.size() || other.powers_[j].first != v ||
          other.powers_[j].second < e) {
        return false;
      }
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.powers_.reserve(a.powers_.size() + b.powers_.size());
    std::size_t i = 0, j = 0;
    while (i < a.powers_.size() || j < b.powers_.size()) {
      if (j == b.powers_.size() ||
          (i < a.powers_.size() && a.powers_[i].first < b.powers_[j].first)) {
        r.powers_.push_back(a.powers_[i++]);
      } else if (i == a.powers_.size() ||
                 b.powers_[j].first < a.powers_[i].first) {
        r.powers_.push_back(b.powers_[j++]);
      } else {
        r.powers_.emplace_back(a.powers_[i].first,
                               a.powers_[i].second + b.powers_[j].second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  // Precondition: b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    std::vector<Power> out;
    for (const auto& [v, e] : a.powers_) {
      const auto f = b.exponent(v);
      if (e > f) out.emplace_back(v, e - f);
    }
    Monomial r;
    r.powers_ = std::move(out);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lex: total degree first, then the exponent of the smallest
  /// variable index decides.
  friend bool grlex_less(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::size_t i = 0, j = 0;
    while (i < a.powers_.size() && j < b.powers_.size()) {
      const auto& [va, ea] = a.powers_[i];
      const auto& [vb, eb] = b.powers_[j];
      if (va == vb) {
        if (ea != eb) return ea < eb;
        ++i;
        ++j;
      } else {
        // The side holding the smaller variable is larger.
        return vb < va;
      }
    }
    return i == a.powers_.size() && j < b.powers_.size();
  }

 private:
  std::vector<Power> powers_;
};

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

/// Maps a variable index to its printed name; the default is "w<index>".
using VarNamer = std::function<std::string(Var)>;

inline std::string default_var_name(Var v) { return "w" + std::to_string(v); }

class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, GrlexDescending>;

  Polynomial() = default;
  Polynomial(long long c) { add_term(Monomial{}, BigInt(c)); }  // NOLINT
  Polynomial(const BigInt& c) { add_term(Monomial{}, c); }      // NOLINT

  static Polynomial zero() { return {}; }
  static Polynomial one() { return Polynomial(1); }
  static Polynomial variable(Var v) {
    Polynomial p;
    p.add_term(Monomial::variable(v), BigInt(1));
    return p;
  }
  static Polynomial term(const Monomial& m, const BigInt& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Precondition: nonzero.
  const std::pair<const Monomial, BigInt>& leading_term() const {
    return *terms_.begin();
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  std::vector<Var> variables() const {
    std::vector<Var> vars;
    for (const auto& [m, c] : terms_) {
      for (const auto& [v, e] : m.powers()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
  }

  void add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) {
    return p += q;
  }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) {
    return p -= q;
  }
  friend Polynomial operator-(Polynomial p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    }
    return r;
  }
  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.terms_ == q.terms_;
  }

  /// Canonical text, e.g. "w1^2*w2 + 3*w5". The zero polynomial is "0".
  std::string to_string(const VarNamer& name = default_var_name) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      const BigInt mag = negative ? BigInt(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (const auto& [v, e] : m.powers()) {
        if (!mono.empty()) mono += "*";
        mono += name(v);
        if (e != 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        out += mag.str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  TermMap terms_;
};

/// Returns s with p == q * s. Runs leading-term division and throws
/// NotDivisible as soon as a leading term cannot be cancelled, which is
/// exactly when the remainder would be nonzero.
inline Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw Error(Errc::DivisionByZero, "exact_div by zero");
  Polynomial rem = p;
  Polynomial quot;
  const auto& [lm_q, lc_q] = q.leading_term();
  while (!rem.is_zero()) {
    const auto& [lm_r, lc_r] = rem.leading_term();
    if (!lm_q.divides(lm_r) || lc_r % lc_q != 0) {
      throw Error(Errc::NotDivisible,
                  q.to_string() + " does not divide " + p.to_string());
    }
    const auto t = Polynomial::term(lm_r / lm_q, lc_r / lc_q);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

inline Polynomial pow(const Polynomial& p, std::uint64_t k) {
  Polynomial result = Polynomial::one();
  Polynomial base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

inline Polynomial power_product(
    const std::vector<std::pair<Polynomial, std::uint64_t>>& factors) {
  Polynomial result = Polynomial::one();
  for (const auto& [f, k] : factors) {
    if (k > 0) result *= pow(f, k);
  }
  return result;
}

/// Simultaneous substitution; variables absent from the map are kept.
inline Polynomial substitute(const Polynomial& p,
                             const std::map<Var, Polynomial>& images) {
  Polynomial result;
  for (const auto& [m, c] : p.terms()) {
    Polynomial t(c);
    Monomial kept;
    for (const auto& [v, e] : m.powers()) {
      auto it = images.find(v);
      if (it == images.end()) {
        kept = kept * Monomial::variable(v, e);
      } else {
        t *= pow(it->second, e);
      }
    }
    result += t * Polynomial::term(kept, BigInt(1));
  }
  return result;
}

// Modular arithmetic for primes below 2^63.
namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul(r, a, m);
    a = mul(a, a, m);
    e >>= 1;
  }
  return r;
}
/// Fermat inverse; m must be prime and a nonzero mod m.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t m) {
  return pow(a, m - 2, m);
}
inline std::uint64_t reduce(const BigInt& c, std::uint64_t m) {
  BigInt r = c % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

}  // namespace modp

/// Value of p at the assignment, reduced modulo a prime. Every variable of
/// p must be assigned.
inline std::uint64_t eval_mod(const Polynomial& p,
                              const std::map<Var, BigInt>& assignment,
                              std::uint64_t modulus) {
  std::map<Var, std::uint64_t> reduced;
  for (const auto& [v, x] : assignment) reduced[v] = modp::reduce(x, modulus);
  std::uint64_t acc = 0;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t t = modp::reduce(c, modulus);
    for (const auto& [v, e] : m.powers()) {
      auto it = reduced.find(v);
      if (it == reduced.end()) {
        throw Error(Errc::MissingAssignment,
                    "no value for " + default_var_name(v));
      }
      t = modp::mul(t, modp::pow(it->second, e, modulus), modulus);
    }
    acc = modp::add(acc, t, modulus);
  }
  return acc;
}

namespace detail {

// Recursive-descent reader for the canonical text form and for factored
// products such as "w1^2*(w2 + w3)".
class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      auto t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      base = chainlat::pow(base, number().convert_to<std::uint64_t>());
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto p = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == 'w') {
      ++pos_;
      return Polynomial::variable(number().convert_to<Var>());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(number());
    fail("unexpected character");
  }

  BigInt number() {
    const auto start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, "polynomial '" + std::string(s_) +
                                      "' at offset " + std::to_string(pos_) +
                                      ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads polynomials written with variables w<index>.
inline Polynomial parse_polynomial(std::string_view text) {
  return detail::PolyParser(text).parse();
}

}  // namespace chainlat
