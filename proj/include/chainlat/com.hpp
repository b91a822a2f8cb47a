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

// Sign vectors, complexes of oriented matroids (COMs) and the poset of zero
// sets of their covectors.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chainlat/error.hpp"
#include "chainlat/matroid.hpp"
#include "chainlat/poset.hpp"

namespace chainlat {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign operator-(Sign s) {
  return static_cast<Sign>(-static_cast<std::int8_t>(s));
}

class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> entries) : e_(std::move(entries)) {}

  /// Reads "+", "-" and "0" characters, one per ground element.
  static SignVector parse(std::string_view s) {
    std::vector<Sign> v;
    for (char c : s) {
      switch (c) {
        case '+': v.push_back(Sign::Plus); break;
        case '-': v.push_back(Sign::Minus); break;
        case '0': v.push_back(Sign::Zero); break;
        default:
          throw Error(Errc::InvalidSign,
                      "'" + std::string(s) + "' contains '" + c + "'",
                      {std::string(s)});
      }
    }
    return SignVector(std::move(v));
  }

  static SignVector zero(std::size_t n) {
    return SignVector(std::vector<Sign>(n, Sign::Zero));
  }

  std::size_t size() const { return e_.size(); }
  Sign operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Sign>& entries() const { return e_; }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(),
                       [](Sign s) { return s == Sign::Zero; });
  }

  std::string str() const {
    std::string out;
    for (Sign s : e_) out += s == Sign::Plus ? '+' : s == Sign::Minus ? '-' : '0';
    return out;
  }

  friend SignVector operator-(SignVector x) {
    for (auto& s : x.e_) s = -s;
    return x;
  }
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<Sign> e_;
};

namespace detail {
inline void require_same_ground(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) {
    throw Error(Errc::GroundMismatch,
                "sign vectors " + x.str() + " and " + y.str() +
                    " live on different ground sets",
                {x.str(), y.str()});
  }
}
}  // namespace detail

/// (X o Y)_e = X_e if X_e != 0, else Y_e.
inline SignVector composition(const SignVector& x, const SignVector& y) {
  detail::require_same_ground(x, y);
  std::vector<Sign> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] != Sign::Zero ? x[i] : y[i];
  }
  return SignVector(std::move(out));
}

/// {e : X_e = -Y_e != 0}, as ground positions.
inline std::vector<std::size_t> separator(const SignVector& x,
                                          const SignVector& y) {
  detail::require_same_ground(x, y);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != Sign::Zero && x[i] == -y[i]) out.push_back(i);
  }
  return out;
}

inline std::vector<std::size_t> zero_set(const SignVector& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == Sign::Zero) out.push_back(i);
  }
  return out;
}

inline std::vector<std::size_t> support(const SignVector& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != Sign::Zero) out.push_back(i);
  }
  return out;
}

/// Coordinates of x at the given positions, in that order.
inline SignVector restrict_to(const SignVector& x,
                              const std::vector<std::size_t>& positions) {
  std::vector<Sign> out;
  for (auto i : positions) out.push_back(x[i]);
  return SignVector(std::move(out));
}

struct ComViolation {
  enum class Axiom { FaceSymmetry, StrongElimination };
  Axiom axiom;
  SignVector x, y;
  std::optional<std::size_t> element;  // strong elimination only
};

class CovectorSet {
 public:
  CovectorSet() = default;

  /// Parses and checks shape only: lengths, characters, duplicates. Axioms
  /// are checked by validate_com.
  static CovectorSet make(std::vector<std::string> ground,
                          const std::vector<std::string>& covectors) {
    CovectorSet c;
    c.ground_ = std::move(ground);
    for (const auto& s : covectors) {
      auto v = SignVector::parse(s);
      if (v.size() != c.ground_.size()) {
        throw Error(Errc::GroundMismatch,
                    "covector '" + s + "' has " + std::to_string(v.size()) +
                        " entries for a ground set of " +
                        std::to_string(c.ground_.size()),
                    {s});
      }
      if (!c.set_.insert(v).second) {
        throw Error(Errc::DuplicateCovector, "covector '" + s + "' repeated",
                    {s});
      }
      c.list_.push_back(std::move(v));
    }
    return c;
  }

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<SignVector>& covectors() const { return list_; }
  std::size_t size() const { return list_.size(); }
  bool contains(const SignVector& x) const { return set_.count(x) > 0; }
  bool validated() const { return validated_; }

  /// First failing (FS) or (SE) instance, if any.
  std::optional<ComViolation> find_violation() const {
    for (const auto& x : list_) {
      for (const auto& y : list_) {
        if (!contains(composition(x, -y))) {
          return ComViolation{ComViolation::Axiom::FaceSymmetry, x, y, {}};
        }
      }
    }
    for (const auto& x : list_) {
      for (const auto& y : list_) {
        const auto sep = separator(x, y);
        if (sep.empty()) continue;
        const auto xy = composition(x, y);
        std::vector<bool> in_sep(ground_.size(), false);
        for (auto e : sep) in_sep[e] = true;
        for (auto e : sep) {
          const bool found =
              std::any_of(list_.begin(), list_.end(), [&](const SignVector& z) {
                if (z[e] != Sign::Zero) return false;
                for (std::size_t f = 0; f < ground_.size(); ++f) {
                  if (!in_sep[f] && z[f] != xy[f]) return false;
                }
                return true;
              });
          if (!found) {
            return ComViolation{ComViolation::Axiom::StrongElimination, x, y, e};
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  friend CovectorSet validate_com(CovectorSet);

  std::vector<std::string> ground_;
  std::vector<SignVector> list_;
  std::set<SignVector> set_;
  bool validated_ = false;
};

/// Checks face symmetry and strong elimination; throws FSViolation or
/// SEViolation carrying the witness covectors (and element for SE).
inline CovectorSet validate_com(CovectorSet c) {
  if (auto v = c.find_violation()) {
    if (v->axiom == ComViolation::Axiom::FaceSymmetry) {
      throw Error(Errc::FSViolation,
                  v->x.str() + " o -" + v->y.str() + " is not a covector",
                  {v->x.str(), v->y.str()});
    }
    const auto& e = c.ground()[*v->element];
    throw Error(Errc::SEViolation,
                "no covector eliminates " + e + " between " + v->x.str() +
                    " and " + v->y.str(),
                {v->x.str(), v->y.str(), e});
  }
  c.validated_ = true;
  return c;
}

inline CovectorSet validate_com(std::vector<std::string> ground,
                                const std::vector<std::string>& covectors) {
  return validate_com(CovectorSet::make(std::move(ground), covectors));
}

/// A COM is an oriented matroid exactly when it contains the zero vector.
inline bool is_om(const CovectorSet& c) {
  if (!c.validated()) throw Error(Errc::NotValidated, "covectors not validated");
  return c.contains(SignVector::zero(c.ground().size()));
}

/// F(X) = {X o Y : Y in L}.
inline std::vector<SignVector> face(const CovectorSet& c, const SignVector& x) {
  if (!c.contains(x)) {
    throw Error(Errc::NotACovector, x.str() + " is not a covector", {x.str()});
  }
  std::set<SignVector> out;
  for (const auto& y : c.covectors()) out.insert(composition(x, y));
  return {out.begin(), out.end()};
}

/// Distinct zero sets ordered by inclusion. Each element's support for
/// weights is the zero set itself.
inline SetPoset zero_set_poset(const CovectorSet& c) {
  if (!c.validated()) {
    throw Error(Errc::NotValidated, "zero-set poset needs a validated COM");
  }
  if (c.ground().size() > kMaxGround) {
    throw Error(Errc::TooLarge, "ground set too large");
  }
  std::vector<Subset> sets;
  for (const auto& x : c.covectors()) {
    Subset s = 0;
    for (auto e : zero_set(x)) s |= Subset{1} << e;
    sets.push_back(s);
  }
  auto sp = detail::inclusion_poset(std::move(sets), c.ground());
  if (auto v = bouquet_violation(sp.poset)) {
    throw Error(Errc::BouquetCheckFailed, v->describe(), v->witness);
  }
  return sp;
}

}  // namespace chainlat
