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

// Matroids given by their independent sets, their lattices of flats, and
// bouquets of matroids glued along roofs.
//
// Subsets of the ground set are bitmasks over ground positions, so ground
// sets are limited to kMaxGround elements.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chainlat/chains.hpp"
#include "chainlat/error.hpp"
#include "chainlat/poset.hpp"

namespace chainlat {

using Subset = std::uint32_t;
inline constexpr std::size_t kMaxGround = 20;

inline std::vector<std::size_t> subset_members(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s; ++i, s >>= 1) {
    if (s & 1) out.push_back(i);
  }
  return out;
}

inline int subset_size(Subset s) { return std::popcount(s); }

/// Orders subsets by size, then by their sorted member lists.
inline bool subset_less(Subset a, Subset b) {
  if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
  return subset_members(a) < subset_members(b);
}

inline std::string subset_name(Subset s, const std::vector<std::string>& ground) {
  std::string out = "{";
  bool first = true;
  for (auto i : subset_members(s)) {
    if (!first) out += ",";
    out += ground[i];
    first = false;
  }
  return out + "}";
}

namespace detail {

inline std::unordered_map<std::string, std::size_t> ground_index(
    const std::vector<std::string>& ground) {
  if (ground.size() > kMaxGround) {
    throw Error(Errc::TooLarge, "ground sets are limited to " +
                                    std::to_string(kMaxGround) + " elements");
  }
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!idx.emplace(ground[i], i).second) {
      throw Error(Errc::DuplicateElement,
                  "ground element '" + ground[i] + "' listed twice",
                  {ground[i]});
    }
  }
  return idx;
}

inline Subset to_subset(const std::vector<std::string>& ids,
                        const std::unordered_map<std::string, std::size_t>& idx) {
  Subset s = 0;
  for (const auto& id : ids) {
    auto it = idx.find(id);
    if (it == idx.end()) {
      throw Error(Errc::UnknownElement, "unknown ground element '" + id + "'",
                  {id});
    }
    s |= Subset{1} << it->second;
  }
  return s;
}

}  // namespace detail

class Matroid {
 public:
  Matroid() = default;

  /// Validates the three independence axioms and precomputes ranks.
  static Matroid build(std::vector<std::string> ground,
                       const std::vector<std::vector<std::string>>& independents) {
    const auto idx = detail::ground_index(ground);
    std::set<Subset> sets;
    for (const auto& ids : independents) sets.insert(detail::to_subset(ids, idx));
    return from_subsets(std::move(ground), sets);
  }

  static Matroid from_subsets(std::vector<std::string> ground,
                              const std::set<Subset>& sets) {
    detail::ground_index(ground);
    Matroid m;
    m.ground_ = std::move(ground);
    m.independent_.assign(Subset{1} << m.ground_.size(), 0);
    for (Subset s : sets) {
      if (s >> m.ground_.size()) {
        throw Error(Errc::UnknownElement, "subset outside the ground set");
      }
      m.independent_[s] = 1;
    }
    m.validate(sets);
    m.compute_ranks();
    return m;
  }

  const std::vector<std::string>& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  Subset full() const { return (Subset{1} << ground_.size()) - 1; }

  bool is_independent(Subset s) const { return independent_.at(s) != 0; }

  std::vector<Subset> independents() const {
    std::vector<Subset> out;
    for (Subset s = 0; s < independent_.size(); ++s) {
      if (independent_[s]) out.push_back(s);
    }
    return out;
  }

  Subset subset(const std::vector<std::string>& ids) const {
    return detail::to_subset(ids, detail::ground_index(ground_));
  }
  std::string name(Subset s) const { return subset_name(s, ground_); }

  /// Size of a largest independent subset of s.
  int rank(Subset s) const { return rank_.at(s); }
  int rank() const { return rank(full()); }

  Subset closure(Subset s) const {
    const int r = rank(s);
    Subset c = s;
    for (std::size_t e = 0; e < ground_.size(); ++e) {
      const Subset bit = Subset{1} << e;
      if (!(s & bit) && rank(s | bit) == r) c |= bit;
    }
    return c;
  }

  bool is_flat(Subset s) const { return closure(s) == s; }

  /// All flats, ordered by rank and then by member list.
  std::vector<Subset> flats() const {
    std::vector<Subset> out;
    for (Subset s = 0; s <= full(); ++s) {
      if (is_flat(s)) out.push_back(s);
      if (s == full()) break;
    }
    std::sort(out.begin(), out.end(), [&](Subset a, Subset b) {
      if (rank(a) != rank(b)) return rank(a) < rank(b);
      return subset_members(a) < subset_members(b);
    });
    return out;
  }

  /// Minimal dependent sets.
  std::vector<Subset> circuits() const {
    std::vector<Subset> out;
    for (Subset s = 0; s <= full(); ++s) {
      if (!is_independent(s)) {
        bool minimal = true;
        for (auto e : subset_members(s)) {
          if (!is_independent(s & ~(Subset{1} << e))) minimal = false;
        }
        if (minimal) out.push_back(s);
      }
      if (s == full()) break;
    }
    return out;
  }

  /// No loops and no parallel pairs.
  bool is_simple() const {
    for (Subset c : circuits()) {
      if (subset_size(c) <= 2) return false;
    }
    return true;
  }

 private:
  void validate(const std::set<Subset>& sets) const {
    if (!sets.count(0)) {
      throw Error(Errc::EmptySetMissing, "axiom (1): the empty set is missing");
    }
    for (Subset s : sets) {
      for (auto e : subset_members(s)) {
        const Subset t = s & ~(Subset{1} << e);
        if (!independent_[t]) {
          throw Error(Errc::NotDownwardClosed,
                      "axiom (2): " + name(t) + " is a subset of independent " +
                          name(s),
                      {name(s), name(t)});
        }
      }
    }
    // Given downward closure, augmentation for |I2| = |I1| + 1 implies it
    // for all size gaps.
    for (Subset a : sets) {
      for (Subset b : sets) {
        if (subset_size(b) != subset_size(a) + 1) continue;
        bool ok = false;
        for (auto e : subset_members(b & ~a)) {
          if (independent_[a | (Subset{1} << e)]) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          throw Error(Errc::ExchangeFails,
                      "axiom (3): " + name(a) + " cannot be augmented from " +
                          name(b),
                      {name(a), name(b)});
        }
      }
    }
  }

  void compute_ranks() {
    rank_.assign(independent_.size(), 0);
    for (Subset s = 0; s < independent_.size(); ++s) {
      if (independent_[s]) {
        rank_[s] = subset_size(s);
        continue;
      }
      int r = 0;
      for (auto e : subset_members(s)) {
        r = std::max(r, static_cast<int>(rank_[s & ~(Subset{1} << e)]));
      }
      rank_[s] = static_cast<std::uint8_t>(r);
    }
  }

  std::vector<std::string> ground_;
  std::vector<std::uint8_t> independent_;
  std::vector<std::uint8_t> rank_;
};

struct Simplification {
  Matroid matroid;
  /// For each original element, its representative's position in the
  /// simplified ground set; nullopt for loops.
  std::vector<std::optional<std::size_t>> representative;
};

/// Deletes loops and keeps the first element of each parallel class.
inline Simplification simplify(const Matroid& m) {
  const std::size_t n = m.ground_size();
  std::vector<std::optional<std::size_t>> rep_of(n);  // original position
  std::vector<std::size_t> kept;
  for (std::size_t e = 0; e < n; ++e) {
    const Subset be = Subset{1} << e;
    if (!m.is_independent(be)) continue;
    std::optional<std::size_t> parallel;
    for (std::size_t f : kept) {
      if (!m.is_independent(be | (Subset{1} << f))) {
        parallel = f;
        break;
      }
    }
    if (parallel) {
      rep_of[e] = *parallel;
    } else {
      rep_of[e] = e;
      kept.push_back(e);
    }
  }
  std::vector<std::string> ground;
  std::vector<std::size_t> new_pos(n);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    ground.push_back(m.ground()[kept[i]]);
    new_pos[kept[i]] = i;
  }
  Subset kept_mask = 0;
  for (auto e : kept) kept_mask |= Subset{1} << e;
  std::set<Subset> sets;
  for (Subset s : m.independents()) {
    if (s & ~kept_mask) continue;
    Subset t = 0;
    for (auto e : subset_members(s)) t |= Subset{1} << new_pos[e];
    sets.insert(t);
  }
  Simplification out{Matroid::from_subsets(std::move(ground), sets), {}};
  for (std::size_t e = 0; e < n; ++e) {
    if (rep_of[e]) out.representative.push_back(new_pos[*rep_of[e]]);
    else out.representative.push_back(std::nullopt);
  }
  return out;
}

/// A poset whose elements are subsets of a ground set, with the subset of each
/// element and the ground variables it carries (position + 1).
struct SetPoset {
  Poset poset;
  std::vector<Subset> sets;
  std::vector<std::string> ground;

  std::vector<std::vector<Var>> support() const {
    std::vector<std::vector<Var>> out;
    for (Subset s : sets) {
      std::vector<Var> vars;
      for (auto e : subset_members(s)) vars.push_back(static_cast<Var>(e + 1));
      out.push_back(std::move(vars));
    }
    return out;
  }

  WeightAssignment weights() const {
    return WeightAssignment::with_support(poset, support(), ground);
  }
};

namespace detail {

inline SetPoset inclusion_poset(std::vector<Subset> sets,
                                const std::vector<std::string>& ground) {
  std::sort(sets.begin(), sets.end(), subset_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::string> names;
  for (Subset s : sets) names.push_back(subset_name(s, ground));
  auto poset = Poset::from_order(std::move(names), [&](Elem x, Elem y) {
    return (sets[x] & ~sets[y]) == 0;
  });
  return SetPoset{std::move(poset), std::move(sets), ground};
}

}  // namespace detail

/// The lattice of flats under inclusion. Requires a simple matroid.
inline SetPoset flat_lattice(const Matroid& m) {
  if (!m.is_simple()) {
    throw Error(Errc::NotSimple,
                "flat lattices are built from simple matroids; simplify first");
  }
  return detail::inclusion_poset(m.flats(), m.ground());
}

class BouquetOfMatroids {
 public:
  static BouquetOfMatroids build(
      std::vector<std::string> ground,
      const std::vector<std::vector<std::string>>& roofs,
      const std::vector<std::vector<std::string>>& independents) {
    const auto idx = detail::ground_index(ground);
    BouquetOfMatroids b;
    b.ground_ = std::move(ground);
    for (const auto& r : roofs) b.roofs_.push_back(detail::to_subset(r, idx));
    for (const auto& i : independents) {
      b.independent_.insert(detail::to_subset(i, idx));
    }
    b.validate();
    return b;
  }

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<Subset>& roofs() const { return roofs_; }
  const std::vector<Matroid>& roof_matroids() const { return roof_matroids_; }
  /// Position of each roof element in the global ground set.
  const std::vector<std::vector<std::size_t>>& roof_positions() const {
    return roof_pos_;
  }

 private:
  void validate() {
    for (std::size_t i = 0; i < roofs_.size(); ++i) {
      for (std::size_t j = 0; j < roofs_.size(); ++j) {
        if (i != j && (roofs_[i] & ~roofs_[j]) == 0) {
          throw Error(Errc::NotAClutter,
                      "roof " + subset_name(roofs_[i], ground_) +
                          " lies inside roof " + subset_name(roofs_[j], ground_),
                      {subset_name(roofs_[i], ground_),
                       subset_name(roofs_[j], ground_)});
        }
      }
    }
    for (std::size_t i = 0; i < roofs_.size(); ++i) {
      const auto pos = subset_members(roofs_[i]);
      std::vector<std::string> names;
      for (auto e : pos) names.push_back(ground_[e]);
      std::set<Subset> local;
      for (Subset s : independent_) {
        if ((s & ~roofs_[i]) != 0) continue;
        Subset t = 0;
        for (std::size_t k = 0; k < pos.size(); ++k) {
          if (s & (Subset{1} << pos[k])) t |= Subset{1} << k;
        }
        local.insert(t);
      }
      try {
        roof_matroids_.push_back(Matroid::from_subsets(names, local));
      } catch (const Error& e) {
        throw Error(Errc::RoofNotMatroid,
                    "roof " + std::to_string(i) + " " +
                        subset_name(roofs_[i], ground_) + ": " + e.what(),
                    {std::to_string(i)});
      }
      roof_pos_.push_back(pos);
    }
    for (Subset s : independent_) {
      const bool covered = std::any_of(roofs_.begin(), roofs_.end(),
                                       [&](Subset r) { return (s & ~r) == 0; });
      if (!covered) {
        throw Error(Errc::UnionMismatch,
                    subset_name(s, ground_) + " lies in no roof",
                    {subset_name(s, ground_)});
      }
    }
    // If I is independent in roofs i and j and e in E_i - E_j, then I + e is
    // independent.
    for (std::size_t i = 0; i < roofs_.size(); ++i) {
      for (std::size_t j = 0; j < roofs_.size(); ++j) {
        if (i == j) continue;
        const Subset common = roofs_[i] & roofs_[j];
        for (Subset s : independent_) {
          if ((s & ~common) != 0) continue;
          for (auto e : subset_members(roofs_[i] & ~roofs_[j])) {
            const Subset t = s | (Subset{1} << e);
            if (!independent_.count(t)) {
              throw Error(Errc::ExchangeAcrossRoofsFails,
                          subset_name(s, ground_) + " + " + ground_[e] +
                              " is not independent",
                          {subset_name(s, ground_), ground_[e]});
            }
          }
        }
      }
    }
  }

  std::vector<std::string> ground_;
  std::vector<Subset> roofs_;
  std::set<Subset> independent_;
  std::vector<Matroid> roof_matroids_;
  std::vector<std::vector<std::size_t>> roof_pos_;
};

/// Union of the flats of every roof matroid, ordered by inclusion.
inline SetPoset bouquet_flat_poset(const BouquetOfMatroids& b) {
  std::vector<Subset> all;
  for (std::size_t i = 0; i < b.roof_matroids().size(); ++i) {
    const auto& m = b.roof_matroids()[i];
    if (!m.is_simple()) {
      throw Error(Errc::NotSimple, "roof " + std::to_string(i) + " is not simple",
                  {std::to_string(i)});
    }
    const auto& pos = b.roof_positions()[i];
    for (Subset f : m.flats()) {
      Subset g = 0;
      for (auto k : subset_members(f)) g |= Subset{1} << pos[k];
      all.push_back(g);
    }
  }
  auto sp = detail::inclusion_poset(std::move(all), b.ground());
  if (auto v = bouquet_violation(sp.poset)) {
    throw Error(Errc::BouquetCheckFailed, v->describe(), v->witness);
  }
  return sp;
}

}  // namespace chainlat
