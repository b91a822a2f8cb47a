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

// Finite posets given by their cover relation, with the order relation,
// rank function and Moebius function materialized at construction. A Poset
// is immutable once built, so every query is safe to call concurrently.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chainlat/error.hpp"

namespace chainlat {

using Elem = std::size_t;

class Poset {
 public:
  Poset() = default;

  /// Validates and builds. Covers must be irredundant: a pair implied by
  /// transitivity is rejected rather than dropped.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>&
                         covers) {
    Poset p;
    p.names_ = std::move(elements);
    const std::size_t n = p.names_.size();
    for (Elem i = 0; i < n; ++i) {
      if (p.names_[i].empty()) {
        throw Error(Errc::UnknownElement, "empty element identifier");
      }
      if (!p.index_.emplace(p.names_[i], i).second) {
        throw Error(Errc::DuplicateElement,
                    "element '" + p.names_[i] + "' listed twice",
                    {p.names_[i]});
      }
    }
    p.upper_.assign(n, {});
    p.lower_.assign(n, {});
    std::set<std::pair<Elem, Elem>> seen;
    for (const auto& [a, b] : covers) {
      const Elem x = p.lookup(a), y = p.lookup(b);
      if (x == y) {
        throw Error(Errc::CycleDetected, "self cover on '" + a + "'", {a});
      }
      if (!seen.emplace(x, y).second) {
        throw Error(Errc::RedundantCover,
                    "cover (" + a + ", " + b + ") listed twice", {a, b});
      }
      p.upper_[x].push_back(y);
      p.lower_[y].push_back(x);
    }
    for (auto& v : p.upper_) std::sort(v.begin(), v.end());
    for (auto& v : p.lower_) std::sort(v.begin(), v.end());
    p.finish();
    for (const auto& [x, y] : seen) {
      for (Elem z = 0; z < n; ++z) {
        if (z != x && z != y && p.leq(x, z) && p.leq(z, y)) {
          throw Error(Errc::RedundantCover,
                      "cover (" + p.names_[x] + ", " + p.names_[y] +
                          ") is implied through '" + p.names_[z] + "'",
                      {p.names_[x], p.names_[y], p.names_[z]});
        }
      }
    }
    return p;
  }

  /// Builds the poset whose order is `le` (assumed reflexive, antisymmetric
  /// and transitive); covers are recovered by transitive reduction.
  static Poset from_order(std::vector<std::string> elements,
                          const std::function<bool(Elem, Elem)>& le) {
    const std::size_t n = elements.size();
    std::vector<std::pair<std::string, std::string>> covers;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (x == y || !le(x, y)) continue;
        bool cover = true;
        for (Elem z = 0; z < n && cover; ++z) {
          if (z != x && z != y && le(x, z) && le(z, y)) cover = false;
        }
        if (cover) covers.emplace_back(elements[x], elements[y]);
      }
    }
    return build(std::move(elements), covers);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(Elem x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Elem> find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Elem lookup(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
      throw Error(Errc::UnknownElement, "unknown element '" + id + "'", {id});
    }
    return it->second;
  }

  bool leq(Elem x, Elem y) const { return order_[x * size() + y] != 0; }
  bool less(Elem x, Elem y) const { return x != y && leq(x, y); }
  bool covers(Elem x, Elem y) const {
    return std::binary_search(upper_[x].begin(), upper_[x].end(), y);
  }
  const std::vector<Elem>& upper_covers(Elem x) const { return upper_[x]; }
  const std::vector<Elem>& lower_covers(Elem x) const { return lower_[x]; }

  std::vector<std::pair<Elem, Elem>> cover_pairs() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem x = 0; x < size(); ++x) {
      for (Elem y : upper_[x]) out.emplace_back(x, y);
    }
    return out;
  }

  /// Elements in a linear extension of the order.
  const std::vector<Elem>& topological_order() const { return topo_; }

  std::optional<Elem> bottom() const { return bottom_; }
  const std::vector<Elem>& atoms() const { return atoms_; }
  const std::vector<Elem>& maximal_elements() const { return maximal_; }
  bool is_atom(Elem x) const {
    return std::find(atoms_.begin(), atoms_.end(), x) != atoms_.end();
  }
  bool is_maximal(Elem x) const { return upper_[x].empty(); }

  bool is_ranked() const { return rank_.has_value(); }

  /// Length of every saturated chain from a minimal element up to x.
  int rank(Elem x) const {
    if (!rank_) {
      throw Error(Errc::NotRanked,
                  "saturated chains to some element have different lengths",
                  rank_witness_);
    }
    return (*rank_)[x];
  }

  /// mu(x, y); zero unless x <= y.
  std::int64_t mobius(Elem x, Elem y) const { return mobius_[x * size() + y]; }

  /// mu(0, x).
  std::int64_t mobius(Elem x) const { return mobius(require_bottom(), x); }

  Elem require_bottom() const {
    if (!bottom_) throw Error(Errc::NoBottom, "poset has no unique minimum");
    return *bottom_;
  }

  std::vector<Elem> lower_bounds(Elem x, Elem y) const {
    std::vector<Elem> out;
    for (Elem z = 0; z < size(); ++z) {
      if (leq(z, x) && leq(z, y)) out.push_back(z);
    }
    return out;
  }
  std::vector<Elem> upper_bounds(Elem x, Elem y) const {
    std::vector<Elem> out;
    for (Elem z = 0; z < size(); ++z) {
      if (leq(x, z) && leq(y, z)) out.push_back(z);
    }
    return out;
  }

  /// Greatest lower bound, if one exists.
  std::optional<Elem> meet(Elem x, Elem y) const {
    if (leq(x, y)) return x;
    if (leq(y, x)) return y;
    const auto lb = lower_bounds(x, y);
    for (Elem c : lb) {
      if (std::all_of(lb.begin(), lb.end(), [&](Elem z) { return leq(z, c); })) {
        return c;
      }
    }
    return std::nullopt;
  }

  /// Least upper bound, if one exists.
  std::optional<Elem> join(Elem x, Elem y) const {
    if (leq(x, y)) return y;
    if (leq(y, x)) return x;
    const auto ub = upper_bounds(x, y);
    for (Elem c : ub) {
      if (std::all_of(ub.begin(), ub.end(), [&](Elem z) { return leq(c, z); })) {
        return c;
      }
    }
    return std::nullopt;
  }

  /// Join of a set of elements; the empty join is the bottom.
  std::optional<Elem> join_all(const std::vector<Elem>& xs) const {
    if (xs.empty()) return bottom_;
    std::optional<Elem> acc = xs.front();
    for (std::size_t i = 1; i < xs.size() && acc; ++i) acc = join(*acc, xs[i]);
    return acc;
  }

  std::vector<Elem> atoms_below(Elem x) const {
    std::vector<Elem> out;
    for (Elem a : atoms_) {
      if (leq(a, x)) out.push_back(a);
    }
    return out;
  }

  /// Induced subposet on {z : x <= z <= y}, element order preserved.
  Poset interval(Elem x, Elem y) const {
    if (!leq(x, y)) {
      throw Error(Errc::NotComparable,
                  "'" + names_[x] + "' is not below '" + names_[y] + "'",
                  {names_[x], names_[y]});
    }
    std::vector<Elem> members;
    for (Elem z = 0; z < size(); ++z) {
      if (leq(x, z) && leq(z, y)) members.push_back(z);
    }
    std::vector<std::string> ids;
    for (Elem z : members) ids.push_back(names_[z]);
    std::vector<std::pair<std::string, std::string>> cov;
    for (Elem z : members) {
      for (Elem u : upper_[z]) {
        if (leq(u, y)) cov.emplace_back(names_[z], names_[u]);
      }
    }
    return build(std::move(ids), cov);
  }

 private:
  void finish() {
    const std::size_t n = size();
    // Kahn's algorithm; leftovers sit on a cycle.
    std::vector<std::size_t> indeg(n);
    for (Elem x = 0; x < n; ++x) indeg[x] = lower_[x].size();
    std::queue<Elem> ready;
    for (Elem x = 0; x < n; ++x) {
      if (indeg[x] == 0) ready.push(x);
    }
    topo_.clear();
    while (!ready.empty()) {
      Elem x = ready.front();
      ready.pop();
      topo_.push_back(x);
      for (Elem y : upper_[x]) {
        if (--indeg[y] == 0) ready.push(y);
      }
    }
    if (topo_.size() != n) {
      std::vector<std::string> cyc;
      for (Elem x = 0; x < n; ++x) {
        if (indeg[x] > 0) cyc.push_back(names_[x]);
      }
      throw Error(Errc::CycleDetected, "cover relation has a cycle", cyc);
    }

    order_.assign(n * n, 0);
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      const Elem x = *it;
      order_[x * n + x] = 1;
      for (Elem y : upper_[x]) {
        for (Elem z = 0; z < n; ++z) {
          if (order_[y * n + z]) order_[x * n + z] = 1;
        }
      }
    }

    std::vector<Elem> minimal;
    maximal_.clear();
    for (Elem x = 0; x < n; ++x) {
      if (lower_[x].empty()) minimal.push_back(x);
      if (upper_[x].empty()) maximal_.push_back(x);
    }
    bottom_.reset();
    atoms_.clear();
    if (minimal.size() == 1) {
      bottom_ = minimal.front();
      atoms_ = upper_[*bottom_];
    }

    // Shortest and longest saturated chain lengths from the minimal elements.
    std::vector<int> lo(n, 0), hi(n, 0);
    for (Elem x : topo_) {
      if (lower_[x].empty()) continue;
      lo[x] = hi[x] = -1;
      for (Elem y : lower_[x]) {
        lo[x] = lo[x] < 0 ? lo[y] + 1 : std::min(lo[x], lo[y] + 1);
        hi[x] = std::max(hi[x], hi[y] + 1);
      }
    }
    rank_.reset();
    rank_witness_.clear();
    bool ranked = true;
    for (Elem x : topo_) {
      if (lo[x] != hi[x]) {
        ranked = false;
        rank_witness_ = {names_[x]};
        break;
      }
    }
    if (ranked) rank_ = lo;

    mobius_.assign(n * n, 0);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y : topo_) {
        if (!leq(x, y)) continue;
        if (y == x) {
          mobius_[x * n + y] = 1;
          continue;
        }
        std::int64_t s = 0;
        for (Elem z = 0; z < n; ++z) {
          if (z != y && leq(x, z) && leq(z, y)) s += mobius_[x * n + z];
        }
        mobius_[x * n + y] = -s;
      }
    }
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<std::vector<Elem>> upper_, lower_;
  std::vector<Elem> topo_;
  std::vector<std::uint8_t> order_;
  std::optional<Elem> bottom_;
  std::vector<Elem> atoms_, maximal_;
  std::optional<std::vector<int>> rank_;
  std::vector<std::string> rank_witness_;
  std::vector<std::int64_t> mobius_;
};

// ---------------------------------------------------------------------------
// Structure checks.

/// A failed structural axiom, with the elements that witness it.
struct Violation {
  enum class Kind {
    NoMeet,
    NoJoin,
    NoBottom,
    NoTop,
    NotAtomic,
    NotSemimodular,
    IntervalNotGeometric,
  };
  Kind kind;
  std::vector<std::string> witness;
  std::string detail;

  std::string describe() const {
    std::string w;
    for (const auto& s : witness) w += (w.empty() ? "" : ",") + s;
    switch (kind) {
      case Kind::NoMeet: return "no meet for " + w;
      case Kind::NoJoin: return "no join for " + w;
      case Kind::NoBottom: return "no unique minimum";
      case Kind::NoTop: return "no unique maximum";
      case Kind::NotAtomic: return "atomicity witness " + w;
      case Kind::NotSemimodular: return "semimodularity witness " + w;
      case Kind::IntervalNotGeometric:
        return "interval [" + w + "] not geometric: " + detail;
    }
    return w;
  }
};

inline std::optional<Violation> meet_semilattice_violation(const Poset& p) {
  for (Elem x = 0; x < p.size(); ++x) {
    for (Elem y = x + 1; y < p.size(); ++y) {
      if (!p.meet(x, y)) {
        return Violation{Violation::Kind::NoMeet, {p.name(x), p.name(y)}, {}};
      }
    }
  }
  return std::nullopt;
}

inline bool is_meet_semilattice(const Poset& p) {
  return !meet_semilattice_violation(p).has_value();
}

/// Checks lattice, atomic and semimodular in that order and reports the first
/// failure found.
inline std::optional<Violation> geometric_lattice_violation(const Poset& p) {
  if (p.size() == 0) return Violation{Violation::Kind::NoBottom, {}, {}};
  if (!p.bottom()) return Violation{Violation::Kind::NoBottom, {}, {}};
  if (p.maximal_elements().size() != 1) {
    return Violation{Violation::Kind::NoTop, {}, {}};
  }
  const std::size_t n = p.size();
  // A finite poset with 0 and 1 in which all joins exist is a lattice.
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (!p.join(x, y)) {
        return Violation{Violation::Kind::NoJoin, {p.name(x), p.name(y)}, {}};
      }
      if (!p.meet(x, y)) {
        return Violation{Violation::Kind::NoMeet, {p.name(x), p.name(y)}, {}};
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (p.join_all(p.atoms_below(x)) != x) {
      return Violation{Violation::Kind::NotAtomic, {p.name(x)}, {}};
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem m = *p.meet(x, y);
      const Elem j = *p.join(x, y);
      if (p.covers(m, x) && !p.covers(y, j)) {
        // Reported as an unordered pair, in element order.
        return Violation{Violation::Kind::NotSemimodular,
                         {p.name(std::min(x, y)), p.name(std::max(x, y))},
                         {}};
      }
    }
  }
  return std::nullopt;
}

inline bool is_geometric_lattice(const Poset& p) {
  return !geometric_lattice_violation(p).has_value();
}

/// A meet semilattice whose every interval is geometric. Every interval lies
/// inside some [0, r] with r maximal, and intervals of geometric lattices are
/// geometric, so only the intervals [0, r] are examined.
inline std::optional<Violation> bouquet_violation(const Poset& p) {
  if (auto v = meet_semilattice_violation(p)) return v;
  if (p.size() == 0) return std::nullopt;
  const Elem zero = p.require_bottom();
  for (Elem r : p.maximal_elements()) {
    if (auto v = geometric_lattice_violation(p.interval(zero, r))) {
      return Violation{Violation::Kind::IntervalNotGeometric,
                       {p.name(zero), p.name(r)}, v->describe()};
    }
  }
  return std::nullopt;
}

inline bool is_bouquet(const Poset& p) {
  return !bouquet_violation(p).has_value();
}

inline void require_bouquet(const Poset& p) {
  if (auto v = bouquet_violation(p)) {
    throw Error(Errc::NotABouquet, v->describe(), v->witness);
  }
}

// ---------------------------------------------------------------------------
// Invariants.

/// Crapo's beta: (-1)^r(x) * sum over y <= x of mu(0, y) r(y).
inline std::int64_t beta(const Poset& p, Elem x) {
  const Elem zero = p.require_bottom();
  std::int64_t s = 0;
  for (Elem y = 0; y < p.size(); ++y) {
    if (p.leq(y, x)) s += p.mobius(zero, y) * p.rank(y);
  }
  return (p.rank(x) % 2 == 0) ? s : -s;
}

/// beta(x) times the sum of |mu(x, r)| over maximal r above x.
inline std::int64_t rho(const Poset& p, Elem x) {
  std::int64_t s = 0;
  for (Elem r : p.maximal_elements()) {
    if (p.leq(x, r)) s += std::llabs(p.mobius(x, r));
  }
  return beta(p, x) * s;
}

struct IntInvariantTable {
  enum class Kind { Mobius, Beta, Rho };
  Kind kind;
  // Keyed by element id; for Mobius the value is mu(0, x).
  std::map<std::string, std::int64_t> values;
};

inline IntInvariantTable invariant_table(const Poset& p,
                                         IntInvariantTable::Kind kind) {
  IntInvariantTable t{kind, {}};
  for (Elem x = 0; x < p.size(); ++x) {
    std::int64_t v = 0;
    switch (kind) {
      case IntInvariantTable::Kind::Mobius: v = p.mobius(x); break;
      case IntInvariantTable::Kind::Beta: v = beta(p, x); break;
      case IntInvariantTable::Kind::Rho: v = rho(p, x); break;
    }
    t.values.emplace(p.name(x), v);
  }
  return t;
}

}  // namespace chainlat
