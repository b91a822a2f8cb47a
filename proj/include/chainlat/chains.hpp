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

// Maximal chains of a bouquet of geometric lattices, atom labelings, neat
// chains, generating atom tuples and the chain matrix built from them.
//
// Chains start at an atom and end at a maximal element; the bottom is never
// part of a chain. A tuple (a_1, ..., a_k) generates [x_1 < ... < x_k] when
// every prefix join a_1 v ... v a_i equals x_i.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainlat/error.hpp"
#include "chainlat/polyring.hpp"
#include "chainlat/poset.hpp"

namespace chainlat {

struct Chain {
  std::vector<Elem> elements;

  std::size_t size() const { return elements.size(); }
  Elem top() const { return elements.back(); }

  std::vector<std::string> ids(const Poset& p) const {
    std::vector<std::string> out;
    for (Elem x : elements) out.push_back(p.name(x));
    return out;
  }

  friend bool operator==(const Chain&, const Chain&) = default;
};

inline std::string chain_to_string(const Poset& p, const Chain& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += " < ";
    s += p.name(c.elements[i]);
  }
  return s + "]";
}

/// An atom below every non-bottom element. Stored per element; the bottom
/// carries no label.
class Labeling {
 public:
  Labeling() = default;

  /// Validates l(x) is an atom with l(x) <= x for every non-bottom x.
  Labeling(const Poset& p, std::vector<std::optional<Elem>> labels)
      : labels_(std::move(labels)) {
    if (labels_.size() != p.size()) {
      throw Error(Errc::InvalidLabeling, "label table has wrong size");
    }
    const auto zero = p.bottom();
    for (Elem x = 0; x < p.size(); ++x) {
      if (zero && x == *zero) {
        if (labels_[x]) {
          throw Error(Errc::InvalidLabeling, "the bottom cannot be labeled",
                      {p.name(x)});
        }
        continue;
      }
      if (!labels_[x]) {
        throw Error(Errc::InvalidLabeling, "'" + p.name(x) + "' has no label",
                    {p.name(x)});
      }
      const Elem a = *labels_[x];
      if (a >= p.size() || !p.is_atom(a) || !p.leq(a, x)) {
        throw Error(Errc::InvalidLabeling,
                    "label of '" + p.name(x) + "' is not an atom below it",
                    {p.name(x)});
      }
    }
  }

  /// From an id -> atom id map covering every non-bottom element.
  static Labeling from_ids(const Poset& p,
                           const std::map<std::string, std::string>& ids) {
    std::vector<std::optional<Elem>> labels(p.size());
    for (const auto& [x, a] : ids) {
      const auto xi = p.find(x);
      const auto ai = p.find(a);
      if (!xi || !ai) {
        throw Error(Errc::InvalidLabeling,
                    "labeling mentions unknown element '" + (xi ? a : x) + "'");
      }
      labels[*xi] = *ai;
    }
    return Labeling(p, std::move(labels));
  }

  Elem operator()(Elem x) const { return *labels_[x]; }
  bool has_label(Elem x) const { return labels_[x].has_value(); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::vector<std::optional<Elem>> labels_;
};

/// Labels each element with the least atom below it. `atom_order` must be a
/// permutation of the atoms; empty means element order.
inline Labeling min_labeling(const Poset& p, std::vector<Elem> atom_order = {}) {
  if (atom_order.empty()) atom_order = p.atoms();
  auto sorted = atom_order;
  auto atoms = p.atoms();
  std::sort(sorted.begin(), sorted.end());
  std::sort(atoms.begin(), atoms.end());
  if (sorted != atoms) {
    throw Error(Errc::InvalidAtomOrder,
                "atom order is not a permutation of the atoms");
  }
  std::vector<std::optional<Elem>> labels(p.size());
  for (Elem x = 0; x < p.size(); ++x) {
    if (p.bottom() && x == *p.bottom()) continue;
    for (Elem a : atom_order) {
      if (p.leq(a, x)) {
        labels[x] = a;
        break;
      }
    }
  }
  return Labeling(p, std::move(labels));
}

/// For all a < x' < x with l(x) = a we need l(x') = a.
inline bool is_convex(const Poset& p, const Labeling& l) {
  for (Elem x = 0; x < p.size(); ++x) {
    if (!l.has_label(x)) continue;
    const Elem a = l(x);
    for (Elem y = 0; y < p.size(); ++y) {
      if (p.less(a, y) && p.less(y, x) && l(y) != a) return false;
    }
  }
  return true;
}

/// All saturated chains from an atom to a maximal element, ordered
/// lexicographically by element position.
inline std::vector<Chain> enumerate_maximal_chains(const Poset& p) {
  std::vector<Chain> out;
  std::vector<Elem> path;
  auto dfs = [&](auto&& self, Elem x) -> void {
    path.push_back(x);
    if (p.is_maximal(x)) out.push_back(Chain{path});
    for (Elem y : p.upper_covers(x)) self(self, y);
    path.pop_back();
  };
  for (Elem a : p.atoms()) dfs(dfs, a);
  std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
    return a.elements < b.elements;
  });
  return out;
}

/// l(x_i) <= x_i and l(x_i) not below x_{i-1}, with x_0 the bottom.
inline bool is_neat(const Poset& p, const Labeling& l, const Chain& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Elem a = l(c.elements[i]);
    if (!p.leq(a, c.elements[i])) return false;
    if (i > 0 && p.leq(a, c.elements[i - 1])) return false;
  }
  return true;
}

/// Neatness for convex labelings: labels along the chain are pairwise
/// distinct.
inline bool has_distinct_labels(const Labeling& l, const Chain& c) {
  std::vector<Elem> labels;
  for (Elem x : c.elements) labels.push_back(l(x));
  std::sort(labels.begin(), labels.end());
  return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
}

struct ChainFamily {
  Elem top;
  std::vector<Chain> chains;
};

/// Neat chains grouped by their top element; one family per maximal element
/// in element order, possibly empty.
inline std::vector<ChainFamily> neat_chain_families(const Poset& p,
                                                    const Labeling& l) {
  std::vector<ChainFamily> families;
  for (Elem r : p.maximal_elements()) families.push_back({r, {}});
  for (auto& c : enumerate_maximal_chains(p)) {
    if (!is_neat(p, l, c)) continue;
    const Elem top = c.top();
    for (auto& f : families) {
      if (f.top == top) f.chains.push_back(std::move(c));
    }
  }
  return families;
}

using AtomTuple = std::vector<Elem>;

/// Ordered atom tuples whose prefix joins are exactly the chain elements.
inline std::vector<AtomTuple> generators(const Poset& p, const Chain& c) {
  std::vector<AtomTuple> out;
  AtomTuple tuple;
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == c.size()) {
      out.push_back(tuple);
      return;
    }
    const Elem target = c.elements[i];
    for (Elem a : p.atoms()) {
      if (!p.leq(a, target)) continue;
      if (i == 0) {
        if (a != target) continue;
      } else if (p.leq(a, c.elements[i - 1]) ||
                 p.join(c.elements[i - 1], a) != target) {
        continue;
      }
      tuple.push_back(a);
      self(self, i + 1);
      tuple.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

/// Sign of the permutation carrying tuple `from` onto tuple `to` (same atoms,
/// different order), via position mapping and cycle count.
inline int permutation_sign(const AtomTuple& from, const AtomTuple& to) {
  const std::size_t k = from.size();
  std::vector<std::size_t> perm(k);
  for (std::size_t j = 0; j < k; ++j) {
    perm[j] = static_cast<std::size_t>(
        std::find(from.begin(), from.end(), to[j]) - from.begin());
  }
  std::vector<bool> seen(k, false);
  std::size_t cycles = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (seen[j]) continue;
    ++cycles;
    for (std::size_t t = j; !seen[t]; t = perm[t]) seen[t] = true;
  }
  return ((k - cycles) % 2 == 0) ? 1 : -1;
}

/// Atom variables plus, optionally, the ground-element support of every
/// element. With a support attached, w(x) sums ground variables over the
/// support of x instead of atom variables.
class WeightAssignment {
 public:
  WeightAssignment() = default;

  /// Atom i (in element order, 1-based) gets variable w_i.
  static WeightAssignment atoms_in_order(const Poset& p) {
    WeightAssignment w;
    w.atom_var_.assign(p.size(), std::nullopt);
    Var next = 1;
    for (Elem a : p.atoms()) w.atom_var_[a] = next++;
    return w;
  }

  /// `support[x]` lists the ground variables of element x; `ground_names[i]`
  /// names ground variable i + 1.
  static WeightAssignment with_support(const Poset& p,
                                       std::vector<std::vector<Var>> support,
                                       std::vector<std::string> ground_names) {
    auto w = atoms_in_order(p);
    if (support.size() != p.size()) {
      throw Error(Errc::InvalidLabeling, "support table has wrong size");
    }
    w.support_ = std::move(support);
    w.ground_names_ = std::move(ground_names);
    return w;
  }

  Var atom_variable(Elem a) const { return *atom_var_.at(a); }
  bool has_support() const { return support_.has_value(); }
  const std::vector<Var>& support(Elem x) const { return support_->at(x); }
  const std::vector<std::string>& ground_names() const { return ground_names_; }

  /// Ground variables of x that are not in the support of the bottom. Ground
  /// elements lying in every element (loops) carry no weight.
  std::vector<Var> effective_support(const Poset& p, Elem x) const {
    std::vector<Var> s = support(x);
    if (const auto zero = p.bottom()) {
      const auto& z = support(*zero);
      std::erase_if(s, [&](Var v) {
        return std::find(z.begin(), z.end(), v) != z.end();
      });
    }
    return s;
  }

  /// Ground-variable image of every atom variable, for substitution.
  std::map<Var, Polynomial> atom_substitution(const Poset& p) const {
    std::map<Var, Polynomial> m;
    for (Elem a : p.atoms()) {
      Polynomial s;
      for (Var v : effective_support(p, a)) s += Polynomial::variable(v);
      m.emplace(atom_variable(a), s);
    }
    return m;
  }

 private:
  std::vector<std::optional<Var>> atom_var_;
  std::optional<std::vector<std::vector<Var>>> support_;
  std::vector<std::string> ground_names_;
};

/// w(x): sum of w_i over atoms a_i <= x, or of ground variables over the
/// support of x when the assignment carries one.
inline Polynomial weight(const Poset& p, Elem x, const WeightAssignment& w) {
  Polynomial s;
  if (w.has_support()) {
    for (Var v : w.effective_support(p, x)) s += Polynomial::variable(v);
    return s;
  }
  for (Elem a : p.atoms_below(x)) s += Polynomial::variable(w.atom_variable(a));
  return s;
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

struct ChainMatrix {
  struct Family {
    Elem top;
    std::size_t begin;
    std::size_t size;
  };

  std::vector<Chain> chains;
  std::vector<Family> families;
  PolyMatrix entries;

  std::size_t dim() const { return chains.size(); }
};

namespace detail {

inline Polynomial chain_entry(
    const std::map<AtomTuple, std::vector<AtomTuple>>& gens_a,
    const std::map<AtomTuple, std::vector<AtomTuple>>& gens_b,
    const WeightAssignment& w) {
  Polynomial entry;
  for (const auto& [atoms, tuples_a] : gens_a) {
    auto it = gens_b.find(atoms);
    if (it == gens_b.end()) continue;
    long long coeff = 0;
    for (const auto& ta : tuples_a) {
      for (const auto& tb : it->second) coeff += permutation_sign(ta, tb);
    }
    if (coeff == 0) continue;
    std::vector<Monomial::Power> powers;
    for (Elem a : atoms) powers.emplace_back(w.atom_variable(a), 1);
    entry.add_term(Monomial(std::move(powers)), BigInt(coeff));
  }
  return entry;
}

}  // namespace detail

/// Entry (C, C') sums sgn(sigma) * w_{i_1} ... w_{i_k} over tuples generating
/// C whose reordering by sigma generates C'. Rows and columns are grouped by
/// family. Entries always use atom variables.
// TODO: fill independent (i, j) cells on a thread pool once matrices reach
// a few hundred chains; today's inputs build in milliseconds.
inline ChainMatrix chain_matrix(const Poset& p, const Labeling& l,
                                const WeightAssignment& w) {
  if (l.size() != p.size()) {
    throw Error(Errc::InvalidLabeling, "labeling belongs to another poset");
  }
  ChainMatrix m;
  for (auto& f : neat_chain_families(p, l)) {
    m.families.push_back({f.top, m.chains.size(), f.chains.size()});
    for (auto& c : f.chains) m.chains.push_back(std::move(c));
  }
  const std::size_t n = m.chains.size();

  // Generators of each chain, bucketed by their (sorted) atom set.
  std::vector<std::map<AtomTuple, std::vector<AtomTuple>>> gens(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& t : generators(p, m.chains[i])) {
      auto key = t;
      std::sort(key.begin(), key.end());
      gens[i][key].push_back(std::move(t));
    }
  }

  // Cross-family pairs are evaluated too; they come out zero because every
  // generating tuple joins to its chain's top.
  m.entries.assign(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.chains[i].size() != m.chains[j].size()) continue;
      m.entries[i][j] = detail::chain_entry(gens[i], gens[j], w);
    }
  }
  return m;
}

}  // namespace chainlat
