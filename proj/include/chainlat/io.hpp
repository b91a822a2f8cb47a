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

// JSON readers and writers for posets, matroids, bouquets of matroids, COMs,
// labelings, chain matrices and verification reports.
//
//   poset    {"elements": [id, ...], "covers": [[id, id], ...]}
//   matroid  {"ground": [id, ...], "independents": [[id, ...], ...]}
//   bouquet  matroid fields plus {"roofs": [[id, ...], ...]}
//   com      {"ground": [id, ...], "covectors": ["+-0", ...]}
//   labeling {element: atom, ...}

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "chainlat/chains.hpp"
#include "chainlat/com.hpp"
#include "chainlat/determinant.hpp"
#include "chainlat/error.hpp"
#include "chainlat/matroid.hpp"
#include "chainlat/poset.hpp"

namespace chainlat {

using json = nlohmann::json;

namespace detail {

template <typename F>
auto parse_guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string(what) + ": " + e.what());
  }
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

inline std::vector<std::vector<std::string>> id_lists(const json& j) {
  return j.get<std::vector<std::vector<std::string>>>();
}

}  // namespace detail

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, "'" + path + "': " + e.what());
  }
}

inline Poset poset_from_json(const json& j) {
  auto [elements, covers] = detail::parse_guard("poset", [&] {
    auto el = detail::field(j, "elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> cov;
    for (const auto& c : detail::field(j, "covers")) {
      if (!c.is_array() || c.size() != 2) {
        throw Error(Errc::ParseError, "a cover must be a pair of identifiers");
      }
      cov.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return std::make_pair(std::move(el), std::move(cov));
  });
  return Poset::build(std::move(elements), covers);
}

inline json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (const auto& [x, y] : p.cover_pairs()) {
    covers.push_back({p.name(x), p.name(y)});
  }
  return {{"elements", p.names()}, {"covers", covers}};
}

inline Matroid matroid_from_json(const json& j) {
  auto [ground, indep] = detail::parse_guard("matroid", [&] {
    return std::make_pair(
        detail::field(j, "ground").get<std::vector<std::string>>(),
        detail::id_lists(detail::field(j, "independents")));
  });
  return Matroid::build(std::move(ground), indep);
}

inline BouquetOfMatroids bouquet_from_json(const json& j) {
  auto [ground, roofs, indep] = detail::parse_guard("bouquet", [&] {
    return std::make_tuple(
        detail::field(j, "ground").get<std::vector<std::string>>(),
        detail::id_lists(detail::field(j, "roofs")),
        detail::id_lists(detail::field(j, "independents")));
  });
  return BouquetOfMatroids::build(std::move(ground), roofs, indep);
}

/// Shape-checked but not axiom-checked; pass through validate_com.
inline CovectorSet covectors_from_json(const json& j) {
  auto [ground, covs] = detail::parse_guard("com", [&] {
    return std::make_pair(
        detail::field(j, "ground").get<std::vector<std::string>>(),
        detail::field(j, "covectors").get<std::vector<std::string>>());
  });
  return CovectorSet::make(std::move(ground), covs);
}

inline Labeling labeling_from_json(const Poset& p, const json& j) {
  auto ids = detail::parse_guard("labeling", [&] {
    return j.get<std::map<std::string, std::string>>();
  });
  return Labeling::from_ids(p, ids);
}

/// The poset the pipeline runs on, with its weights and a legend naming what
/// each variable stands for.
struct Structure {
  Poset poset;
  WeightAssignment weights;
  std::map<Var, std::string> legend;
};

enum class InputKind { Poset, Matroid, Bouquet, Com };

inline InputKind parse_kind(const std::string& s) {
  if (s == "poset") return InputKind::Poset;
  if (s == "matroid") return InputKind::Matroid;
  if (s == "bouquet") return InputKind::Bouquet;
  if (s == "com") return InputKind::Com;
  throw Error(Errc::ParseError, "unknown input kind '" + s + "'");
}

namespace detail {

inline Structure from_set_poset(SetPoset sp) {
  Structure s{sp.poset, sp.weights(), {}};
  for (std::size_t i = 0; i < sp.ground.size(); ++i) {
    s.legend.emplace(static_cast<Var>(i + 1), sp.ground[i]);
  }
  return s;
}

}  // namespace detail

/// Builds the poset for any input kind. Posets use atom variables; the other
/// kinds attach ground-element supports.
inline Structure load_structure(InputKind kind, const json& j) {
  switch (kind) {
    case InputKind::Poset: {
      auto p = poset_from_json(j);
      auto w = WeightAssignment::atoms_in_order(p);
      Structure s{std::move(p), std::move(w), {}};
      for (Elem a : s.poset.atoms()) {
        s.legend.emplace(s.weights.atom_variable(a), s.poset.name(a));
      }
      return s;
    }
    case InputKind::Matroid:
      return detail::from_set_poset(flat_lattice(matroid_from_json(j)));
    case InputKind::Bouquet:
      return detail::from_set_poset(bouquet_flat_poset(bouquet_from_json(j)));
    case InputKind::Com:
      return detail::from_set_poset(
          zero_set_poset(validate_com(covectors_from_json(j))));
  }
  throw Error(Errc::ParseError, "unknown input kind");
}

inline json legend_to_json(const std::map<Var, std::string>& legend) {
  json out = json::object();
  for (const auto& [v, id] : legend) out[default_var_name(v)] = id;
  return out;
}

inline json chain_matrix_to_json(const Poset& p, const ChainMatrix& m) {
  json chains = json::array();
  for (const auto& c : m.chains) chains.push_back(c.ids(p));
  json families = json::array();
  for (const auto& f : m.families) {
    families.push_back(
        {{"top", p.name(f.top)}, {"begin", f.begin}, {"size", f.size}});
  }
  json rows = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(std::move(r));
  }
  return {{"chains", chains}, {"families", families}, {"matrix", rows}};
}

/// Inverse of chain_matrix_to_json against the same poset.
inline ChainMatrix chain_matrix_from_json(const Poset& p, const json& j) {
  return detail::parse_guard("chain matrix", [&] {
    ChainMatrix m;
    for (const auto& ids : detail::id_lists(detail::field(j, "chains"))) {
      Chain c;
      for (const auto& id : ids) c.elements.push_back(p.lookup(id));
      m.chains.push_back(std::move(c));
    }
    for (const auto& f : detail::field(j, "families")) {
      m.families.push_back({p.lookup(f.at("top").get<std::string>()),
                            f.at("begin").get<std::size_t>(),
                            f.at("size").get<std::size_t>()});
    }
    const auto& rows = detail::field(j, "matrix");
    if (rows.size() != m.chains.size()) {
      throw Error(Errc::ParseError, "matrix has the wrong number of rows");
    }
    for (const auto& row : rows) {
      if (row.size() != m.chains.size()) {
        throw Error(Errc::ParseError, "matrix row has the wrong length");
      }
      std::vector<Polynomial> r;
      for (const auto& e : row) r.push_back(parse_polynomial(e.get<std::string>()));
      m.entries.push_back(std::move(r));
    }
    return m;
  });
}

inline json report_to_json(const VerificationReport& r) {
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back({{"top", b.top},
                      {"dim", b.dim},
                      {"det", b.det ? b.det->to_string() : std::string()}});
  }
  json out = {
      {"verdict", r.verdict},
      {"sign", r.sign ? json(*r.sign) : json(nullptr)},
      {"det", r.det ? r.det->to_string() : std::string()},
      {"product", r.product.to_string()},
      {"exponents", r.exponents},
      {"blocks", blocks},
      {"mode", mode_name(r.mode)},
      {"trials", r.trials},
      {"seed", r.seed},
  };
  if (r.mode == VerifyMode::Randomized) out["prime"] = r.prime;
  return out;
}

}  // namespace chainlat
