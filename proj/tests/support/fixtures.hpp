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

#pragma once

#include <string>
#include <vector>

#include "chainlat/chainlat.hpp"

#ifndef CHAINLAT_FIXTURE_DIR
#error "CHAINLAT_FIXTURE_DIR must be defined"
#endif

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(CHAINLAT_FIXTURE_DIR) + "/" + name + ".json";
}

inline chainlat::json read(const std::string& name) {
  return chainlat::load_json_file(path(name));
}

struct Entry {
  std::string name;
  chainlat::InputKind kind;
};

// Every fixture that describes a valid bouquet.
inline const std::vector<Entry>& bouquets() {
  using K = chainlat::InputKind;
  static const std::vector<Entry> all = {
      {"example13", K::Poset},          {"one_atom", K::Poset},
      {"empty", K::Poset},              {"u23", K::Matroid},
      {"u24", K::Matroid},              {"u34", K::Matroid},
      {"k3", K::Matroid},               {"k4_minus_edge", K::Matroid},
      {"c4", K::Matroid},               {"bouquet_example13", K::Bouquet},
      {"bouquet_two_points", K::Bouquet}, {"com_concurrent3", K::Com},
      {"com_generic3", K::Com},         {"com_parallel3", K::Com},
      {"om_zero", K::Com},              {"com_plus", K::Com},
  };
  return all;
}

inline const std::vector<std::string>& simple_matroids() {
  static const std::vector<std::string> all = {"u23", "u24", "u34",
                                               "k3",  "k4_minus_edge", "c4"};
  return all;
}

inline const std::vector<std::string>& coms() {
  static const std::vector<std::string> all = {
      "com_concurrent3", "com_generic3", "com_parallel3", "om_zero", "com_plus"};
  return all;
}

inline chainlat::Structure load(const Entry& e) {
  return chainlat::load_structure(e.kind, read(e.name));
}

inline chainlat::Poset poset(const std::string& name) {
  return chainlat::poset_from_json(read(name));
}

}  // namespace fixtures
