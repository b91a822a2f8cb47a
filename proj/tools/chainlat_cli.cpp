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

// chainlat: build chain matrices of bouquets of geometric lattices and check
// their determinant factorization.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 structurally
// invalid input, 3 unreadable input or bad arguments.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chainlat/chainlat.hpp"

namespace {

using namespace chainlat;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitParse = 3;

struct RunConfig {
  std::string input;
  std::string kind = "poset";
  std::string labeling = "min";
  std::string atom_order;
  std::string mode = "symbolic";
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  std::string format = "text";
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Labeling make_labeling(const RunConfig& cfg, const Poset& p) {
  require_bouquet(p);
  if (cfg.labeling != "min") {
    return labeling_from_json(p, load_json_file(cfg.labeling));
  }
  std::vector<Elem> order;
  for (const auto& id : split_commas(cfg.atom_order)) {
    const auto a = p.find(id);
    if (!a) throw Error(Errc::InvalidAtomOrder, "unknown atom '" + id + "'");
    order.push_back(*a);
  }
  return min_labeling(p, order);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string with_reason(bool ok, const std::optional<Violation>& v) {
  if (ok || !v) return bool_str(ok);
  return "false (" + v->describe() + ")";
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const json input = load_json_file(cfg.input);
  json report = json::object();
  std::vector<std::pair<std::string, std::string>> lines;
  bool valid = true;

  auto poset_lines = [&](const Poset& p) {
    const auto ms = meet_semilattice_violation(p);
    const auto geo = geometric_lattice_violation(p);
    const auto bq = bouquet_violation(p);
    lines.emplace_back("elements", std::to_string(p.size()));
    lines.emplace_back("ranked", bool_str(p.is_ranked()));
    lines.emplace_back("meet-semilattice", with_reason(!ms, ms));
    lines.emplace_back("geometric", with_reason(!geo, geo));
    lines.emplace_back("bouquet", with_reason(!bq, bq));
    report["elements"] = p.size();
    report["ranked"] = p.is_ranked();
    report["meet_semilattice"] = !ms;
    report["geometric"] = !geo;
    report["bouquet"] = !bq;
    if (geo) report["geometric_witness"] = geo->describe();
    if (bq) report["bouquet_witness"] = bq->describe();
    return !bq;
  };

  switch (parse_kind(cfg.kind)) {
    case InputKind::Poset:
      valid = poset_lines(poset_from_json(input));
      break;
    case InputKind::Matroid: {
      const auto m = matroid_from_json(input);
      lines.emplace_back("matroid", "true");
      lines.emplace_back("rank", std::to_string(m.rank()));
      lines.emplace_back("simple", bool_str(m.is_simple()));
      report["matroid"] = true;
      report["rank"] = m.rank();
      report["simple"] = m.is_simple();
      if (m.is_simple()) poset_lines(flat_lattice(m).poset);
      break;
    }
    case InputKind::Bouquet: {
      const auto b = bouquet_from_json(input);
      lines.emplace_back("bouquet-of-matroids", "true");
      report["bouquet_of_matroids"] = true;
      valid = poset_lines(bouquet_flat_poset(b).poset);
      break;
    }
    case InputKind::Com: {
      const auto c = validate_com(covectors_from_json(input));
      lines.emplace_back("com", "true");
      lines.emplace_back("om", bool_str(is_om(c)));
      report["com"] = true;
      report["om"] = is_om(c);
      valid = poset_lines(zero_set_poset(c).poset);
      break;
    }
  }

  if (cfg.format == "json") {
    out << report.dump(1) << "\n";
  } else {
    for (const auto& [k, v] : lines) out << k << ": " << v << "\n";
  }
  return valid ? kExitOk : kExitInvalid;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
  const auto s = load_structure(parse_kind(cfg.kind), load_json_file(cfg.input));
  const auto l = make_labeling(cfg, s.poset);
  const auto m = chain_matrix(s.poset, l, s.weights);
  if (cfg.format == "json") {
    auto j = chain_matrix_to_json(s.poset, m);
    auto atoms = json::object();
    for (Elem a : s.poset.atoms()) {
      atoms[default_var_name(s.weights.atom_variable(a))] = s.poset.name(a);
    }
    j["variables"] = atoms;
    out << j.dump(1) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << "C" << i << " = " << chain_to_string(s.poset, m.chains[i]) << "\n";
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out << (j ? ", " : "") << m.entries[i][j].to_string();
    }
    out << "]\n";
  }
  return kExitOk;
}

int cmd_det(const RunConfig& cfg, std::ostream& out) {
  const auto s = load_structure(parse_kind(cfg.kind), load_json_file(cfg.input));
  const auto l = make_labeling(cfg, s.poset);
  const auto rep = verify_theorem(s.poset, l, s.weights, {});
  const auto rhs = rhs_product(s.poset, s.weights);
  if (cfg.format == "json") {
    json j = {{"det", rep.det->to_string()},
              {"product", rhs.product.to_string()},
              {"factored", factored_string(rhs)},
              {"sign", rep.sign ? json(*rep.sign) : json(nullptr)},
              {"variables", legend_to_json(s.legend)}};
    out << j.dump(1) << "\n";
  } else {
    out << "det = " << rep.det->to_string() << "\n";
    out << "product = " << factored_string(rhs) << "\n";
    out << "sign = " << (rep.sign ? std::to_string(*rep.sign) : "none") << "\n";
  }
  return kExitOk;
}

int cmd_rho(const RunConfig& cfg, std::ostream& out) {
  const auto s = load_structure(parse_kind(cfg.kind), load_json_file(cfg.input));
  const auto& p = s.poset;
  json j = json::object();
  for (Elem x = 0; x < p.size(); ++x) {
    const auto mu = p.mobius(x);
    const auto b = beta(p, x);
    const auto r = rho(p, x);
    if (cfg.format == "json") {
      j[p.name(x)] = {{"rank", p.rank(x)}, {"mobius", mu}, {"beta", b},
                      {"rho", r}};
    } else {
      out << p.name(x) << ": rank=" << p.rank(x) << " mobius=" << mu
          << " beta=" << b << " rho=" << r << "\n";
    }
  }
  if (cfg.format == "json") out << j.dump(1) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto s = load_structure(parse_kind(cfg.kind), load_json_file(cfg.input));
  const auto l = make_labeling(cfg, s.poset);
  VerifyOptions opt;
  opt.mode = cfg.mode == "randomized" ? VerifyMode::Randomized
                                      : VerifyMode::Symbolic;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  const auto rep = verify_theorem(s.poset, l, s.weights, opt);
  if (cfg.format == "json") {
    auto j = report_to_json(rep);
    j["variables"] = legend_to_json(s.legend);
    out << j.dump(1) << "\n";
  } else {
    out << "verdict: " << bool_str(rep.verdict) << "\n";
    out << "sign: " << (rep.sign ? std::to_string(*rep.sign) : "none") << "\n";
    out << "mode: " << mode_name(rep.mode) << "\n";
    if (rep.det) out << "det: " << rep.det->to_string() << "\n";
    out << "product: " << rep.product.to_string() << "\n";
    for (const auto& b : rep.blocks) {
      out << "block " << b.top << " dim=" << b.dim;
      if (b.det) out << " det=" << b.det->to_string();
      out << "\n";
    }
  }
  return rep.verdict ? kExitOk : kExitVerdictFalse;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

int cmd_dot(const RunConfig& cfg, std::ostream& out) {
  const auto s = load_structure(parse_kind(cfg.kind), load_json_file(cfg.input));
  const auto& p = s.poset;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  if (p.is_ranked()) {
    std::map<int, std::vector<Elem>> levels;
    for (Elem x = 0; x < p.size(); ++x) levels[p.rank(x)].push_back(x);
    for (const auto& [r, xs] : levels) {
      out << "  { rank=same;";
      for (Elem x : xs) out << " " << quoted(p.name(x)) << ";";
      out << " }\n";
    }
  } else {
    for (Elem x = 0; x < p.size(); ++x) out << "  " << quoted(p.name(x)) << ";\n";
  }
  for (const auto& [x, y] : p.cover_pairs()) {
    out << "  " << quoted(p.name(x)) << " -> " << quoted(p.name(y)) << ";\n";
  }
  out << "}\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Chain matrices of bouquets of geometric lattices.\n"
      "Randomized verification works modulo the prime 2^62 - 57 = " +
      std::to_string(kVerifyPrime) + "."};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("CHAINLAT_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: CHAINLAT_SEED is not an unsigned integer\n";
      return kExitParse;
    }
  }

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, std::ostream&);
  };
  const std::vector<Sub> subs = {
      {"check", "validate the input structure", cmd_check},
      {"matrix", "print the chain matrix", cmd_matrix},
      {"det", "print the chain matrix determinant and the product", cmd_det},
      {"rho", "print rank, Moebius, beta and rho per element", cmd_rho},
      {"verify", "check the determinant factorization", cmd_verify},
      {"dot", "print the Hasse diagram in DOT", cmd_dot},
  };
  const std::vector<std::string> kinds = {"poset", "matroid", "bouquet", "com"};
  for (const auto& sub : subs) {
    auto* sc = app.add_subcommand(sub.name, sub.help);
    sc->add_option("input", cfg.input, "input JSON file")->required();
    sc->add_option("--kind", cfg.kind, "input kind")
        ->check(CLI::IsMember(kinds))
        ->capture_default_str();
    sc->add_option("--labeling", cfg.labeling,
                   "\"min\" or a JSON file mapping element -> atom")
        ->capture_default_str();
    sc->add_option("--atom-order", cfg.atom_order,
                   "comma separated atom order for the min labeling");
    sc->add_option("--mode", cfg.mode, "verification mode")
        ->check(CLI::IsMember({"symbolic", "randomized"}))
        ->capture_default_str();
    sc->add_option("--trials", cfg.trials, "randomized trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sc->add_option("--seed", cfg.seed,
                   "randomized seed (default: $CHAINLAT_SEED or 0)");
    sc->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text", "dot"}))
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  for (const auto& sub : subs) {
    if (!app.got_subcommand(sub.name)) continue;
    try {
      return sub.run(cfg, std::cout);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      const bool unreadable =
          e.code() == Errc::ParseError || e.code() == Errc::InvalidSign;
      return unreadable ? kExitParse : kExitInvalid;
    }
  }
  return kExitParse;
}
