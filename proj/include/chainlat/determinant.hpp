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

// Exact determinants of chain matrices and the check
//
//   det(chain matrix) == +/- prod over x of w(x)^rho(x).
//
// Symbolic mode multiplies Bareiss determinants of the diagonal blocks and
// compares polynomials. Randomized mode evaluates the matrix at random points
// modulo a fixed 62-bit prime and eliminates over that field.

#pragma once

#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chainlat/chains.hpp"
#include "chainlat/error.hpp"
#include "chainlat/polyring.hpp"
#include "chainlat/poset.hpp"

namespace chainlat {

/// 2^62 - 57, the largest prime below 2^62.
inline constexpr std::uint64_t kVerifyPrime = 4611686018427387847ULL;
inline constexpr std::int64_t kSampleMax = 1000000;
inline constexpr int kDefaultTrials = 20;
inline constexpr std::size_t kCofactorMaxDim = 8;

struct Block {
  Elem top;
  PolyMatrix matrix;
};

/// Splits a family-grouped chain matrix into its diagonal blocks after
/// checking that every entry outside them is zero.
inline std::vector<Block> block_decompose(const ChainMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> family_of(n);
  for (std::size_t f = 0; f < m.families.size(); ++f) {
    const auto& fam = m.families[f];
    for (std::size_t i = fam.begin; i < fam.begin + fam.size; ++i) {
      family_of[i] = f;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (family_of[i] != family_of[j] && !m.entries[i][j].is_zero()) {
        throw Error(Errc::NonZeroOffBlock,
                    "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") couples two families: " +
                        m.entries[i][j].to_string());
      }
    }
  }
  std::vector<Block> blocks;
  for (const auto& fam : m.families) {
    Block b{fam.top, PolyMatrix(fam.size, std::vector<Polynomial>(fam.size))};
    for (std::size_t i = 0; i < fam.size; ++i) {
      for (std::size_t j = 0; j < fam.size; ++j) {
        b.matrix[i][j] = m.entries[fam.begin + i][fam.begin + j];
      }
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

/// Fraction-free single-step elimination. Each update divides exactly by the
/// previous pivot; a row swap flips the sign.
inline Polynomial det_bareiss(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::one();
  bool negate = false;
  Polynomial prev = Polynomial::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return Polynomial::zero();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = Polynomial::zero();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace detail {

inline Polynomial cofactor_rec(const PolyMatrix& a,
                               const std::vector<std::size_t>& cols,
                               std::size_t row) {
  if (cols.empty()) return Polynomial::one();
  Polynomial acc;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& e = a[row][cols[c]];
    if (e.is_zero()) continue;
    auto rest = cols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(c));
    auto minor = e * cofactor_rec(a, rest, row + 1);
    if (c % 2 == 0) {
      acc += minor;
    } else {
      acc -= minor;
    }
  }
  return acc;
}

}  // namespace detail

/// Laplace expansion along the first row. Independent of det_bareiss; kept
/// for cross-checking small blocks.
inline Polynomial det_cofactor(const PolyMatrix& a) {
  if (a.size() > kCofactorMaxDim) {
    throw Error(Errc::TooLarge, "cofactor expansion limited to dimension " +
                                    std::to_string(kCofactorMaxDim));
  }
  std::vector<std::size_t> cols(a.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return detail::cofactor_rec(a, cols, 0);
}

/// Determinant over Z/pZ by Gaussian elimination.
inline std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> a,
                             std::uint64_t p) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = modp::sub(0, det, p);
    }
    det = modp::mul(det, a[k][k], p);
    const std::uint64_t inv = modp::inv(a[k][k], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const std::uint64_t f = modp::mul(a[i][k], inv, p);
      for (std::size_t j = k; j < n; ++j) {
        a[i][j] = modp::sub(a[i][j], modp::mul(f, a[k][j], p), p);
      }
    }
  }
  return det;
}

struct RhsProduct {
  Polynomial product;
  std::map<std::string, std::int64_t> exponents;
  /// (w(x), rho(x)) for every x with rho(x) > 0, in element order.
  std::vector<std::pair<Polynomial, std::uint64_t>> factors;
};

/// prod over x of w(x)^rho(x).
inline RhsProduct rhs_product(const Poset& p, const WeightAssignment& w) {
  RhsProduct out;
  for (Elem x = 0; x < p.size(); ++x) {
    const auto e = rho(p, x);
    out.exponents.emplace(p.name(x), e);
    if (e < 0) {
      throw Error(Errc::NegativeExponent,
                  "rho(" + p.name(x) + ") = " + std::to_string(e), {p.name(x)});
    }
    if (p.bottom() && x == *p.bottom() && e != 0) {
      throw Error(Errc::NegativeExponent, "rho of the bottom must vanish");
    }
    if (e > 0) out.factors.emplace_back(weight(p, x, w), e);
  }
  out.product = power_product(out.factors);
  return out;
}

/// Factored text such as "w1^2*(w2 + w3 + w5)".
inline std::string factored_string(const RhsProduct& r,
                                   const VarNamer& name = default_var_name) {
  if (r.factors.empty()) return "1";
  std::string out;
  for (const auto& [f, k] : r.factors) {
    if (!out.empty()) out += "*";
    const bool wrap = f.num_terms() > 1 ||
                      (f.num_terms() == 1 && f.leading_term().second != 1);
    out += wrap ? "(" + f.to_string(name) + ")" : f.to_string(name);
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

enum class VerifyMode { Symbolic, Randomized };

inline std::string mode_name(VerifyMode m) {
  return m == VerifyMode::Symbolic ? "symbolic" : "randomized";
}

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Symbolic;
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
};

struct BlockReport {
  std::string top;
  std::size_t dim;
  std::optional<Polynomial> det;  // symbolic mode only
};

struct VerificationReport {
  bool verdict = false;
  std::optional<int> sign;
  std::optional<Polynomial> det;  // symbolic mode only
  Polynomial product;
  std::map<std::string, std::int64_t> exponents;
  std::vector<BlockReport> blocks;
  VerifyMode mode = VerifyMode::Symbolic;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = kVerifyPrime;
};

namespace detail {

// Signs s in {+1, -1} with d == s * r (mod p).
inline std::set<int> matching_signs(std::uint64_t d, std::uint64_t r,
                                    std::uint64_t p) {
  std::set<int> s;
  if (d == r) s.insert(1);
  if (d == modp::sub(0, r, p)) s.insert(-1);
  return s;
}

inline std::optional<int> pick_sign(const std::set<int>& s) {
  if (s.empty()) return std::nullopt;
  return s.count(1) ? 1 : -1;
}

}  // namespace detail

/// Checks the determinant identity for a bouquet. With support weights the
/// atom-variable determinant is mapped to ground variables before comparing.
/// The sign is found by trying +1 and then -1.
inline VerificationReport verify_theorem(const Poset& p, const Labeling& l,
                                         const WeightAssignment& w,
                                         const VerifyOptions& opt = {}) {
  require_bouquet(p);
  if (opt.mode == VerifyMode::Randomized && opt.trials < 1) {
    throw Error(Errc::ParseError, "randomized mode needs at least one trial");
  }
  VerificationReport rep;
  rep.mode = opt.mode;
  rep.seed = opt.seed;
  rep.trials = opt.mode == VerifyMode::Randomized ? opt.trials : 0;

  const auto cm = chain_matrix(p, l, w);
  auto blocks = block_decompose(cm);
  const auto rhs = rhs_product(p, w);
  rep.product = rhs.product;
  rep.exponents = rhs.exponents;
  const auto subst = w.has_support() ? w.atom_substitution(p)
                                     : std::map<Var, Polynomial>{};

  if (opt.mode == VerifyMode::Symbolic) {
    // Blocks are independent; eliminate them concurrently.
    std::vector<std::future<Polynomial>> dets;
    for (const auto& b : blocks) {
      dets.push_back(std::async(std::launch::async,
                                [&m = b.matrix] { return det_bareiss(m); }));
    }
    Polynomial det = Polynomial::one();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      auto d = dets[i].get();
      det *= d;
      rep.blocks.push_back({p.name(blocks[i].top), blocks[i].matrix.size(), d});
    }
    if (w.has_support()) det = substitute(det, subst);
    if (det == rhs.product) {
      rep.sign = 1;
    } else if (det == -rhs.product) {
      rep.sign = -1;
    }
    rep.verdict = rep.sign.has_value();
    rep.det = std::move(det);
    return rep;
  }

  // Randomized: draw values for the free variables (atom or ground), derive
  // atom values, evaluate both sides mod the prime.
  std::set<Var> free_vars;
  if (w.has_support()) {
    for (Elem x = 0; x < p.size(); ++x) {
      for (Var v : w.support(x)) free_vars.insert(v);
    }
  } else {
    for (Elem a : p.atoms()) free_vars.insert(w.atom_variable(a));
  }
  std::set<int> signs{1, -1};
  for (const auto& b : blocks) {
    rep.blocks.push_back({p.name(b.top), b.matrix.size(), std::nullopt});
  }
  for (int t = 0; t < opt.trials; ++t) {
    // Independent stream per trial.
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed),
                      static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 gen(seq);
    std::uniform_int_distribution<std::int64_t> dist(1, kSampleMax);
    std::map<Var, BigInt> point;
    for (Var v : free_vars) point.emplace(v, BigInt(dist(gen)));
    std::map<Var, BigInt> atom_point = point;
    if (w.has_support()) {
      atom_point.clear();
      for (const auto& [v, img] : subst) {
        atom_point.emplace(v, BigInt(eval_mod(img, point, kVerifyPrime)));
      }
    }
    std::uint64_t d = 1;
    for (const auto& b : blocks) {
      std::vector<std::vector<std::uint64_t>> num(
          b.matrix.size(), std::vector<std::uint64_t>(b.matrix.size()));
      for (std::size_t i = 0; i < b.matrix.size(); ++i) {
        for (std::size_t j = 0; j < b.matrix.size(); ++j) {
          num[i][j] = eval_mod(b.matrix[i][j], atom_point, kVerifyPrime);
        }
      }
      d = modp::mul(d, det_mod(std::move(num), kVerifyPrime), kVerifyPrime);
    }
    std::uint64_t r = 1;
    for (const auto& [f, k] : rhs.factors) {
      r = modp::mul(r, modp::pow(eval_mod(f, point, kVerifyPrime), k,
                                 kVerifyPrime),
                    kVerifyPrime);
    }
    std::set<int> ok = detail::matching_signs(d, r, kVerifyPrime);
    std::set<int> keep;
    for (int s : signs) {
      if (ok.count(s)) keep.insert(s);
    }
    signs = std::move(keep);
  }
  rep.sign = detail::pick_sign(signs);
  rep.verdict = rep.sign.has_value();
  return rep;
}

}  // namespace chainlat
