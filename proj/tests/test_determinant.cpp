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

#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace chainlat;

Polynomial P(const char* s) { return parse_polynomial(s); }

const char* kExampleDet =
    "w1^2*w2^2*w3*w4^2*w5^3 + w1^2*w2*w3^2*w4^2*w5^3 + w1^2*w2*w3*w4^2*w5^4";

struct Loaded {
  Structure s;
  Labeling l;
};

Loaded load_case(const fixtures::Entry& e) {
  auto s = fixtures::load(e);
  auto l = min_labeling(s.poset);
  return {std::move(s), std::move(l)};
}

TEST(Blocks, ExampleSplitsOneOneTwoOne) {
  const auto x = load_case({"example13", InputKind::Poset});
  const auto blocks =
      block_decompose(chain_matrix(x.s.poset, x.l, x.s.weights));
  std::vector<std::size_t> dims;
  for (const auto& b : blocks) dims.push_back(b.matrix.size());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 2, 1}));
}

TEST(Blocks, U23IsOneBlock) {
  const auto x = load_case({"u23", InputKind::Matroid});
  const auto blocks =
      block_decompose(chain_matrix(x.s.poset, x.l, x.s.weights));
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].matrix.size(), 2u);
}

TEST(Blocks, RejectsCouplingEntries) {
  ChainMatrix m;
  m.chains.resize(2);
  m.families = {{0, 0, 1}, {1, 1, 1}};
  m.entries = {{P("w1"), P("w2")}, {P("w2"), P("w3")}};
  try {
    block_decompose(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonZeroOffBlock);
  }
}

TEST(Bareiss, SmallCases) {
  EXPECT_EQ(det_bareiss({}), Polynomial::one());
  EXPECT_EQ(det_bareiss({{P("w1*w4")}}), P("w1*w4"));
  const PolyMatrix r3 = {{P("w2*w3 + w3*w5"), P("-w3*w5")},
                         {P("-w3*w5"), P("w2*w5 + w3*w5")}};
  EXPECT_EQ(det_bareiss(r3), P("w2*w3*w5*(w2 + w3 + w5)"));
  EXPECT_EQ(det_cofactor(r3), P("w2*w3*w5*(w2 + w3 + w5)"));
}

TEST(Bareiss, NeedsPivoting) {
  const PolyMatrix m = {{0, P("w1"), 0}, {P("w2"), 0, 0}, {0, 0, P("w3")}};
  EXPECT_EQ(det_bareiss(m), P("-w1*w2*w3"));
  EXPECT_EQ(det_cofactor(m), P("-w1*w2*w3"));
  const PolyMatrix singular = {{P("w1"), P("w2")}, {P("2*w1"), P("2*w2")}};
  EXPECT_TRUE(det_bareiss(singular).is_zero());
}

TEST(Cofactor, Basics) {
  EXPECT_EQ(det_cofactor({{P("w1 + 3")}}), P("w1 + 3"));
  EXPECT_EQ(det_cofactor({{P("w1"), 0}, {0, P("w2")}}), P("w1*w2"));
  PolyMatrix big(kCofactorMaxDim + 1,
                 std::vector<Polynomial>(kCofactorMaxDim + 1));
  try {
    det_cofactor(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(DetMod, MatchesIntegerDeterminant) {
  constexpr auto p = kVerifyPrime;
  EXPECT_EQ(det_mod({{2, 1}, {1, 3}}, p), 5u);
  EXPECT_EQ(det_mod({{0, 1}, {1, 0}}, p), p - 1);
  EXPECT_EQ(det_mod({}, p), 1u);
}

TEST(Rhs, Example) {
  const auto x = load_case({"example13", InputKind::Poset});
  const auto r = rhs_product(x.s.poset, x.s.weights);
  EXPECT_EQ(r.product.to_string(), kExampleDet);
  const std::map<std::string, std::int64_t> want = {
      {"0", 0},  {"a1", 2}, {"a2", 1}, {"a3", 1}, {"a4", 2},
      {"a5", 3}, {"r1", 0}, {"r2", 0}, {"r3", 1}, {"r4", 0}};
  EXPECT_EQ(r.exponents, want);
  EXPECT_EQ(factored_string(r), "w1^2*w2*w3*w4^2*w5^3*(w2 + w3 + w5)");
}

TEST(Rhs, OneAtomAndU23) {
  const auto one = load_case({"one_atom", InputKind::Poset});
  EXPECT_EQ(rhs_product(one.s.poset, one.s.weights).product, P("w1"));
  const auto u = load_case({"u23", InputKind::Matroid});
  EXPECT_EQ(rhs_product(u.s.poset, u.s.weights).product,
            P("w1*w2*w3*(w1 + w2 + w3)"));
}

TEST(Verify, ExampleSymbolic) {
  const auto x = load_case({"example13", InputKind::Poset});
  const auto rep = verify_theorem(x.s.poset, x.l, x.s.weights);
  EXPECT_TRUE(rep.verdict);
  ASSERT_TRUE(rep.sign);
  EXPECT_EQ(*rep.sign, 1);
  ASSERT_TRUE(rep.det);
  EXPECT_EQ(rep.det->to_string(), kExampleDet);
  ASSERT_EQ(rep.blocks.size(), 4u);
  EXPECT_EQ(*rep.blocks[2].det, P("w2*w3*w5*(w2 + w3 + w5)"));
}

TEST(Verify, NonMinimalConvexLabeling) {
  const auto x = load_case({"example13", InputKind::Poset});
  const auto l = labeling_from_json(x.s.poset,
                                    fixtures::read("labeling_example13_max"));
  EXPECT_TRUE(verify_theorem(x.s.poset, l, x.s.weights).verdict);
}

TEST(Verify, OneAtomAndU23) {
  const auto one = load_case({"one_atom", InputKind::Poset});
  const auto r1 = verify_theorem(one.s.poset, one.l, one.s.weights);
  EXPECT_TRUE(r1.verdict);
  EXPECT_EQ(*r1.det, P("w1"));
  EXPECT_EQ(r1.sign, 1);

  const auto u = load_case({"u23", InputKind::Matroid});
  const auto r2 = verify_theorem(u.s.poset, u.l, u.s.weights);
  EXPECT_TRUE(r2.verdict);
  EXPECT_EQ(*r2.det, P("w1*w2*w3*(w1 + w2 + w3)"));
}

TEST(Verify, RejectsNonBouquet) {
  const auto p = fixtures::poset("fig1_right");
  try {
    verify_theorem(p, Labeling{}, WeightAssignment::atoms_in_order(p));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotABouquet);
  }
}

TEST(Verify, RandomizedNeedsTrials) {
  const auto x = load_case({"one_atom", InputKind::Poset});
  try {
    verify_theorem(x.s.poset, x.l, x.s.weights,
                   {VerifyMode::Randomized, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
  }
}

TEST(Verify, RandomizedIsDeterministicPerSeed) {
  const auto x = load_case({"k4_minus_edge", InputKind::Matroid});
  const VerifyOptions opt{VerifyMode::Randomized, 5, 42};
  const auto a = verify_theorem(x.s.poset, x.l, x.s.weights, opt);
  const auto b = verify_theorem(x.s.poset, x.l, x.s.weights, opt);
  EXPECT_TRUE(a.verdict);
  EXPECT_EQ(a.sign, b.sign);
  EXPECT_EQ(a.trials, 5);
  EXPECT_EQ(a.prime, kVerifyPrime);
  EXPECT_FALSE(a.det);
}

// Supports that disagree with the order make the identity fail; both modes
// must say so.
TEST(Verify, ReportsFalseForMismatchedWeights) {
  const auto p = fixtures::poset("example13");
  std::vector<std::vector<Var>> support(p.size());
  for (Elem a : p.atoms()) support[a] = {static_cast<Var>(a)};
  for (Elem x = 0; x < p.size(); ++x) {
    if (!p.is_atom(x) && x != *p.bottom()) {
      for (Elem a : p.atoms_below(x)) support[x].push_back(static_cast<Var>(a));
    }
  }
  support[p.lookup("r3")].pop_back();  // drop a5 from r3
  const auto w = WeightAssignment::with_support(p, support, {});
  const auto l = min_labeling(p);
  const auto sym = verify_theorem(p, l, w);
  EXPECT_FALSE(sym.verdict);
  EXPECT_FALSE(sym.sign);
  const auto rnd = verify_theorem(p, l, w, {VerifyMode::Randomized, 20, 3});
  EXPECT_FALSE(rnd.verdict);
}

TEST(Property, EveryFixtureVerifies) {
  for (const auto& e : fixtures::bouquets()) {
    const auto x = load_case(e);
    const auto sym = verify_theorem(x.s.poset, x.l, x.s.weights);
    EXPECT_TRUE(sym.verdict) << e.name;
    const auto rnd = verify_theorem(x.s.poset, x.l, x.s.weights,
                                    {VerifyMode::Randomized, 20, 7});
    EXPECT_EQ(sym.verdict, rnd.verdict) << e.name;
    EXPECT_EQ(sym.sign, rnd.sign) << e.name;
  }
}

TEST(Property, BareissMatchesCofactor) {
  for (const auto& e : fixtures::bouquets()) {
    const auto x = load_case(e);
    const auto cm = chain_matrix(x.s.poset, x.l, x.s.weights);
    Polynomial product = 1;
    for (const auto& b : block_decompose(cm)) {
      const auto d = det_bareiss(b.matrix);
      product *= d;
      if (b.matrix.size() <= 6) {
        EXPECT_EQ(d, det_cofactor(b.matrix)) << e.name;
      }
    }
    if (cm.dim() <= 6) {
      EXPECT_EQ(product, det_cofactor(cm.entries)) << e.name;
    }
  }
}

TEST(Property, BareissOnRandomMatrices) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3), var(1, 3), dim(1, 5);
  for (int it = 0; it < 60; ++it) {
    const int n = dim(rng);
    PolyMatrix m(n, std::vector<Polynomial>(n));
    for (auto& row : m) {
      for (auto& e : row) {
        e = Polynomial(coeff(rng)) + coeff(rng) * Polynomial::variable(var(rng));
      }
    }
    EXPECT_EQ(det_bareiss(m), det_cofactor(m));
  }
}

TEST(Property, ExponentsMatchBruteForce) {
  for (const auto& e : fixtures::bouquets()) {
    const auto x = load_case(e);
    const auto& p = x.s.poset;
    if (p.size() == 0) continue;
    const auto r = oracle::RawPoset::from(p);
    const auto rhs = rhs_product(p, x.s.weights);
    for (Elem v = 0; v < p.size(); ++v) {
      EXPECT_EQ(rhs.exponents.at(p.name(v)), oracle::rho(r, v)) << e.name;
    }
  }
}

}  // namespace
