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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace chainlat;

Errc build_error(std::vector<std::string> el,
                 std::vector<std::pair<std::string, std::string>> cov) {
  try {
    Poset::build(std::move(el), cov);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "build succeeded";
  return Errc::ParseError;
}

class ExamplePoset : public ::testing::Test {
 protected:
  Poset p = fixtures::poset("example13");
  Elem at(const char* id) const { return p.lookup(id); }
};

TEST_F(ExamplePoset, Shape) {
  EXPECT_EQ(p.size(), 10u);
  EXPECT_EQ(p.cover_pairs().size(), 14u);
  EXPECT_EQ(p.bottom(), at("0"));
  std::vector<std::string> maxes;
  for (Elem r : p.maximal_elements()) maxes.push_back(p.name(r));
  EXPECT_EQ(maxes, (std::vector<std::string>{"r1", "r2", "r3", "r4"}));
  EXPECT_EQ(p.atoms().size(), 5u);
}

TEST_F(ExamplePoset, Joins) {
  EXPECT_EQ(p.join(at("a5"), at("a2")), at("r3"));
  EXPECT_EQ(p.join(at("a1"), at("a2")), std::nullopt);
  EXPECT_EQ(p.join(at("a1"), at("a1")), at("a1"));
  EXPECT_EQ(p.meet(at("r1"), at("r2")), at("a1"));
  EXPECT_EQ(p.meet(at("r1"), at("r3")), at("0"));
}

TEST_F(ExamplePoset, Ranks) {
  EXPECT_TRUE(p.is_ranked());
  EXPECT_EQ(p.rank(at("0")), 0);
  EXPECT_EQ(p.rank(at("a1")), 1);
  EXPECT_EQ(p.rank(at("r1")), 2);
}

TEST_F(ExamplePoset, Mobius) {
  EXPECT_EQ(p.mobius(at("a3"), at("a3")), 1);
  EXPECT_EQ(p.mobius(at("a1")), -1);
  EXPECT_EQ(p.mobius(at("r3")), 2);
  EXPECT_EQ(p.mobius(at("r1")), 1);
  EXPECT_EQ(p.mobius(at("a1"), at("r3")), 0);
}

TEST_F(ExamplePoset, BetaAndRho) {
  EXPECT_EQ(beta(p, at("a1")), 1);
  EXPECT_EQ(beta(p, at("r1")), 0);
  EXPECT_EQ(beta(p, at("0")), 0);
  EXPECT_EQ(rho(p, at("a1")), 2);
  EXPECT_EQ(rho(p, at("r1")), 0);
  EXPECT_EQ(rho(p, at("a5")), 3);
  EXPECT_EQ(rho(p, at("r3")), 1);
}

TEST_F(ExamplePoset, StructureChecks) {
  EXPECT_TRUE(is_meet_semilattice(p));
  EXPECT_TRUE(is_bouquet(p));
  EXPECT_FALSE(is_geometric_lattice(p));
  EXPECT_TRUE(is_geometric_lattice(p.interval(at("0"), at("r3"))));
}

TEST_F(ExamplePoset, Intervals) {
  const auto d = p.interval(at("0"), at("r1"));
  EXPECT_EQ(d.size(), 4u);
  for (const char* id : {"0", "a1", "a4", "r1"}) EXPECT_TRUE(d.find(id)) << id;
  EXPECT_EQ(p.interval(at("a2"), at("a2")).size(), 1u);
  try {
    p.interval(at("a1"), at("r3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotComparable);
  }
}

TEST_F(ExamplePoset, InvariantTable) {
  const auto t = invariant_table(p, IntInvariantTable::Kind::Rho);
  EXPECT_EQ(t.values.at("a1"), 2);
  EXPECT_EQ(t.values.at("r4"), 0);
}

TEST(Poset, FigureOneRightIsNotGeometric) {
  const auto p = fixtures::poset("fig1_right");
  const auto v = geometric_lattice_violation(p);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, Violation::Kind::NotSemimodular);
  EXPECT_EQ(v->witness, (std::vector<std::string>{"x", "y"}));
  EXPECT_FALSE(is_bouquet(p));
  EXPECT_TRUE(is_meet_semilattice(p));
  EXPECT_FALSE(p.is_ranked());
}

TEST(Poset, SmallCases) {
  const auto one = fixtures::poset("one_atom");
  EXPECT_TRUE(is_bouquet(one));
  EXPECT_TRUE(is_geometric_lattice(one));
  EXPECT_EQ(rho(one, one.lookup("a")), 1);

  const auto anti = fixtures::poset("antichain");
  EXPECT_FALSE(is_meet_semilattice(anti));
  EXPECT_FALSE(is_bouquet(anti));
  EXPECT_EQ(anti.bottom(), std::nullopt);

  const auto chain = fixtures::poset("chain_0ab");
  EXPECT_TRUE(is_meet_semilattice(chain));
  EXPECT_FALSE(is_geometric_lattice(chain));  // b is not a join of atoms

  const auto empty = fixtures::poset("empty");
  EXPECT_TRUE(is_bouquet(empty));
}

TEST(Poset, RejectsBadInput) {
  EXPECT_EQ(build_error({"a", "a"}, {}), Errc::DuplicateElement);
  EXPECT_EQ(build_error({"a", ""}, {}), Errc::UnknownElement);
  EXPECT_EQ(build_error({"a"}, {{"a", "b"}}), Errc::UnknownElement);
  EXPECT_EQ(build_error({"a", "b"}, {{"a", "b"}, {"a", "b"}}),
            Errc::RedundantCover);
  EXPECT_EQ(build_error({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
            Errc::RedundantCover);
  EXPECT_EQ(build_error({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
            Errc::CycleDetected);
  EXPECT_EQ(build_error({"a"}, {{"a", "a"}}), Errc::CycleDetected);
}

TEST(Poset, RankOfUnrankedThrows) {
  const auto p = fixtures::poset("fig1_right");
  try {
    p.rank(p.lookup("1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotRanked);
  }
}

TEST(Poset, FromOrderIsTransitiveReduction) {
  const auto p = Poset::from_order({"0", "a", "b", "1"}, [](Elem x, Elem y) {
    return x == 0 || y == 3 || x == y;
  });
  EXPECT_EQ(p.cover_pairs().size(), 4u);
  EXPECT_TRUE(is_geometric_lattice(p));
}

std::vector<std::string> poset_fixtures() {
  return {"example13", "fig1_right", "one_atom", "chain_0ab", "antichain",
          "empty"};
}

std::vector<Poset> all_posets() {
  std::vector<Poset> out;
  for (const auto& n : poset_fixtures()) out.push_back(fixtures::poset(n));
  for (const auto& e : fixtures::bouquets()) out.push_back(fixtures::load(e).poset);
  return out;
}

// Sum of mu(x, z) over x <= z <= y vanishes for x < y.
TEST(Property, MobiusRowSums) {
  for (const auto& p : all_posets()) {
    for (Elem x = 0; x < p.size(); ++x) {
      for (Elem y = 0; y < p.size(); ++y) {
        if (!p.less(x, y)) continue;
        std::int64_t s = 0;
        for (Elem z = 0; z < p.size(); ++z) {
          if (p.leq(x, z) && p.leq(z, y)) s += p.mobius(x, z);
        }
        EXPECT_EQ(s, 0);
      }
    }
  }
}

TEST(Property, AgreesWithBruteForce) {
  for (const auto& p : all_posets()) {
    const auto r = oracle::RawPoset::from(p);
    for (Elem x = 0; x < p.size(); ++x) {
      for (Elem y = 0; y < p.size(); ++y) {
        EXPECT_EQ(p.mobius(x, y), oracle::mobius(r, x, y));
      }
    }
    if (!p.bottom() || !p.is_ranked()) continue;
    for (Elem x = 0; x < p.size(); ++x) {
      EXPECT_EQ(beta(p, x), oracle::beta(r, x));
      EXPECT_EQ(rho(p, x), oracle::rho(r, x));
    }
  }
}

TEST(Property, RanksAndBouquets) {
  for (const auto& p : all_posets()) {
    if (p.bottom() && p.is_ranked()) {
      EXPECT_EQ(p.rank(*p.bottom()), 0);
      EXPECT_EQ(beta(p, *p.bottom()), 0);
      for (Elem a : p.atoms()) EXPECT_EQ(p.rank(a), 1);
    }
    if (is_bouquet(p)) {
      EXPECT_TRUE(is_meet_semilattice(p));
      for (Elem r : p.maximal_elements()) {
        EXPECT_TRUE(is_geometric_lattice(p.interval(*p.bottom(), r)));
      }
    }
  }
}

// (x meet y covered by x) implies (y covered by x join y).
TEST(Property, SemimodularityExhaustive) {
  for (const auto& p : all_posets()) {
    if (!is_geometric_lattice(p)) continue;
    for (Elem x = 0; x < p.size(); ++x) {
      for (Elem y = 0; y < p.size(); ++y) {
        if (p.covers(*p.meet(x, y), x)) {
          EXPECT_TRUE(p.covers(y, *p.join(x, y)));
        }
      }
    }
  }
}

}  // namespace
