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

#include <algorithm>

#include "arrwb/arrangement.hpp"
#include "arrwb/arrangement_json.hpp"
#include "arrwb/catalog.hpp"
#include "arrwb/error.hpp"
#include "oracles/exterior.hpp"
#include "test_support.hpp"

namespace arrwb {
namespace {

using testing::R;
using testing::W;

Arrangement rows(std::vector<std::vector<Rational>> r, std::vector<Rational> c = {}) {
  return Arrangement::build(std::move(r), std::move(c));
}

// Circuits by brute force over all subsets, independent of the library.
std::vector<IndexSet> oracle_circuits(const Arrangement& a) {
  const auto raw = testing::raw(a);
  std::vector<std::uint32_t> dependent;
  for (std::uint32_t s = 1; s < (1u << a.size()); ++s) {
    if (oracle::consistent(raw, s) && oracle::dependent(raw, s)) dependent.push_back(s);
  }
  std::vector<IndexSet> out;
  for (auto s : dependent) {
    bool minimal = true;
    for (auto t : dependent) minimal = minimal && !(t != s && (t & s) == t);
    if (!minimal) continue;
    IndexSet c;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (s >> i & 1) c.push_back(i);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Build, PencilRows) {
  const auto a = rows({{1, 0}, {0, 1}, {1, -1}});
  EXPECT_TRUE(a.is_central());
  EXPECT_EQ(a.rank(), 2u);
  EXPECT_EQ(a.size(), 3u);
}

TEST(Build, X3) {
  const auto a = x3_arrangement();
  EXPECT_TRUE(a.is_central());
  EXPECT_EQ(a.size(), 6u);
  EXPECT_EQ(a.dim(), 3u);
}

TEST(Build, Errors) {
  EXPECT_THROW(rows({{0, 0}}), InvalidArrangement);
  EXPECT_THROW(rows({{1, 1}, {2, 2}}), InvalidArrangement);
  EXPECT_THROW(rows({{1, 0}, {0, 1, 2}}), InvalidArrangement);
  // Parallel but distinct affine lines are allowed.
  EXPECT_NO_THROW(rows({{1, 0}, {1, 0}}, {0, 1}));
  EXPECT_THROW(rows({{1, 0}, {2, 0}}, {1, 2}), InvalidArrangement);
}

TEST(Circuits, Examples) {
  EXPECT_EQ(pencil(3).circuits(), (std::vector<IndexSet>{{0, 1, 2}}));
  EXPECT_TRUE(boolean_arrangement(3).circuits().empty());
  const auto c = x3_arrangement().circuits();
  EXPECT_NE(std::find(c.begin(), c.end(), IndexSet{0, 1, 3}), c.end());
}

TEST(Circuits, MatchBruteForceOnCatalog) {
  for (const auto& e : catalog()) {
    if (e.arrangement.size() > 9) continue;
    auto lib = e.arrangement.circuits();
    std::sort(lib.begin(), lib.end());
    EXPECT_EQ(lib, oracle_circuits(e.arrangement)) << e.name;
  }
}

TEST(Circuits, SizeAtLeastThreeWithoutProportionalForms) {
  for (const auto& e : catalog()) {
    for (const auto& c : e.arrangement.circuits()) EXPECT_GE(c.size(), 3u) << e.name;
  }
}

TEST(Rank, Essential) {
  EXPECT_TRUE(boolean_arrangement(3).is_essential());
  const auto a = rows({{1, 0, 0}, {1, 1, 0}});
  EXPECT_FALSE(a.is_essential());
  EXPECT_EQ(a.rank(), 2u);
  EXPECT_TRUE(er9().is_essential());
  EXPECT_EQ(er9().rank(), 4u);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(pencil(3).is_irreducible());
  EXPECT_FALSE(boolean_arrangement(2).is_irreducible());
  EXPECT_TRUE(x3_arrangement().is_irreducible());
  EXPECT_THROW(generic_affine_lines(3).is_irreducible(), InvalidArrangement);
}

TEST(Cone, SingleAffinePoint) {
  const auto a = rows({{1}}, {-1});
  const auto [c, w] = cone(a, W("2"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.form(0).to_string(), "x0");
  EXPECT_EQ(c.form(1), testing::P(c.ring(), "x1 - x0"));
  EXPECT_EQ(w, W("-2, 2"));
}

TEST(Cone, GenericLinesAndWeightSum) {
  const auto a = generic_affine_lines(3);
  const auto [c, w] = cone(a, W("1, 2, 3"));
  EXPECT_TRUE(c.is_central());
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c.rank(), 3u);
  EXPECT_EQ(w.sum(), 0);
  EXPECT_THROW(cone(pencil(3), W("1,1,1")), InvalidArrangement);
}

TEST(Cone, RankIncreasesByOne) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto a = generic_affine_lines(k);
    EXPECT_EQ(cone(a, WeightVector(std::vector<Rational>(k, 1))).first.rank(), a.rank() + 1);
  }
  const auto d = discriminantal_2_2(0, 3);
  EXPECT_EQ(cone(d, WeightVector(std::vector<Rational>(5, 1))).first.rank(), d.rank() + 1);
}

TEST(Localization, Examples) {
  const auto x3 = x3_arrangement();
  const Flat f = x3.flat_of(IndexSet{0, 1});
  EXPECT_EQ(f.hyperplanes, (IndexSet{0, 1, 3}));
  const auto loc = x3.localization(f);
  EXPECT_EQ(loc.size(), 3u);
  EXPECT_EQ(loc.rank(), 2u);
  EXPECT_EQ(loc.circuits().size(), 1u);
  EXPECT_EQ(x3.localization(x3.flat_of(IndexSet{0})).size(), 1u);
  const Flat top = x3.flat_of(IndexSet{0, 1, 2});
  EXPECT_EQ(x3.localization(top), x3);
  EXPECT_THROW(x3.localization(Flat{{0, 1}, 2}), InvalidArrangement);
}

TEST(Localization, RankEqualsFlatRank) {
  for (const auto& e : catalog()) {
    if (!e.arrangement.is_central()) continue;
    for (const auto& f : e.arrangement.flats(3)) EXPECT_EQ(e.arrangement.localization(f).rank(), f.rank) << e.name;
  }
}

TEST(DirectSum, Examples) {
  const auto x = rows({{1}});
  const auto s = direct_sum(x, x);
  EXPECT_EQ(s.normals(), boolean_arrangement(2).normals());
  const auto p = direct_sum(pencil(3), x);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.dim(), 3u);
  EXPECT_FALSE(p.is_irreducible());
  auto c = p.circuits();
  EXPECT_EQ(c, (std::vector<IndexSet>{{0, 1, 2}}));
  const auto pp = direct_sum(pencil(3), pencil(3));
  EXPECT_EQ(pp.circuits(), (std::vector<IndexSet>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_FALSE(direct_sum(x3_arrangement(), pencil(4)).is_irreducible());
}

TEST(Flats, CountsOnX3) {
  const auto flats = x3_arrangement().flats(3);
  std::size_t rank2 = 0;
  std::size_t triple = 0;
  for (const auto& f : flats) {
    if (f.rank == 2) {
      ++rank2;
      if (f.hyperplanes.size() == 3) ++triple;
    }
  }
  // Triple lines {x,y,x+y}, {x,z,x+z}, {y,z,y+z} plus the remaining pairs.
  EXPECT_EQ(triple, 3u);
  EXPECT_EQ(rank2, 3u + (15u - 9u));
}

TEST(Json, RoundTrip) {
  for (const auto& e : catalog()) {
    const std::string text = arrangement_to_json(e.arrangement);
    const Arrangement back = arrangement_from_json(text);
    EXPECT_EQ(back, e.arrangement) << e.name;
    EXPECT_EQ(arrangement_to_json(back), text) << e.name;
  }
}

TEST(Json, Parse) {
  const auto a = arrangement_from_json(R"({"variables": 2, "forms": [[1, 0, "-1/2"], ["2/3", 1, 0]]})");
  EXPECT_FALSE(a.is_central());
  EXPECT_EQ(a.constant(0), R(-1, 2));
  EXPECT_EQ(a.normal(1)[0], R(2, 3));
  EXPECT_THROW(arrangement_from_json(R"({"variables": 2, "forms": [[1, 0]]})"), Error);
  EXPECT_THROW(arrangement_from_json("not json"), Error);
}

TEST(Weights, ParseAndScale) {
  const auto w = W("1, -1/2, 3");
  EXPECT_EQ(w.sum(), R(7, 2));
  EXPECT_EQ(w.scaled(2), W("2,-1,6"));
  EXPECT_TRUE(W("0,0").is_zero());
}

}  // namespace
}  // namespace arrwb
