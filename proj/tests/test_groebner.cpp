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

#include <cstdint>

#include "arrwb/catalog.hpp"
#include "arrwb/critical_ideal.hpp"
#include "arrwb/error.hpp"
#include "arrwb/groebner.hpp"
#include "arrwb/harness.hpp"
#include "oracles/resultant.hpp"
#include "test_support.hpp"

namespace arrwb {
namespace {

using testing::P;
using testing::W;

PolyIdeal ideal(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(ring, g));
  return PolyIdeal(ring, ps);
}

// Applies x_i -> sum_j m_ij x_j to every generator.
PolyIdeal change_coordinates(const PolyIdeal& in, const std::vector<std::vector<Rational>>& m) {
  const RingPtr& ring = in.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
  const RingPtr big = Ring::make(names);
  const RingPtr out = Ring::standard(n, "u");
  std::vector<std::size_t> embed(n), project(2 * n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    embed[i] = i;
    project[n + i] = i;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : in.generators()) {
    Polynomial p = g.map_into(big, embed);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> coeffs(2 * n, 0);
      for (std::size_t j = 0; j < n; ++j) coeffs[n + j] = m[i][j];
      p = p.substitute(i, Polynomial::linear_form(big, coeffs));
    }
    gens.push_back(p.map_into(out, project));
  }
  return PolyIdeal(out, gens);
}

TEST(Buchberger, Examples) {
  const RingPtr r = Ring::make({"x", "y"});
  const auto gb = buchberger(r, ideal(r, {"x", "y"}).generators());
  EXPECT_EQ(gb.elements(), (std::vector<Polynomial>{P(r, "y"), P(r, "x")}));
  EXPECT_EQ(zero_dim_count(ideal(r, {"x", "y"})), 1u);
  EXPECT_EQ(zero_dim_count(ideal(r, {"x^2-1", "y^2-1"})), 4u);
}

TEST(Buchberger, ResultantOracle) {
  const RingPtr r = Ring::make({"x", "y"});
  const oracle::Poly2 f{{1, 2, 0}, {-1, 0, 1}};
  const oracle::Poly2 g{{1, 0, 2}, {-1, 1, 0}};
  EXPECT_EQ(zero_dim_count(ideal(r, {"x^2-y", "y^2-x"})), static_cast<std::size_t>(oracle::resultant_degree(f, g)));
  const oracle::Poly2 f2{{1, 0, 2}, {1, 2, 0}, {-5, 0, 0}};
  const oracle::Poly2 g2{{1, 0, 3}, {-1, 1, 0}, {2, 0, 0}};
  EXPECT_EQ(zero_dim_count(ideal(r, {"y^2+x^2-5", "y^3-x+2"})),
            static_cast<std::size_t>(oracle::resultant_degree(f2, g2)));
}

TEST(Buchberger, IdempotentAndDeterministic) {
  testing::Random rnd(41);
  const RingPtr r = Ring::standard(3);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rnd.polynomial(r, 3, 2));
    const auto gb = buchberger(r, gens, Budget::unlimited());
    EXPECT_EQ(buchberger(r, gb.elements(), Budget::unlimited()), gb);
    EXPECT_EQ(buchberger(r, gens, Budget::unlimited()), gb);
    for (const auto& g : gens) EXPECT_TRUE(gb.contains(g));
    // Reduced: no leading monomial divides a term of another element.
    const auto lms = gb.leading_monomials();
    for (std::size_t i = 0; i < lms.size(); ++i) {
      for (std::size_t j = 0; j < gb.elements().size(); ++j) {
        if (i == j) continue;
        for (const auto& t : gb.elements()[j].terms()) EXPECT_FALSE(lms[i].divides(t.monomial));
      }
    }
  }
}

TEST(Buchberger, PencilGenericLeadingTerms) {
  WeightSampler s(42);
  const Arrangement a = pencil(3);
  // Generic weights: the degree-zero generator sum(lambda) is a unit.
  const auto unit = buchberger(a.ring(), logarithmic_ideal(a, s.generic(a)).generators());
  EXPECT_TRUE(unit.is_unit());
  EXPECT_TRUE(codimension(unit).empty);
  // On the hyperplane sum(lambda) = 0 the leading terms cut out a line.
  const auto gb = buchberger(a.ring(), logarithmic_ideal(a, s.generic_sum_zero(a)).generators());
  EXPECT_FALSE(gb.is_unit());
  EXPECT_EQ(codimension(gb).codim, 1u);
  // In the affine chart of the decone the critical set is finite.
  const Arrangement lines = generic_affine_lines(3);
  EXPECT_EQ(critical_point_count(lines, s.generic(lines)), std::optional<std::size_t>(1));
}

TEST(Codimension, Examples) {
  const RingPtr r = Ring::make({"x", "y"});
  EXPECT_EQ(codimension(ideal(r, {"x*y"})).codim, 1u);
  EXPECT_TRUE(codimension(logarithmic_ideal(pencil(3), W("1,1,1"))).empty);
  const Arrangement d = monomial_deletion(2);
  EXPECT_EQ(codimension(logarithmic_ideal(d, monomial_deletion_weights(2, 1, -1, 0))).codim, 1u);
}

TEST(Quotient, Examples) {
  const RingPtr r = Ring::make({"x", "y"});
  EXPECT_TRUE(same_ideal(ideal_quotient(ideal(r, {"x^2"}), P(r, "x")), ideal(r, {"x"})));
  EXPECT_TRUE(same_ideal(ideal_quotient(ideal(r, {"x*y"}), P(r, "y")), ideal(r, {"x"})));
  EXPECT_TRUE(same_ideal(saturate(ideal(r, {"x^2*y"}), P(r, "y")), ideal(r, {"x^2"})));
  const Arrangement a = pencil(3);
  const auto omega = CriticalOneForm::specialized(a, W("1,2,5"));
  const auto gens = minimal_derivation_generators(a).generators;
  const PolyIdeal naive = naive_ideal(omega);
  const PolyIdeal quotient = ideal_quotient(naive, a.defining_polynomial());
  const PolyIdeal log = logarithmic_ideal(omega, gens);
  EXPECT_TRUE(ideal_contains(quotient, log));
  EXPECT_TRUE(ideal_contains(log, quotient));
}

TEST(Saturation, PaperExamples) {
  const Arrangement d = monomial_deletion(2);
  const RingPtr r = d.ring();
  const PolyIdeal i = logarithmic_ideal(d, monomial_deletion_weights(2, 1, -1, 0));
  EXPECT_TRUE(same_ideal(saturate(i, d.defining_polynomial()), ideal(r, {"x3"})));
  const Arrangement t = tame_nonfree(2);
  const PolyIdeal j = logarithmic_ideal(t, tame_nonfree_weights(2, 1, -1));
  // Here the saturation is (x3^2, x3 (x1^2 - x2^2)): equal to (x3) up to radical.
  const PolyIdeal sat = saturate(j, t.defining_polynomial());
  EXPECT_TRUE(radical_membership(P(t.ring(), "x3"), sat));
  EXPECT_TRUE(ideal_contains(ideal(t.ring(), {"x3"}), sat));
  EXPECT_EQ(codimension(sat).codim, 1u);
}

TEST(Saturation, ChainOfInclusions) {
  testing::Random rnd(43);
  const RingPtr r = Ring::standard(3);
  for (int trial = 0; trial < 5; ++trial) {
    const Polynomial f = rnd.polynomial(r, 2, 1);
    if (f.is_zero() || f.is_constant()) continue;
    std::vector<Polynomial> gens{f * f * rnd.polynomial(r, 2, 1), f * rnd.polynomial(r, 2, 2), rnd.polynomial(r, 2, 2)};
    const PolyIdeal i(r, gens);
    const PolyIdeal q = ideal_quotient(i, f);
    const PolyIdeal s = saturate(i, f);
    EXPECT_TRUE(ideal_contains(q, i));
    EXPECT_TRUE(ideal_contains(s, q));
    EXPECT_TRUE(same_ideal(saturate(s, f), s));
  }
}

TEST(Saturation, CodimensionNeverDropsOnCatalog) {
  for (const auto& e : catalog()) {
    if (!e.arrangement.is_central() || e.reduced_scope) continue;
    for (const auto& w : e.resonant) {
      const PolyIdeal i = logarithmic_ideal(e.arrangement, w.lambda);
      const Codimension before = codimension(i);
      const Codimension after = codimension(saturate(i, e.arrangement.defining_polynomial()));
      if (after.empty) continue;
      ASSERT_FALSE(before.empty) << e.name;
      EXPECT_GE(after.codim, before.codim) << e.name << " " << w.name;
    }
  }
}

TEST(Radical, Examples) {
  const RingPtr r = Ring::make({"x", "y"});
  EXPECT_TRUE(radical_membership(P(r, "x"), ideal(r, {"x^2"})));
  EXPECT_FALSE(radical_membership(P(r, "y"), ideal(r, {"x^2"})));
  const Arrangement a = pencil(3);
  EXPECT_FALSE(radical_membership(a.defining_polynomial(), logarithmic_ideal(a, W("1,1,-2"))));
}

TEST(ZeroDimCount, InvariantUnderLinearChange) {
  testing::Random rnd(44);
  const RingPtr r = Ring::make({"x", "y"});
  std::vector<PolyIdeal> ideals{ideal(r, {"x^2-y", "y^2-x"}), ideal(r, {"x^3-2*x*y+1", "y^2-x-3"})};
  for (const auto& i : ideals) {
    const std::size_t base = zero_dim_count(i);
    for (int change = 0; change < 2; ++change) {
      std::vector<std::vector<Rational>> m{{rnd.nonzero(), rnd.nonzero()}, {rnd.nonzero(), rnd.nonzero()}};
      if (m[0][0] * m[1][1] == m[0][1] * m[1][0]) m[1][1] += 1;
      EXPECT_EQ(zero_dim_count(change_coordinates(i, m)), base);
    }
  }
}

TEST(ZeroDimCount, RejectsPositiveDimension) {
  const RingPtr r = Ring::make({"x", "y"});
  EXPECT_THROW(zero_dim_count(ideal(r, {"x*y"})), Error);
}

TEST(Budget, TinyBudgetIsExceeded) {
  const RingPtr r = Ring::standard(4);
  const PolyIdeal cyclic = ideal(r, {"x1+x2+x3+x4", "x1*x2+x2*x3+x3*x4+x4*x1", "x1*x2*x3+x2*x3*x4+x3*x4*x1+x4*x1*x2",
                                     "x1*x2*x3*x4-1"});
  EXPECT_THROW(buchberger(r, cyclic.generators(), Budget{5}), BudgetExceeded);
  EXPECT_NO_THROW(buchberger(r, cyclic.generators(), Budget::unlimited()));
}

}  // namespace
}  // namespace arrwb
