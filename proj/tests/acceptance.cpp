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

// Acceptance run: one PASS/FAIL line per criterion with its tolerance and
// time limit. The exit status is nonzero when a criterion fails, except for
// 9b, which is expected to fail for central entries (see the note printed
// with it).

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "arrwb/catalog.hpp"
#include "arrwb/critical_ideal.hpp"
#include "arrwb/error.hpp"
#include "arrwb/groebner.hpp"
#include "arrwb/harness.hpp"
#include "arrwb/orlik_solomon.hpp"
#include "arrwb/poly_io.hpp"
#include "oracles/exterior.hpp"
#include "test_support.hpp"

namespace arrwb {
namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void info(const std::string& what) { notes.push_back(what); }
};

struct Criterion {
  std::string id;
  std::string title;
  std::string tolerance;
  double limit_seconds;
  std::function<Outcome()> run;
  bool expected_to_fail = false;
};

PolyIdeal principal(const Polynomial& p) { return PolyIdeal(p.ring(), {p}); }

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

// Set-theoretic equality V(j) = V(g) for a single polynomial g.
bool same_zero_set(const PolyIdeal& j, const Polynomial& g) {
  if (!radical_membership(g, j)) return false;
  const PolyIdeal gi = principal(g);
  for (const auto& h : j.generators()) {
    if (!radical_membership(h, gi)) return false;
  }
  return true;
}

Outcome criterion1() {
  Outcome o;
  const int r = 2;
  const Arrangement a = monomial_deletion(r);
  const auto basis = monomial_deletion_basis(r);
  const RingPtr ring = a.ring();
  const Polynomial x1 = testing::P(ring, "x1^2"), x2 = testing::P(ring, "x2^2"), x3 = testing::P(ring, "x3^2");
  WeightSampler s(101);
  for (int i = 0; i < 5; ++i) {
    const Rational al = s.rational(), be = s.rational(), ga = s.rational();
    const auto omega = CriticalOneForm::specialized(a, monomial_deletion_weights(r, al, be, ga));
    const Polynomial d1 = Polynomial::constant(ring, Rational(r * (2 * al + 2 * be + ga)));
    const Polynomial d2 = (x1 + x2) * Rational(r * (al + be + ga)) + x3 * Rational(r * (al + be));
    const Polynomial d3 = (x1 * be + x2 * al) * testing::P(ring, "x3") * Rational(r);
    o.require(omega.pair(basis[0]) == d1, "d1' at sample " + std::to_string(i));
    o.require(omega.pair(basis[1]) == d2, "d2' at sample " + std::to_string(i));
    o.require(omega.pair(basis[2]) == d3, "d3' at sample " + std::to_string(i));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Arrangement a = monomial_deletion(2);
  const RingPtr ring = a.ring();
  const PolyIdeal i = logarithmic_ideal(a, monomial_deletion_weights(2, 1, -1, 0));
  o.require(same_zero_set(i, testing::P(ring, "(x1^2-x2^2)*x3")), "V(I) = V((x1^2-x2^2) x3)");
  o.require(same_ideal(saturate(i, a.forms()), principal(testing::P(ring, "x3"))), "(I : Q^inf) = (x3)");
  WeightSampler s(102);
  int done = 0;
  while (done < 3) {
    const Rational al = s.rational(), be = s.rational(), ga = s.rational();
    if (2 * al + 2 * be + ga == 0) continue;
    o.require(codimension(logarithmic_ideal(a, monomial_deletion_weights(2, al, be, ga))).empty, "V(I) empty");
    ++done;
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Arrangement a = tame_nonfree(2);
  const WeightVector lambda = tame_nonfree_weights(2, 1, -1);
  const auto betti = aomoto_betti(a, lambda);
  o.info("Aomoto Betti numbers " + join(betti));
  o.require(betti.size() > 1 && betti[1] == 0, "H^1 = 0");

  const PolyIdeal i = logarithmic_ideal(a, lambda);
  const PolyIdeal sat = saturate(i, a.forms());
  o.require(same_zero_set(sat, testing::P(a.ring(), "x3")), "V(I : Q^inf) = V(x3)");
  o.require(codimension(sat).codim == 1, "codim (I : Q^inf) = 1");
  std::string basis;
  for (const auto& g : sat.groebner().elements()) basis += (basis.empty() ? "" : ", ") + g.to_string();
  o.info("(I : Q^inf) = (" + basis + "); equal to (x3) up to radical");

  // Affine chart x1 = 1.
  const RingPtr chart = Ring::make({"x2", "x3"});
  const std::vector<std::size_t> map{SIZE_MAX, 0, 1};
  std::vector<Polynomial> forms;
  for (const auto& f : a.forms()) {
    const Polynomial g = f.specialize(0, 1).map_into(chart, map);
    if (!g.is_constant()) forms.push_back(g);
  }
  const PolyIdeal affine_sat = saturate(dehomogenize(i, 0, chart), forms);
  o.require(same_zero_set(affine_sat, testing::P(chart, "x3")), "chart: V = V(x3)");
  o.require(codimension(affine_sat).codim == 1, "chart: codim 1");

  const auto report = verify_theorem(a, lambda, "tame-nonfree-2");
  bool annotated = false;
  for (const auto& n : report.annotations) annotated = annotated || n.find("converse") != std::string::npos;
  o.require(annotated, "converse-failure annotation");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Arrangement a = x3_arrangement();
  const auto g = minimal_derivation_generators(a).generators;
  o.require(g.size() == 4, "4 minimal generators of Der");
  o.require(universal_minimal_generator_count(a) == 4, "4 minimal generators of the universal ideal");
  for (std::size_t skip = 0; skip < g.size(); ++skip) {
    std::vector<Derivation> three;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (k != skip) three.push_back(g[k]);
    o.require(!saito_free_check(a, three).free(), "Saito fails without generator " + std::to_string(skip));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  WeightSampler s(105);
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const Arrangement a = pencil(n);
    const std::string tag = "pencil(" + std::to_string(n) + ")";
    const auto cert = freeness(a);
    o.require(cert.free && cert.exponents == std::vector<int>{0, static_cast<int>(n) - 2}, tag + " exponents");
    const auto u = CriticalOneForm::universal(a);
    std::vector<unsigned> degrees;
    for (const auto& theta : cert.generators.generators) {
      unsigned deg = 0;
      const Polynomial p = u.pair(theta);
      for (const auto& t : p.terms()) {
        unsigned d = 0;
        for (std::size_t j = 0; j < a.dim(); ++j) d += t.monomial[j];
        deg = std::max(deg, d);
      }
      degrees.push_back(deg);
    }
    o.require(universal_minimal_generator_count(a) == 2, tag + " 2 generators");
    o.require(degrees == std::vector<unsigned>{0, static_cast<unsigned>(n - 2)}, tag + " generator degrees");
    const auto r = verify_theorem(a, s.generic_sum_zero(a), tag);
    o.require(r.least_p == std::optional<std::size_t>(1), tag + " p = 1");
    o.require(r.ideal_codim && !r.ideal_codim->empty && r.ideal_codim->codim == 1, tag + " codim 1");
    o.require(r.verdict == Verdict::kSatisfied, tag + " satisfied");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < 5.0, tag + " within 5 s");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  WeightSampler s(106);
  for (std::size_t k = 3; k <= 5; ++k) {
    const Arrangement lines = generic_affine_lines(k);
    const long expected = 1 - static_cast<long>(k) + static_cast<long>(k * (k - 1) / 2);
    for (int i = 0; i < 3; ++i) {
      const auto c = critical_count_check(lines, s);
      o.require(c.expected == expected && c.holds(), std::to_string(k) + " lines, sample " + std::to_string(i));
    }
    o.info(std::to_string(k) + " lines: |chi| = " + std::to_string(expected));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  WeightSampler s(107);
  const std::vector<std::pair<std::string, Arrangement>> cases{
      {"pencil(3)", pencil(3)}, {"pencil(4)", pencil(4)}, {"X3", x3_arrangement()}, {"boolean(3)", boolean_arrangement(3)}};
  for (const auto& [name, a] : cases) {
    const auto gens = minimal_derivation_generators(a).generators;
    try {
      o.require(quotient_identity_check(CriticalOneForm::universal(a), gens), name + " universal");
      for (int i = 0; i < 3; ++i) {
        const auto omega = CriticalOneForm::specialized(a, s.generic(a));
        o.require(quotient_identity_check(omega, gens), name + " sample " + std::to_string(i));
      }
    } catch (const BudgetExceeded& e) {
      o.require(false, name + ": " + e.what());
    }
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  WeightSampler s(108);
  testing::Random rnd(108);
  for (const auto& e : catalog()) {
    const Arrangement& a = e.arrangement;
    std::vector<WeightVector> ws{s.generic(a), s.generic_sum_zero(a)};
    for (const auto& r : e.resonant) ws.push_back(r.lambda);
    const OsAlgebra os(a);
    for (const auto& w : ws) {
      const AomotoComplex c(os, w);
      for (std::size_t p = 0; p + 1 < c.top_degree(); ++p) {
        o.require((c.matrix(p + 1) * c.matrix(p)).is_zero(), e.name + " d^2 = 0");
      }
      const auto b = c.betti();
      if (a.is_central()) {
        long chi = 0;
        for (std::size_t p = 0; p < b.size(); ++p) chi += (p % 2 ? -1 : 1) * static_cast<long>(b[p]);
        o.require(chi == 0, e.name + " alternating sum");
      }
      for (int t = 0; t < 2; ++t) {
        const auto order = rnd.permutation(a.size());
        o.require(aomoto_betti(a.permuted(order), w.permuted(order)) == b, e.name + " order invariance");
      }
    }
    int points = 0;
    while (points < 3) {
      std::vector<Rational> x;
      for (std::size_t j = 0; j < a.dim(); ++j) x.push_back(rnd.rational(50));
      try {
        o.require(fibre_dimension_check(a, x).holds(), e.name + " fibre dimension");
        ++points;
      } catch (const InvalidArrangement&) {
      }
    }
    if (a.is_central() && a.is_irreducible() && !e.reduced_scope) {
      o.require(origin_membership_check(a, ws[0]).holds(), e.name + " origin, generic");
      o.require(origin_membership_check(a, ws[1]).holds(), e.name + " origin, zero sum");
    }
  }
  o.require(reducible_decomposition_check(pencil(3), pencil(3), testing::W("1,1,-2"), testing::W("1,2,5")),
            "pencil(3) + pencil(3)");
  o.require(reducible_decomposition_check(pencil(3), boolean_arrangement(1), testing::W("1,2,-3"), testing::W("4")),
            "pencil(3) + boolean(1)");
  o.require(reducible_decomposition_check(boolean_arrangement(2), pencil(4), testing::W("1,-1"),
                                          testing::W("1,1,1,-3")),
            "boolean(2) + pencil(4)");
  return o;
}

struct SweepResult {
  std::size_t reports = 0;
  std::size_t violated = 0;
  std::size_t incomplete = 0;
  std::vector<std::string> codim_mismatches;
  std::size_t generic_checked = 0;
};

const SweepResult& catalog_sweep() {
  static const SweepResult result = [] {
    SweepResult out;
    const std::uint64_t base = WeightSampler::seed_from_env();
    for (const auto& e : catalog()) {
      const TheoremHarness h(e.arrangement, e.name);
      std::vector<WeightSample> samples;
      for (std::uint64_t i = 0; i < 5; ++i) {
        WeightSampler s(base + i);
        char key[32];
        std::snprintf(key, sizeof key, "generic-%03u", static_cast<unsigned>(i));
        samples.push_back({key, s.generic(e.arrangement), base + i});
      }
      for (const auto& r : e.resonant) samples.push_back({"resonant-" + r.name, r.lambda, std::nullopt});
      for (const auto& r : sweep(h, samples)) {
        ++out.reports;
        if (r.verdict == Verdict::kViolated) ++out.violated;
        if (r.verdict == Verdict::kIncomplete) ++out.incomplete;
        if (r.sample_key.rfind("generic", 0) != 0) continue;
        ++out.generic_checked;
        const bool ok = r.ideal_codim && !r.ideal_codim->empty && r.ideal_codim->codim == e.arrangement.rank();
        if (!ok) {
          const std::string got = !r.ideal_codim ? "none" : r.ideal_codim->empty ? "empty" : std::to_string(r.ideal_codim->codim);
          out.codim_mismatches.push_back(e.name + " " + r.sample_key + ": " + got + " vs rank " +
                                         std::to_string(e.arrangement.rank()));
        }
      }
    }
    return out;
  }();
  return result;
}

Outcome criterion9a() {
  Outcome o;
  const auto& r = catalog_sweep();
  o.info(std::to_string(r.reports) + " reports, " + std::to_string(r.violated) + " violated, " +
         std::to_string(r.incomplete) + " incomplete");
  o.require(r.violated == 0, "no violated verdicts");
  o.require(r.incomplete == 0, "no incomplete runs");
  return o;
}

Outcome criterion9b() {
  Outcome o;
  const auto& r = catalog_sweep();
  o.info(std::to_string(r.generic_checked - r.codim_mismatches.size()) + "/" + std::to_string(r.generic_checked) +
         " generic reports have codim V(I) = rank(A)");
  o.require(r.codim_mismatches.empty(), "generic codim equals rank");
  std::size_t shown = 0;
  for (const auto& m : r.codim_mismatches) {
    if (shown++ < 3) o.info(m);
  }
  o.info("expected for central entries: sum(lambda) lies in I, so V(I) is empty for generic lambda");
  // What does hold: the universal ideal and the zero-sum hyperplane.
  WeightSampler s(109);
  for (const char* name : {"pencil-4", "X3", "braid-A3"}) {
    const Arrangement& a = find_entry(name)->arrangement;
    const auto gens = minimal_derivation_generators(a).generators;
    const auto u = codimension(logarithmic_ideal(CriticalOneForm::universal(a), gens));
    const auto z = codimension(logarithmic_ideal(a, s.generic_sum_zero(a)));
    o.info(std::string(name) + ": universal codim " + std::to_string(u.codim) + ", zero-sum generic codim " +
           std::to_string(z.codim) + ", rank " + std::to_string(a.rank()));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  WeightSampler s(110);
  std::size_t entries = 0;
  for (const auto& e : catalog()) {
    const Arrangement& a = e.arrangement;
    if (a.size() > 6) continue;
    ++entries;
    std::vector<WeightVector> ws{s.generic(a), s.generic_sum_zero(a)};
    ws.push_back(e.resonant.empty() ? s.generic(a) : e.resonant.front().lambda);
    for (const auto& w : ws) {
      const auto nbc = aomoto_betti(a, w);
      // The oracle reports every degree up to n; above the rank it must be zero.
      auto brute = oracle::brute_force_betti(testing::raw(a), w.values());
      bool padding_zero = brute.size() >= nbc.size();
      for (std::size_t p = nbc.size(); p < brute.size(); ++p) padding_zero = padding_zero && brute[p] == 0;
      brute.resize(std::min(brute.size(), nbc.size()));
      o.require(padding_zero && nbc == brute, e.name + " at " + w.to_string() + ": " + join(nbc) + " vs " + join(brute));
    }
  }
  o.info(std::to_string(entries) + " entries with n <= 6");
  return o;
}

}  // namespace
}  // namespace arrwb

int main() {
  using namespace arrwb;
  const std::vector<Criterion> criteria{
      {"1", "deletion pairings match the closed forms (r=2, 5 samples)", "exact", 5.0, criterion1},
      {"2", "deletion geometry at (1,-1,0) and empty V(I) off 2a+2b+c=0", "exact", 10.0, criterion2},
      {"3", "tame non-free converse witness: H^1 = 0, saturated codim 1", "exact", 10.0, criterion3},
      {"4", "X3: 4 minimal generators, every 3-subset fails Saito", "exact", 5.0, criterion4},
      {"5", "pencils n=3..6: exponents, generator degrees, p = codim = 1", "exact", 20.0, criterion5},
      {"6", "critical points of k=3,4,5 generic lines equal |chi(M)|", "exact", 30.0, criterion6},
      {"7", "(I' : Q) = I, universal and 3 specialized weights", "exact", 60.0, criterion7},
      {"8", "structural properties of the catalog", "exact", 300.0, criterion8},
      {"9a", "catalog sweep: no violated verdicts", "exact", 600.0, criterion9a},
      {"9b", "catalog sweep: generic codim V(I) = rank(A)", "exact", 600.0, criterion9b, true},
      {"10", "NBC Betti numbers equal the brute-force exterior algebra (n <= 6)", "exact", 120.0, criterion10},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) o.require(false, "time limit");
    std::printf("criterion %-3s %s  %s [tolerance %s; limit %.0f s; took %.2f s]\n", c.id.c_str(),
                o.pass ? "PASS" : "FAIL", c.title.c_str(), c.tolerance.c_str(), c.limit_seconds, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    if (!o.pass && c.expected_to_fail) std::printf("    documented expected failure; not counted in the exit status\n");
    if (!o.pass && !c.expected_to_fail) all_ok = false;
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
