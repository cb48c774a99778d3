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

#include "arrwb/critical_ideal.hpp"

#include <algorithm>
#include <unordered_map>

#include "arrwb/error.hpp"
#include "arrwb/matrix.hpp"

namespace arrwb {
namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

std::string weight_name(const Arrangement& a, std::size_t i) {
  const std::string base = "a" + std::to_string(i + 1);
  const auto& vars = a.variables();
  if (std::find(vars.begin(), vars.end(), base) == vars.end()) return base;
  return "a_" + std::to_string(i + 1);
}

// Coefficient vectors over a growing monomial dictionary.
class PolynomialEncoder {
 public:
  SparseVector encode(const Polynomial& p) {
    SparseVector v;
    for (const auto& t : p.terms()) {
      auto [it, inserted] = slots_.emplace(t.monomial, slots_.size());
      v.emplace_back(it->second, t.coeff);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

 private:
  std::unordered_map<Monomial, std::size_t> slots_;
};

}  // namespace

CriticalOneForm CriticalOneForm::specialized(const Arrangement& a, const WeightVector& lambda) {
  if (lambda.size() != a.size()) throw InvalidArrangement("weight vector has wrong length");
  CriticalOneForm w(a.ring());
  w.arrangement_dim_ = a.dim();
  w.forms_ = a.forms();
  w.q_ = a.defining_polynomial();
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Polynomial num(w.ring_);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational c = lambda[i] * a.normal(i)[j];
      if (c == 0) continue;
      Polynomial others = Polynomial::constant(w.ring_, c);
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (k != i) others *= w.forms_[k];
      }
      num += others;
    }
    w.numerators_.push_back(std::move(num));
  }
  return w;
}

CriticalOneForm CriticalOneForm::universal(const Arrangement& a) {
  std::vector<std::string> names = a.variables();
  TermOrder::Block xs;
  TermOrder::Block as;
  for (std::size_t j = 0; j < a.dim(); ++j) xs.push_back(j);
  for (std::size_t i = 0; i < a.size(); ++i) {
    names.push_back(weight_name(a, i));
    as.push_back(a.dim() + i);
  }
  CriticalOneForm w(Ring::make(std::move(names), TermOrder({xs, as})));
  w.universal_ = true;
  w.arrangement_dim_ = a.dim();
  const auto up = identity_map(a.dim());
  for (const auto& f : a.forms()) w.forms_.push_back(f.map_into(w.ring_, up));
  w.q_ = Polynomial::constant(w.ring_, 1);
  for (const auto& f : w.forms_) w.q_ *= f;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Polynomial num(w.ring_);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational& c = a.normal(i)[j];
      if (c == 0) continue;
      Polynomial others = c * Polynomial::variable(w.ring_, w.weight_variable(i));
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (k != i) others *= w.forms_[k];
      }
      num += others;
    }
    w.numerators_.push_back(std::move(num));
  }
  return w;
}

Polynomial CriticalOneForm::lift(const Polynomial& p) const {
  if (same_ring(p.ring(), ring_)) return p;
  return p.map_into(ring_, identity_map(p.ring()->nvars()));
}

Polynomial CriticalOneForm::pair(const Derivation& theta) const {
  if (theta.coeffs.size() != numerators_.size()) throw Error("derivation has wrong number of components");
  Polynomial total(ring_);
  for (std::size_t j = 0; j < numerators_.size(); ++j) {
    if (!theta.coeffs[j].is_zero()) total += lift(theta.coeffs[j]) * numerators_[j];
  }
  auto r = exact_divide(total, q_);
  if (!r) throw Error("pairing is not a polynomial: derivation is not logarithmic");
  return *r;
}

Polynomial CriticalOneForm::specialize(const Polynomial& p, const WeightVector& lambda, const RingPtr& target) const {
  if (!universal_) return p;
  Polynomial out = p;
  for (std::size_t i = 0; i < lambda.size(); ++i) out = out.specialize(weight_variable(i), lambda[i]);
  std::vector<std::size_t> down = identity_map(arrangement_dim_);
  down.resize(ring_->nvars(), SIZE_MAX);
  return out.map_into(target, down);
}

PolyIdeal logarithmic_ideal(const CriticalOneForm& omega, std::span<const Derivation> generators) {
  std::vector<Polynomial> gens;
  for (const auto& theta : generators) {
    Polynomial p = omega.pair(theta);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return PolyIdeal(omega.ring(), std::move(gens));
}

PolyIdeal logarithmic_ideal(const Arrangement& a, const WeightVector& lambda) {
  const auto gens = minimal_derivation_generators(a);
  return logarithmic_ideal(CriticalOneForm::specialized(a, lambda), gens.generators);
}

PolyIdeal naive_ideal(const CriticalOneForm& omega) { return PolyIdeal(omega.ring(), omega.numerators()); }

std::size_t universal_minimal_generator_count(const Arrangement& a, std::optional<unsigned> bound) {
  const auto omega = CriticalOneForm::universal(a);
  const unsigned top = bound.value_or(default_derivation_bound(a));
  PolynomialEncoder encoder;
  std::vector<Polynomial> previous;
  std::size_t count = 0;
  for (unsigned d = 0; d <= top; ++d) {
    IncrementalEchelon span;
    for (const auto& p : previous) {
      for (std::size_t k = 0; k < a.dim(); ++k) span.insert(encoder.encode(p * Polynomial::variable(omega.ring(), k)));
    }
    std::vector<Polynomial> current;
    for (const auto& theta : derivations_in_degree(a, d)) {
      Polynomial p = omega.pair(theta);
      if (span.insert(encoder.encode(p))) ++count;
      current.push_back(std::move(p));
    }
    previous = std::move(current);
  }
  return count;
}

bool quotient_identity_check(const CriticalOneForm& omega, std::span<const Derivation> generators,
                             const Budget& budget) {
  const PolyIdeal log_ideal = logarithmic_ideal(omega, generators);
  const PolyIdeal quotient = ideal_quotient(naive_ideal(omega), omega.forms(), budget);
  return same_ideal(log_ideal, quotient, budget);
}

OriginMembership origin_membership_check(const Arrangement& a, const WeightVector& lambda, const Budget& budget) {
  if (!a.is_central() || !a.is_irreducible()) throw InvalidArrangement("origin check needs an irreducible central arrangement");
  OriginMembership r;
  r.weights_sum_to_zero = lambda.sum() == 0;
  const PolyIdeal ideal = logarithmic_ideal(a, lambda);
  const auto& gb = ideal.groebner(budget);
  r.origin_in_variety = std::all_of(gb.elements().begin(), gb.elements().end(),
                                    [](const Polynomial& g) { return g.constant_term() == 0; });
  return r;
}

bool reducible_decomposition_check(const Arrangement& a1, const Arrangement& a2, const WeightVector& lambda1,
                                   const WeightVector& lambda2, const Budget& budget) {
  const Arrangement sum = direct_sum(a1, a2);
  std::vector<Rational> joined = lambda1.values();
  joined.insert(joined.end(), lambda2.values().begin(), lambda2.values().end());
  const PolyIdeal whole = logarithmic_ideal(sum, WeightVector(joined));
  std::vector<Polynomial> gens;
  std::vector<std::size_t> first = identity_map(a1.dim());
  std::vector<std::size_t> second(a2.dim());
  for (std::size_t j = 0; j < a2.dim(); ++j) second[j] = a1.dim() + j;
  const PolyIdeal i1 = logarithmic_ideal(a1, lambda1);
  const PolyIdeal i2 = logarithmic_ideal(a2, lambda2);
  for (const auto& g : i1.generators()) gens.push_back(g.map_into(sum.ring(), first));
  for (const auto& g : i2.generators()) gens.push_back(g.map_into(sum.ring(), second));
  return same_ideal(whole, PolyIdeal(sum.ring(), std::move(gens)), budget);
}

CriticalSetReport critical_set_report(const Arrangement& a, const WeightVector& lambda, const Budget& budget) {
  CriticalSetReport r;
  r.lambda = lambda;
  const PolyIdeal ideal = logarithmic_ideal(a, lambda);
  r.ideal_generators = ideal.generators();
  r.ideal_codim = codimension(ideal, budget);
  const PolyIdeal sat = saturate(ideal, a.forms(), budget);
  r.saturation = sat.groebner(budget).elements();
  r.saturation_codim = codimension(sat, budget);
  if (!r.saturation_codim.empty && r.saturation_codim.codim == a.ring()->nvars()) {
    r.point_count = zero_dim_count(sat, budget);
  }
  return r;
}

}  // namespace arrwb
