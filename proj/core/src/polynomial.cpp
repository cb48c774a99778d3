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

#include "arrwb/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "arrwb/error.hpp"

namespace arrwb {
namespace {

void sort_and_combine(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

// a + sign * b, both sorted.
std::vector<Term> merge_add(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
      continue;
    }
    auto c = ring.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("polynomial requires a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  sort_and_combine(*p.ring_, terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::linear_form(RingPtr ring, std::span<const Rational> coeffs, const Rational& constant,
                                   std::size_t first_var) {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) terms.push_back({Monomial::variable(first_var + j), coeffs[j]});
  }
  if (constant != 0) terms.push_back({Monomial{}, constant});
  return from_terms(std::move(ring), std::move(terms));
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
}

int Polynomial::degree_in(std::span<const std::size_t> vars) const {
  int d = -1;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto v : vars) s += t.monomial[v];
    d = std::max(d, s);
  }
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_add(*ring_, terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_add(*ring_, terms_, other.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) acc[ta.monomial * tb.monomial] += ta.coeff * tb.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return a.ring_->compare(x.monomial, y.monomial) > 0; });
  return Polynomial(a.ring_, std::move(terms), true);
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::sub_scaled(const Rational& c, const Monomial& m, const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> shifted;
  shifted.reserve(other.size());
  for (const auto& t : other.terms_) shifted.push_back({t.monomial * m, t.coeff * c});
  return Polynomial(ring_, merge_add(*ring_, terms_, shifted, true), true);
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw Error("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({m, t.coeff * e});
  }
  // Lowering one exponent can reorder terms under grevlex ties, so re-sort.
  return from_terms(ring_, std::move(terms));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->nvars()) throw Error("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_ring(value);
  std::vector<Polynomial> powers{Polynomial::constant(ring_, 1)};
  Polynomial result(ring_);
  for (const auto& t : terms_) {
    auto e = t.monomial[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = t.monomial;
    rest.set(var, 0);
    result += Polynomial::monomial(ring_, rest, t.coeff) * powers[e];
  }
  return result;
}

Polynomial Polynomial::specialize(std::size_t var, const Rational& value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    for (unsigned k = 0; k < t.monomial[var]; ++k) c *= value;
    Monomial m = t.monomial;
    m.set(var, 0);
    terms.push_back({m, std::move(c)});
  }
  return from_terms(ring_, std::move(terms));
}

Polynomial Polynomial::map_into(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->nvars()) throw Error("variable map has wrong length");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] >= target->nvars()) throw Error("variable map target out of range");
      m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(terms));
}

Polynomial Polynomial::reorder(const RingPtr& target) const {
  if (target->names() != ring_->names()) throw RingMismatch();
  std::vector<Term> terms = terms_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return target->compare(a.monomial, b.monomial) > 0; });
  return Polynomial(target, std::move(terms), true);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_term().coeff;
  Polynomial p = *this;
  p *= inv;
  return p;
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += arrwb::to_string(c);
    } else {
      if (c != 1) out += arrwb::to_string(c) + '*';
      out += monomial_to_string(*ring_, t.monomial);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.ring(), 1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch();
  // {q} is a Groebner basis of (q), so the remainder vanishes iff q | p and
  // a leading term that q cannot reduce proves the remainder is nonzero.
  Polynomial rem = p;
  std::vector<Term> quotient;
  const Term& lead = q.leading_term();
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    Term qt{t.monomial / lead.monomial, t.coeff / lead.coeff};
    rem = rem.sub_scaled(qt.coeff, qt.monomial, q);
    quotient.push_back(std::move(qt));
  }
  return Polynomial::from_terms(p.ring(), std::move(quotient));
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) { return p.derivative(var); }

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial m;
  // Enumerate compositions of d into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == nvars) {
      m.set(i, static_cast<Monomial::Exponent>(remaining));
      out.push_back(m);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      m.set(i, static_cast<Monomial::Exponent>(e));
      self(self, i + 1, remaining - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, d);
  TermOrder order = TermOrder::grevlex(nvars);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return out;
}

}  // namespace arrwb
