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

#include "arrwb/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "arrwb/error.hpp"

namespace arrwb {
namespace {

struct ITerm {
  Monomial m;
  Integer c;
};
using IPoly = std::vector<ITerm>;

struct Divisor {
  const IPoly* poly;
  Monomial lead;
  std::uint32_t support;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

void remove_content(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

class Engine {
 public:
  Engine(const TermOrder& order, const Budget& budget) : order_(order), budget_(budget) {}

  std::uint64_t steps() const { return steps_; }

  IPoly from_polynomial(const Polynomial& p) const {
    std::vector<Rational> coeffs;
    for (const auto& t : p.terms()) coeffs.push_back(t.coeff);
    const Integer scale = lcm_of_denominators(coeffs);
    IPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Rational v = t.coeff * scale;
      out.push_back({t.monomial, v.get_num()});
    }
    std::sort(out.begin(), out.end(), [&](const ITerm& a, const ITerm& b) { return order_.compare(a.m, b.m) > 0; });
    remove_content(out);
    return out;
  }

  // a * h[hs..] - b * shift * g, where the two leading terms cancel.
  IPoly combine(const Integer& a, const IPoly& h, std::size_t hs, const Integer& b, const Monomial& shift,
                const IPoly& g) const {
    IPoly out;
    out.reserve(h.size() - hs + g.size());
    std::size_t i = hs + 1;
    std::size_t j = 1;
    const bool a_one = a == 1;
    while (i < h.size() || j < g.size()) {
      if (j >= g.size()) {
        out.push_back({h[i].m, a_one ? h[i].c : Integer(a * h[i].c)});
        ++i;
        continue;
      }
      const Monomial gm = shift * g[j].m;
      if (i >= h.size()) {
        out.push_back({gm, -b * g[j].c});
        ++j;
        continue;
      }
      const auto cmp = order_.compare(h[i].m, gm);
      if (cmp > 0) {
        out.push_back({h[i].m, a_one ? h[i].c : Integer(a * h[i].c)});
        ++i;
      } else if (cmp < 0) {
        out.push_back({gm, -b * g[j].c});
        ++j;
      } else {
        Integer c = a * h[i].c - b * g[j].c;
        if (c != 0) out.push_back({h[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full fraction-free reduction; the result is primitive with positive
  // leading coefficient.
  IPoly reduce(IPoly h, const std::vector<Divisor>& divisors) {
    IPoly rem;
    std::size_t pos = 0;
    unsigned since_content = 0;
    while (pos < h.size()) {
      const Divisor* d = find_divisor(h[pos].m, divisors);
      if (d == nullptr) {
        rem.push_back(std::move(h[pos]));
        ++pos;
        continue;
      }
      tick();
      const Integer& lc = d->poly->front().c;
      Integer g;
      mpz_gcd(g.get_mpz_t(), lc.get_mpz_t(), h[pos].c.get_mpz_t());
      Integer a = lc / g;
      Integer b = h[pos].c / g;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      const Monomial shift = h[pos].m / d->lead;
      h = combine(a, h, pos, b, shift, *d->poly);
      pos = 0;
      if (a != 1) {
        for (auto& t : rem) t.c *= a;
      }
      if (++since_content == 8) {
        since_content = 0;
        joint_content(rem, h);
      }
    }
    remove_content(rem);
    return rem;
  }

  IPoly spoly(const IPoly& f, const IPoly& g, const Monomial& lcm) const {
    Integer d;
    mpz_gcd(d.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    const Integer a = g.front().c / d;
    const Integer b = f.front().c / d;
    // a * (lcm / lm f) * f - b * (lcm / lm g) * g
    IPoly scaled;
    const Monomial sf = lcm / f.front().m;
    scaled.reserve(f.size());
    for (const auto& t : f) scaled.push_back({sf * t.m, t.c});
    return combine(a, scaled, 0, b, lcm / g.front().m, g);
  }

  bool less(const Monomial& a, const Monomial& b) const { return order_.compare(a, b) < 0; }

  void tick() {
    if (++steps_ > budget_.max_steps) {
      throw BudgetExceeded("Groebner step budget of " + std::to_string(budget_.max_steps) + " exceeded");
    }
  }

 private:
  static const Divisor* find_divisor(const Monomial& m, const std::vector<Divisor>& divisors) {
    const std::uint32_t s = m.support();
    for (const auto& d : divisors) {
      if ((d.support & ~s) != 0) continue;
      if (d.lead.divides(m)) return &d;
    }
    return nullptr;
  }

  static void joint_content(IPoly& rem, IPoly& h) {
    Integer g = 0;
    for (const auto* p : {&rem, &h}) {
      for (const auto& t : *p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g == 0) return;
    for (auto* p : {&rem, &h}) {
      for (auto& t : *p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
  }

  const TermOrder& order_;
  Budget budget_;
  std::uint64_t steps_ = 0;
};

Divisor make_divisor(const IPoly& p) { return Divisor{&p, p.front().m, p.front().m.support()}; }

Polynomial to_monic(const RingPtr& ring, const IPoly& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  const Integer& lc = p.front().c;
  for (const auto& t : p) terms.push_back({t.m, Rational(t.c, lc)});
  for (auto& t : terms) t.coeff.canonicalize();
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial on_ring(const RingPtr& ring, const Polynomial& p) {
  if (same_ring(ring, p.ring())) return p;
  if (ring->names() == p.ring()->names()) return p.reorder(ring);
  throw RingMismatch();
}

// Ring with one extra variable appended after the existing ones.
RingPtr extended_ring(const RingPtr& ring, const std::string& name, bool leading_block) {
  std::vector<std::string> names = ring->names();
  names.push_back(name);
  const std::size_t idx = ring->nvars();
  TermOrder order =
      leading_block ? ring->order().with_leading_block({idx}) : ring->order().with_trailing_block({idx});
  return Ring::make(std::move(names), std::move(order));
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("WORKBENCH_BUDGET")) {
    try {
      b.max_steps = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("WORKBENCH_BUDGET is not a number: ") + env);
    }
  }
  return b;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : basis_) out.push_back(g.leading_term().monomial);
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  Polynomial h = on_ring(ring_, p);
  std::vector<Term> rem;
  while (!h.is_zero()) {
    const Term lead = h.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis_) {
      if (g.leading_term().monomial.divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      h = h.sub_scaled(lead.coeff, lead.monomial / divisor->leading_term().monomial, *divisor);
    } else {
      rem.push_back(lead);
      h = h.sub_scaled(lead.coeff, lead.monomial, Polynomial::constant(ring_, 1));
    }
  }
  return Polynomial::from_terms(ring_, std::move(rem));
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators, const Budget& budget) {
  Engine engine(ring->order(), budget);
  std::vector<IPoly> inputs;
  for (const auto& g : generators) {
    if (!g.is_zero()) inputs.push_back(engine.from_polynomial(on_ring(ring, g)));
  }
  std::sort(inputs.begin(), inputs.end(),
            [&](const IPoly& a, const IPoly& b) { return engine.less(a.front().m, b.front().m); });

  // Polynomials are stored in a deque-like vector of unique_ptr so that
  // Divisor pointers stay valid as the basis grows.
  std::vector<std::unique_ptr<IPoly>> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto divisors = [&]() {
    std::vector<Divisor> ds;
    for (auto k : active) ds.push_back(make_divisor(*polys[k]));
    return ds;
  };

  // Gebauer-Moeller update with the new element h = polys.back().
  auto update = [&]() {
    const std::size_t h = polys.size() - 1;
    const Monomial lh = polys[h]->front().m;
    std::vector<Pair> fresh;
    for (auto g : active) fresh.push_back({g, h, Monomial::lcm(polys[g]->front().m, lh)});
    // D: pairs (h, g) surviving the chain criterion against the pairs still
    // waiting in C (later entries of `fresh`) and those already kept.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool keep = polys[fresh[a].i]->front().m.coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b) {
          if (fresh[b].lcm.divides(fresh[a].lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(fresh[a].lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(fresh[a]);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs) {
      const bool drop = lh.divides(p.lcm) && !(Monomial::lcm(polys[p.i]->front().m, lh) == p.lcm) &&
                        !(Monomial::lcm(polys[p.j]->front().m, lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const auto& p : kept) {
      if (!polys[p.i]->front().m.coprime(lh)) next.push_back(p);
    }
    pairs = std::move(next);
    std::vector<std::size_t> still;
    for (auto g : active) {
      if (!lh.divides(polys[g]->front().m)) still.push_back(g);
    }
    still.push_back(h);
    active = std::move(still);
  };

  for (auto& f : inputs) {
    IPoly h = engine.reduce(std::move(f), divisors());
    if (h.empty()) continue;
    polys.push_back(std::make_unique<IPoly>(std::move(h)));
    update();
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto cmp = ring->compare(pairs[k].lcm, pairs[best].lcm);
      if (cmp < 0 || (cmp == 0 && std::make_pair(pairs[k].j, pairs[k].i) < std::make_pair(pairs[best].j, pairs[best].i))) {
        best = k;
      }
    }
    const Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    engine.tick();
    IPoly s = engine.spoly(*polys[p.i], *polys[p.j], p.lcm);
    IPoly h = engine.reduce(std::move(s), divisors());
    if (h.empty()) continue;
    polys.push_back(std::make_unique<IPoly>(std::move(h)));
    update();
  }

  // Interreduce the minimal basis and normalize.
  std::vector<IPoly> minimal;
  for (auto k : active) {
    bool redundant = false;
    for (auto other : active) {
      if (other != k && polys[other]->front().m.divides(polys[k]->front().m) &&
          (!(polys[other]->front().m == polys[k]->front().m) || other < k)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(*polys[k]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const IPoly& a, const IPoly& b) { return engine.less(a.front().m, b.front().m); });
  std::vector<Polynomial> basis;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Divisor> others;
    for (std::size_t o = 0; o < minimal.size(); ++o) {
      if (o != k) others.push_back(make_divisor(minimal[o]));
    }
    IPoly r = engine.reduce(minimal[k], others);
    basis.push_back(to_monic(ring, r));
  }
  return GroebnerBasis(ring, std::move(basis), engine.steps());
}

PolyIdeal::PolyIdeal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  std::vector<Polynomial> seen;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial local = on_ring(ring_, g);
    Polynomial key = local.monic();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    generators_.push_back(std::move(local));
  }
}

const GroebnerBasis& PolyIdeal::groebner(const Budget& budget) const {
  std::call_once(cache_->once,
                 [&] { cache_->basis = std::make_unique<GroebnerBasis>(buchberger(ring_, generators_, budget)); });
  return *cache_->basis;
}

Codimension codimension(const GroebnerBasis& gb) {
  Codimension c;
  const std::size_t n = gb.ring()->nvars();
  if (gb.is_unit()) {
    c.empty = true;
    c.codim = n + 1;
    return c;
  }
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) supports.push_back(m.support());
  int best = -1;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (auto s : supports) {
      if ((s & ~mask) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      best = size;
      best_mask = mask;
    }
  }
  c.codim = n - static_cast<std::size_t>(best);
  for (std::size_t i = 0; i < n; ++i) {
    if (best_mask & (std::uint32_t{1} << i)) c.independent.push_back(i);
  }
  return c;
}

Codimension codimension(const PolyIdeal& ideal, const Budget& budget) { return codimension(ideal.groebner(budget)); }

std::size_t zero_dim_count(const GroebnerBasis& gb) {
  const auto c = codimension(gb);
  const std::size_t n = gb.ring()->nvars();
  if (c.empty) return 0;
  if (c.codim != n) throw Error("ideal is not zero-dimensional");
  const auto leads = gb.leading_monomials();
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::unordered_set<Monomial> seen{Monomial{}};
  std::vector<Monomial> frontier{Monomial{}};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        const Monomial up = m * Monomial::variable(i);
        if (standard(up) && seen.insert(up).second) next.push_back(up);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::size_t zero_dim_count(const PolyIdeal& ideal, const Budget& budget) {
  return zero_dim_count(ideal.groebner(budget));
}

bool same_ideal(const PolyIdeal& a, const PolyIdeal& b, const Budget& budget) {
  return a.groebner(budget) == b.groebner(budget);
}

bool ideal_contains(const PolyIdeal& outer, const PolyIdeal& inner, const Budget& budget) {
  const auto& gb = outer.groebner(budget);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return gb.contains(g); });
}

PolyIdeal ideal_quotient(const PolyIdeal& ideal, const Polynomial& f, const Budget& budget) {
  if (f.is_zero()) throw DivisionByZero();
  const RingPtr& ring = ideal.ring();
  const Polynomial local_f = on_ring(ring, f);
  const std::size_t n = ring->nvars();
  const RingPtr big = extended_ring(ring, "_t", true);
  const auto up = identity_map(n);
  const Polynomial t = Polynomial::variable(big, n);
  const Polynomial one = Polynomial::constant(big, 1);
  const Polynomial big_f = local_f.map_into(big, up);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(t * g.map_into(big, up));
  gens.push_back((one - t) * big_f);
  const GroebnerBasis gb = buchberger(big, gens, budget);
  std::vector<std::size_t> down = identity_map(n);
  down.push_back(SIZE_MAX);
  const std::size_t tag[] = {n};
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    if (g.degree_in(tag) > 0) continue;
    auto q = exact_divide(g.map_into(ring, down), local_f);
    if (!q) throw Error("ideal quotient: intersection element not divisible by f");
    out.push_back(std::move(*q));
  }
  return PolyIdeal(ring, std::move(out));
}

PolyIdeal ideal_quotient(const PolyIdeal& ideal, std::span<const Polynomial> factors, const Budget& budget) {
  PolyIdeal current = ideal;
  for (const auto& f : factors) current = ideal_quotient(current, f, budget);
  return current;
}

PolyIdeal saturate(const PolyIdeal& ideal, const Polynomial& f, const Budget& budget) {
  PolyIdeal current(ideal.ring(), ideal.groebner(budget).elements());
  while (true) {
    PolyIdeal next = ideal_quotient(current, f, budget);
    if (ideal_contains(current, next, budget)) return current;
    current = PolyIdeal(next.ring(), next.groebner(budget).elements());
  }
}

PolyIdeal saturate(const PolyIdeal& ideal, std::span<const Polynomial> factors, const Budget& budget) {
  PolyIdeal current = ideal;
  for (const auto& f : factors) current = saturate(current, f, budget);
  return current;
}

bool radical_membership(const Polynomial& f, const PolyIdeal& ideal, const Budget& budget) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  const RingPtr big = extended_ring(ring, "_y", false);
  const auto up = identity_map(n);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.map_into(big, up));
  const Polynomial y = Polynomial::variable(big, n);
  gens.push_back(Polynomial::constant(big, 1) - y * on_ring(ring, f).map_into(big, up));
  return buchberger(big, gens, budget).is_unit();
}

}  // namespace arrwb
