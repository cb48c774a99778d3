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

#ifndef ARRWB_GROEBNER_HPP_
#define ARRWB_GROEBNER_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "arrwb/polynomial.hpp"

namespace arrwb {

// Cap on reduction steps of one Groebner computation. Exceeding it raises
// BudgetExceeded instead of running on.
struct Budget {
  std::uint64_t max_steps = 20'000'000;

  // WORKBENCH_BUDGET if set, otherwise the default above.
  static Budget from_env();
  static Budget unlimited() { return Budget{UINT64_MAX}; }
};

// Reduced Groebner basis with monic elements sorted by increasing leading
// monomial in the ring's term order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, std::uint64_t steps)
      : ring_(std::move(ring)), basis_(std::move(basis)), steps_(steps) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return basis_; }
  std::vector<Monomial> leading_monomials() const;
  std::uint64_t steps() const { return steps_; }

  bool is_unit() const { return basis_.size() == 1 && basis_.front().is_constant(); }
  bool is_zero() const { return basis_.empty(); }
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.basis_ == b.basis_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::uint64_t steps_ = 0;
};

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const Budget& budget = Budget::from_env());

// Finite generating set, zero generators dropped and duplicates (up to a
// scalar) removed. The Groebner basis is computed once and cached.
class PolyIdeal {
 public:
  PolyIdeal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const GroebnerBasis& groebner(const Budget& budget = Budget::from_env()) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  struct Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> basis;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct Codimension {
  // V(I) is empty (1 is in I).
  bool empty = false;
  std::size_t codim = 0;
  // A maximal set of variables independent modulo the leading terms.
  std::vector<std::size_t> independent;
};

Codimension codimension(const GroebnerBasis& gb);
Codimension codimension(const PolyIdeal& ideal, const Budget& budget = Budget::from_env());

// Number of standard monomials; throws Error unless the ideal is
// zero-dimensional.
std::size_t zero_dim_count(const GroebnerBasis& gb);
std::size_t zero_dim_count(const PolyIdeal& ideal, const Budget& budget = Budget::from_env());

// Equal as ideals: identical reduced bases.
bool same_ideal(const PolyIdeal& a, const PolyIdeal& b, const Budget& budget = Budget::from_env());
// Every generator of `inner` lies in `outer`.
bool ideal_contains(const PolyIdeal& outer, const PolyIdeal& inner, const Budget& budget = Budget::from_env());

// (I : f), computed from I cap (f) with a tag variable eliminated first.
PolyIdeal ideal_quotient(const PolyIdeal& ideal, const Polynomial& f, const Budget& budget = Budget::from_env());
// (I : f1 f2 ... fk) = (...((I : f1) : f2) ... : fk).
PolyIdeal ideal_quotient(const PolyIdeal& ideal, std::span<const Polynomial> factors,
                         const Budget& budget = Budget::from_env());
// (I : f^inf), iterating quotients until the ideal stops growing.
PolyIdeal saturate(const PolyIdeal& ideal, const Polynomial& f, const Budget& budget = Budget::from_env());
// (I : (f1 ... fk)^inf), one factor at a time.
PolyIdeal saturate(const PolyIdeal& ideal, std::span<const Polynomial> factors,
                   const Budget& budget = Budget::from_env());

// f in rad(I) iff 1 in I + (1 - y f) with a new variable y.
bool radical_membership(const Polynomial& f, const PolyIdeal& ideal, const Budget& budget = Budget::from_env());

}  // namespace arrwb

#endif  // ARRWB_GROEBNER_HPP_
