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

#ifndef ARRWB_CRITICAL_IDEAL_HPP_
#define ARRWB_CRITICAL_IDEAL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrwb/arrangement.hpp"
#include "arrwb/groebner.hpp"
#include "arrwb/log_modules.hpp"

namespace arrwb {

// omega = sum_i a_i df_i / f_i, stored through its cleared numerators
// Q d_j = sum_i a_i c_ij Q / f_i. In specialized mode a = lambda and the ring
// is the coordinate ring; in universal mode a_1..a_n are extra ring
// variables ordered after the coordinates (block order x >> a).
class CriticalOneForm {
 public:
  static CriticalOneForm specialized(const Arrangement& a, const WeightVector& lambda);
  static CriticalOneForm universal(const Arrangement& a);

  bool is_universal() const { return universal_; }
  const RingPtr& ring() const { return ring_; }
  const Polynomial& defining_polynomial() const { return q_; }
  // Q d_1, ..., Q d_l.
  const std::vector<Polynomial>& numerators() const { return numerators_; }
  // The hyperplane forms f_i in ring().
  const std::vector<Polynomial>& forms() const { return forms_; }
  // Index of a_i in ring() (universal mode).
  std::size_t weight_variable(std::size_t i) const { return arrangement_dim_ + i; }

  // Moves a polynomial of the coordinate ring into ring().
  Polynomial lift(const Polynomial& p) const;
  // <theta, omega> = (sum_j g_j Q d_j) / Q. Throws Error if the quotient is
  // not a polynomial, which means theta is not logarithmic.
  Polynomial pair(const Derivation& theta) const;
  // Substitutes a = lambda in a universal-mode polynomial.
  Polynomial specialize(const Polynomial& p, const WeightVector& lambda, const RingPtr& target) const;

 private:
  explicit CriticalOneForm(RingPtr ring) : ring_(ring), q_(std::move(ring)) {}

  bool universal_ = false;
  std::size_t arrangement_dim_ = 0;
  RingPtr ring_;
  Polynomial q_;
  std::vector<Polynomial> numerators_;
  std::vector<Polynomial> forms_;
};

// Ideal of the pairings of the given derivations (normally the minimal
// generators of Der(A)) with omega. Zero pairings are dropped.
PolyIdeal logarithmic_ideal(const CriticalOneForm& omega, std::span<const Derivation> generators);
PolyIdeal logarithmic_ideal(const Arrangement& a, const WeightVector& lambda);
// I' = (Q d_1, ..., Q d_l).
PolyIdeal naive_ideal(const CriticalOneForm& omega);

// Minimal generators of the universal ideal, counted degree by degree from
// the pairings of Der(A)_d against those coming from lower degrees.
std::size_t universal_minimal_generator_count(const Arrangement& a, std::optional<unsigned> bound = {});

// (I' : Q) == I, with the quotient taken one hyperplane at a time.
bool quotient_identity_check(const CriticalOneForm& omega, std::span<const Derivation> generators,
                             const Budget& budget = Budget::from_env());

struct OriginMembership {
  bool origin_in_variety = false;
  bool weights_sum_to_zero = false;
  bool holds() const { return origin_in_variety == weights_sum_to_zero; }
};

// For irreducible central A: 0 in V(I_lambda) iff sum lambda_i = 0.
OriginMembership origin_membership_check(const Arrangement& a, const WeightVector& lambda,
                                         const Budget& budget = Budget::from_env());

// I(A1 + A2) == S_2 I(A1) + S_1 I(A2) at the given weights.
bool reducible_decomposition_check(const Arrangement& a1, const Arrangement& a2, const WeightVector& lambda1,
                                   const WeightVector& lambda2, const Budget& budget = Budget::from_env());

struct CriticalSetReport {
  WeightVector lambda;
  std::vector<Polynomial> ideal_generators;
  Codimension ideal_codim;
  // Reduced basis of (I_lambda : Q^inf).
  std::vector<Polynomial> saturation;
  Codimension saturation_codim;
  std::optional<std::size_t> point_count;
};

CriticalSetReport critical_set_report(const Arrangement& a, const WeightVector& lambda,
                                      const Budget& budget = Budget::from_env());

}  // namespace arrwb

#endif  // ARRWB_CRITICAL_IDEAL_HPP_
