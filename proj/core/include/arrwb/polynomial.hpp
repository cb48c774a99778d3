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

#ifndef ARRWB_POLYNOMIAL_HPP_
#define ARRWB_POLYNOMIAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrwb/monomial.hpp"
#include "arrwb/rational.hpp"
#include "arrwb/ring.hpp"

namespace arrwb {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse multivariate polynomial over Q. Terms are kept strictly decreasing
// in the ring's term order with no zero coefficients, so equal polynomials
// have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  // Combines like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // sum_j coeffs[j] * x_{first_var + j} + constant
  static Polynomial linear_form(RingPtr ring, std::span<const Rational> coeffs, const Rational& constant = 0,
                                std::size_t first_var = 0);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one()); }
  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  // Degree restricted to the given variables.
  int degree_in(std::span<const std::size_t> vars) const;

  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  // this - c * m * other, computed by a single merge.
  Polynomial sub_scaled(const Rational& c, const Monomial& m, const Polynomial& other) const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  // Replaces variable `var` by `value` (a polynomial in the same ring).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  // Sets variable `var` to a rational constant.
  Polynomial specialize(std::size_t var, const Rational& value) const;
  // Rewrites into `target`, sending variable i to target variable var_map[i].
  Polynomial map_into(const RingPtr& target, std::span<const std::size_t> var_map) const;
  // Same variables, possibly a different term order.
  Polynomial reorder(const RingPtr& target) const;

  // Scaled so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms, bool /*trusted*/)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

// Exact quotient p / q, or nullopt when q does not divide p.
// Throws DivisionByZero when q is zero.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

// Monomials of total degree d in the first nvars variables, in decreasing
// grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

// Formatting of a monomial against a ring's variable names ("1" for 1).
std::string monomial_to_string(const Ring& ring, const Monomial& m);

}  // namespace arrwb

#endif  // ARRWB_POLYNOMIAL_HPP_
