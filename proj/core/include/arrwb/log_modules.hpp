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

#ifndef ARRWB_LOG_MODULES_HPP_
#define ARRWB_LOG_MODULES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrwb/arrangement.hpp"
#include "arrwb/forms.hpp"

namespace arrwb {

// Polynomial vector field sum_j g_j d/dx_j.
struct Derivation {
  std::vector<Polynomial> coeffs;

  Polynomial apply(const Polynomial& f) const;
  // Coefficient degree (-1 for zero). Derivations here are homogeneous.
  int degree() const;
  bool is_zero() const;
  std::string to_string() const;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

Derivation euler_derivation(const RingPtr& ring);

// theta(f_i) divisible by f_i for every hyperplane.
bool is_logarithmic(const Arrangement& a, const Derivation& theta);

// Basis of Der(A) in coefficient degree d.
std::vector<Derivation> derivations_in_degree(const Arrangement& a, unsigned d);

struct DerivationGenerators {
  unsigned bound = 0;
  // dim Der(A)_d for d = 0..bound.
  std::vector<std::size_t> dims;
  // Minimal generators, ordered by coefficient degree.
  std::vector<Derivation> generators;
  std::vector<unsigned> degrees;
  // False when new generators still appear at the bound.
  bool stabilized = true;
};

// Minimal generators of Der(A) come in coefficient degree at most n - rank + 1
// for the catalog; the default searches one degree further.
unsigned default_derivation_bound(const Arrangement& a);

DerivationGenerators minimal_derivation_generators(const Arrangement& a, std::optional<unsigned> bound = {});

struct SaitoResult {
  enum class Status { kFree, kNotLogarithmic, kWrongCount, kZeroDeterminant, kNotMultipleOfQ };
  Status status = Status::kZeroDeterminant;
  // det(g_ij) = scalar * Q when free.
  Rational scalar = 0;
  // Coefficient degree minus one, sorted ascending.
  std::vector<int> exponents;
  bool free() const { return status == Status::kFree; }
};

std::string to_string(SaitoResult::Status s);

SaitoResult saito_free_check(const Arrangement& a, std::span<const Derivation> candidates);

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring);

struct FreenessCertificate {
  bool free = false;
  std::vector<int> exponents;
  DerivationGenerators generators;
};

// Free iff the minimal generators number rank(A) and pass the Saito check.
FreenessCertificate freeness(const Arrangement& a, std::optional<unsigned> bound = {});

// dim Der(A)_d predicted for a free arrangement with the given exponents.
std::size_t free_hilbert_function(std::size_t nvars, std::span<const int> exponents, unsigned d);

// Basis of Omega^p(A)_m, each element stored as the cleared form Q * eta.
std::vector<DifferentialForm> log_forms_in_degree(const Arrangement& a, std::size_t p, int m);

// Q * omega_lambda, a polynomial 1-form of coefficient degree n - 1.
DifferentialForm cleared_omega(const Arrangement& a, const WeightVector& lambda);

// Cleared image of omega_lambda ^ eta given the cleared form of eta.
DifferentialForm omega_wedge_cleared(const Polynomial& q, const DifferentialForm& q_omega,
                                     const DifferentialForm& phi);

struct LogCohomologyTable {
  int m_min = 0;
  int m_max = 0;
  // dims[m - m_min][p] = dim Omega^p(A)_m, betti likewise for H^p.
  std::vector<std::vector<std::size_t>> dims;
  std::vector<std::vector<std::size_t>> betti;
  // omega ^ omega vanished on every computed piece.
  bool squares_to_zero = true;
};

LogCohomologyTable log_complex_cohomology(const Arrangement& a, const WeightVector& lambda, int m_min, int m_max);

// <Euler, omega_lambda> = sum of the weights.
Rational euler_pairing(const WeightVector& lambda);

// The wedge pairing Omega^p(A)_m x Omega^{l-p}(A)_{l-p} -> Omega^l(A) is
// injective in the first argument.
bool self_duality_check(const Arrangement& a, std::size_t p, int m);

}  // namespace arrwb

#endif  // ARRWB_LOG_MODULES_HPP_
