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

#ifndef ARRWB_ORLIK_SOLOMON_HPP_
#define ARRWB_ORLIK_SOLOMON_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "arrwb/arrangement.hpp"
#include "arrwb/matrix.hpp"

namespace arrwb {

// Linear combination of exterior monomials e_S, keyed by sorted index set.
using OsElement = std::map<IndexSet, Rational>;

// Sign of e_a ^ e_b rewritten as +-e_{a u b}; zero when a and b meet.
int wedge_sign(const IndexSet& a, const IndexSet& b);
IndexSet merge_sets(const IndexSet& a, const IndexSet& b);

// No-broken-circuit basis of the Orlik-Solomon algebra in the input order of
// the hyperplanes. Works for central and affine arrangements: only circuits
// with nonempty intersection produce broken circuits.
class NbcBasis {
 public:
  explicit NbcBasis(const Arrangement& a);

  // Highest degree with a nonzero basis, equal to rank(A).
  std::size_t top_degree() const { return basis_.size() - 1; }
  const std::vector<IndexSet>& degree(std::size_t p) const { return basis_.at(p); }
  std::size_t size(std::size_t p) const { return p < basis_.size() ? basis_[p].size() : 0; }
  std::vector<std::size_t> sizes() const;
  std::optional<std::size_t> index_of(const IndexSet& s) const;
  const std::vector<IndexSet>& broken_circuits() const { return broken_; }
  // Circuit whose broken circuit is broken_circuits()[i].
  const IndexSet& circuit_of_broken(std::size_t i) const { return broken_source_[i]; }

 private:
  std::vector<std::vector<IndexSet>> basis_;
  std::map<IndexSet, std::size_t> index_;
  std::vector<IndexSet> broken_;
  std::vector<IndexSet> broken_source_;
};

// The algebra A(A) with precomputed products by the degree-one generators.
class OsAlgebra {
 public:
  explicit OsAlgebra(const Arrangement& a);

  const Arrangement& arrangement() const { return arrangement_; }
  const NbcBasis& basis() const { return basis_; }

  // Expansion of e_S in the NBC basis for any sorted index set S.
  OsElement straighten(const IndexSet& s) const;
  // e_j ^ e_s for an NBC set s, expanded in the NBC basis.
  OsElement product_with_generator(std::size_t j, const IndexSet& s) const;

  // Matrix of omega_lambda ^ : A^p -> A^{p+1}; rows index degree p+1.
  RationalMatrix aomoto_matrix(const WeightVector& lambda, std::size_t p) const;

 private:
  Arrangement arrangement_;
  NbcBasis basis_;
  mutable std::map<IndexSet, OsElement> cache_;
  // products_[p][k][j] = e_j ^ (k-th NBC set of degree p), as sparse column.
  std::vector<std::vector<std::vector<SparseVector>>> products_;
};

// The Aomoto complex (A(A), omega_lambda ^).
class AomotoComplex {
 public:
  AomotoComplex(const OsAlgebra& algebra, WeightVector lambda);

  const WeightVector& weights() const { return lambda_; }
  std::size_t top_degree() const { return dims_.size() - 1; }
  // d_p : A^p -> A^{p+1} for p < top_degree().
  const RationalMatrix& matrix(std::size_t p) const { return matrices_.at(p); }
  const std::vector<std::size_t>& dimensions() const { return dims_; }
  // dim H^0 .. dim H^top.
  std::vector<std::size_t> betti() const;

 private:
  WeightVector lambda_;
  std::vector<std::size_t> dims_;
  std::vector<RationalMatrix> matrices_;
};

std::vector<std::size_t> aomoto_betti(const Arrangement& a, const WeightVector& lambda);

struct ResonanceResult {
  std::vector<std::size_t> betti;
  // Least p below the top degree with H^p != 0, if any.
  std::optional<std::size_t> least_p;
  std::size_t top_dimension = 0;
  bool resonant() const { return least_p.has_value(); }
};

ResonanceResult resonance_least_p(const Arrangement& a, const WeightVector& lambda);

struct PoincareData {
  // Coefficients of pi(A, t) from t^0 upwards.
  std::vector<Integer> poincare;
  // |pi(A, -1)|
  Integer euler_abs = 0;
};

PoincareData poincare_and_euler(const Arrangement& a);

// Betti numbers of the cone are b'_p = b_p + b_{p-1}.
bool cone_betti_relation_check(const Arrangement& affine, const WeightVector& lambda);

}  // namespace arrwb

#endif  // ARRWB_ORLIK_SOLOMON_HPP_
