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

#ifndef ARRWB_ARRANGEMENT_HPP_
#define ARRWB_ARRANGEMENT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arrwb/polynomial.hpp"
#include "arrwb/rational.hpp"
#include "arrwb/ring.hpp"

namespace arrwb {

using IndexSet = std::vector<std::size_t>;

// Weights attached to the hyperplanes, parallel to the form list.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> values) : values_(std::move(values)) {}

  // "1, 1, -2"
  static WeightVector parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }
  Rational sum() const;
  bool is_zero() const;
  WeightVector scaled(const Rational& t) const;
  WeightVector permuted(std::span<const std::size_t> order) const;
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Rational> values_;
};

struct Flat {
  IndexSet hyperplanes;  // sorted
  std::size_t rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

// A finite list of distinct hyperplanes f_i = <c_i, x> + b_i in Q^dim.
// Central iff every constant b_i is zero. Hyperplane order is the input
// order and is significant for broken-circuit computations.
class Arrangement {
 public:
  // Throws InvalidArrangement on a zero normal or proportional forms.
  static Arrangement build(std::vector<std::vector<Rational>> normals, std::vector<Rational> constants = {},
                           std::vector<std::string> labels = {}, std::vector<std::string> variables = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return normals_.size(); }
  bool is_central() const { return central_; }

  const std::vector<Rational>& normal(std::size_t i) const { return normals_[i]; }
  const Rational& constant(std::size_t i) const { return constants_[i]; }
  const std::vector<std::vector<Rational>>& normals() const { return normals_; }
  const std::vector<Rational>& constants() const { return constants_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::string>& variables() const { return variables_; }

  // Grevlex ring on the coordinate variables.
  const RingPtr& ring() const { return ring_; }
  Polynomial form(std::size_t i) const;
  std::vector<Polynomial> forms() const;
  // Q = product of all forms.
  Polynomial defining_polynomial() const;

  std::size_t rank() const;
  std::size_t rank_of(std::span<const std::size_t> subset) const;
  bool is_essential() const { return rank() == dim_; }
  bool is_independent(std::span<const std::size_t> subset) const { return rank_of(subset) == subset.size(); }
  // Nonempty common intersection.
  bool is_consistent(std::span<const std::size_t> subset) const;

  // Minimal dependent subsets with nonempty intersection, each sorted, in
  // order of size then lexicographically.
  std::vector<IndexSet> circuits() const;

  // Connected components of the matroid (central arrangements).
  std::vector<IndexSet> components() const;
  bool is_irreducible() const;

  IndexSet closure(std::span<const std::size_t> subset) const;
  bool is_flat(std::span<const std::size_t> subset) const;
  // Flats of rank 1..max_rank, ordered by rank then lexicographically.
  std::vector<Flat> flats(std::size_t max_rank = 3) const;
  Flat flat_of(std::span<const std::size_t> subset) const;

  // Hyperplanes containing the flat, as their own arrangement.
  Arrangement localization(const Flat& flat) const;
  Arrangement subarrangement(std::span<const std::size_t> indices) const;
  // New arrangement whose i-th hyperplane is this one's order[i].
  Arrangement permuted(std::span<const std::size_t> order) const;

  friend bool operator==(const Arrangement& a, const Arrangement& b);

 private:
  Arrangement() = default;
  std::size_t augmented_rank_of(std::span<const std::size_t> subset) const;

  std::size_t dim_ = 0;
  bool central_ = true;
  std::vector<std::vector<Rational>> normals_;
  std::vector<Rational> constants_;
  std::vector<std::string> labels_;
  std::vector<std::string> variables_;
  RingPtr ring_;
};

// Homogenizes an affine arrangement with a new first coordinate x0 and a new
// first hyperplane x0 = 0 carrying weight -sum(weights).
std::pair<Arrangement, WeightVector> cone(const Arrangement& affine, const WeightVector& weights);

// Block-diagonal arrangement in the product space.
Arrangement direct_sum(const Arrangement& a1, const Arrangement& a2);

// Rank-nullity convenience: dimension of the span of the given vectors.
std::size_t rank_of_rows(const std::vector<std::vector<Rational>>& rows);

}  // namespace arrwb

#endif  // ARRWB_ARRANGEMENT_HPP_
