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

#ifndef ARRWB_MATRIX_HPP_
#define ARRWB_MATRIX_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "arrwb/rational.hpp"

namespace arrwb {

// Dense rectangular matrix of rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const;
  RationalMatrix transpose() const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Sparse vector: (index, value) pairs with strictly increasing indices and
// nonzero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(std::span<const Rational> dense);

// Rank and determinant by fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

// Basis of the right kernel {v : M v = 0}; size is cols - rank.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);
std::vector<std::vector<Rational>> nullspace(std::span<const SparseVector> rows, std::size_t cols);

// Solves M x = b, returning one solution or an empty optional-like empty
// vector flag through `solvable`.
std::vector<Rational> solve(const RationalMatrix& m, std::span<const Rational> rhs, bool& solvable);

// Row-echelon basis grown one vector at a time, over integers with content
// removal. Used for ranks of spans and complement selection.
class IncrementalEchelon {
 public:
  // Returns true when v is independent of the vectors inserted so far.
  bool insert(const SparseVector& v);
  bool in_span(const SparseVector& v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  using IntRow = std::vector<std::pair<std::size_t, Integer>>;
  IntRow reduce(IntRow v) const;

  std::map<std::size_t, IntRow> rows_;  // keyed by pivot column
};

}  // namespace arrwb

#endif  // ARRWB_MATRIX_HPP_
