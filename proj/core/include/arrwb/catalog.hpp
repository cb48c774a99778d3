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

#ifndef ARRWB_CATALOG_HPP_
#define ARRWB_CATALOG_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrwb/arrangement.hpp"
#include "arrwb/log_modules.hpp"

namespace arrwb {

struct KnownFacts {
  std::optional<bool> free;
  // Exponents with the Euler derivation at 0; set for free entries.
  std::vector<int> exponents;
  std::vector<std::size_t> nbc_sizes;
  std::optional<std::size_t> minimal_generators;
  // Facts recorded for reference only and never checked by self-test.
  std::vector<std::string> unverified;
};

struct NamedWeights {
  std::string name;
  WeightVector lambda;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Arrangement arrangement;
  KnownFacts facts;
  // Weights expected to be resonant, tried by the harness on every run.
  std::vector<NamedWeights> resonant;
  // Maps family parameters, e.g. (alpha, beta, gamma), to weights.
  std::function<WeightVector(std::span<const Rational>)> parametrization;
  std::size_t parameter_count = 0;
  // Only freeness and generic-weight codimension are checked.
  bool reduced_scope = false;
};

Arrangement pencil(std::size_t n);
Arrangement boolean_arrangement(std::size_t ell);
Arrangement braid_a3();
Arrangement x3_arrangement();
// Q = x1 x2 (x1^r - x2^r)(x1^r - x3^r)(x2^r - x3^r), r in {1, 2}.
Arrangement monomial_deletion(int r);
// Q = x1 x2 (x1^r - x3^r)(x2^r - x3^r), r in {1, 2}.
Arrangement tame_nonfree(int r);
Arrangement er9();
// Affine arrangement of the lines x_i = z_j and x1 = x2 in the plane.
Arrangement discriminantal_2_2(const Rational& z1, const Rational& z2);
// Lines x + i y + i^2 = 0, i = 0..k-1: no two parallel, no three concurrent.
Arrangement generic_affine_lines(std::size_t k);

// Weights of x1^{r alpha} x2^{r beta} (x1^r-x2^r)^gamma (x1^r-x3^r)^beta (x2^r-x3^r)^alpha.
WeightVector monomial_deletion_weights(int r, const Rational& alpha, const Rational& beta, const Rational& gamma);
// Weights of x1^{r alpha} x2^{r beta} (x1^r-x3^r)^beta (x2^r-x3^r)^alpha.
WeightVector tame_nonfree_weights(int r, const Rational& alpha, const Rational& beta);
// The three basis derivations of Der for monomial_deletion(r).
std::vector<Derivation> monomial_deletion_basis(int r);

// Weights 1, ..., 1, -(k-1) on the first rank-2 flats with at least three
// hyperplanes, zero elsewhere.
std::vector<NamedWeights> local_resonant_weights(const Arrangement& a, std::size_t max_flats);

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& name);

}  // namespace arrwb

#endif  // ARRWB_CATALOG_HPP_
