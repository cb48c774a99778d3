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

#ifndef ARRWB_FORMS_HPP_
#define ARRWB_FORMS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrwb/polynomial.hpp"

namespace arrwb {

// Subset of {0..nvars-1} as a bitmask; bit i stands for dx_{i}.
using FormMask = std::uint32_t;

// Sign of dx_a ^ dx_b rewritten as +-dx_{a|b}; zero when a and b overlap.
int mask_wedge_sign(FormMask a, FormMask b);

// All masks with p bits among nvars, ordered lexicographically by their
// sorted index lists.
std::vector<FormMask> masks_of_size(std::size_t nvars, std::size_t p);

// Polynomial p-form sum_I g_I dx_I.
class DifferentialForm {
 public:
  DifferentialForm(RingPtr ring, std::size_t degree) : ring_(std::move(ring)), degree_(degree) {}

  // The 1-form df.
  static DifferentialForm differential(const Polynomial& f);
  static DifferentialForm term(FormMask mask, const Polynomial& coeff);

  const RingPtr& ring() const { return ring_; }
  std::size_t degree() const { return degree_; }
  const std::map<FormMask, Polynomial>& components() const { return components_; }
  Polynomial coefficient(FormMask mask) const;
  bool is_zero() const { return components_.empty(); }
  // Largest coefficient degree, -1 for the zero form.
  int coefficient_degree() const;

  // Adds c * dx_mask.
  void add(FormMask mask, const Polynomial& c);
  DifferentialForm& operator+=(const DifferentialForm& other);
  DifferentialForm& operator*=(const Polynomial& c);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator*(const Polynomial& c, DifferentialForm a) { return a *= c; }

  // Exterior derivative.
  DifferentialForm d() const;
  // Coefficientwise exact division, nullopt if some coefficient is not
  // divisible.
  std::optional<DifferentialForm> divide(const Polynomial& q) const;

  std::string to_string() const;
  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

 private:
  RingPtr ring_;
  std::size_t degree_ = 0;
  std::map<FormMask, Polynomial> components_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

}  // namespace arrwb

#endif  // ARRWB_FORMS_HPP_
