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

#ifndef ARRWB_RING_HPP_
#define ARRWB_RING_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arrwb/monomial.hpp"

namespace arrwb {

// Block term order. Blocks are compared in sequence; within a block
// monomials are compared by graded reverse lexicographic order on the
// block's variables, listed from most to least significant.
class TermOrder {
 public:
  using Block = std::vector<std::size_t>;

  TermOrder() = default;
  explicit TermOrder(std::vector<Block> blocks);

  static TermOrder grevlex(std::size_t nvars);

  // Prepends a block made of a single variable, eliminating it.
  TermOrder with_leading_block(Block block) const;
  TermOrder with_trailing_block(Block block) const;

  const std::vector<Block>& blocks() const { return blocks_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  std::vector<Block> blocks_;
};

// Polynomial ring over Q: variable names plus a term order.
class Ring {
 public:
  Ring(std::vector<std::string> names, TermOrder order);

  static std::shared_ptr<const Ring> make(std::vector<std::string> names);
  static std::shared_ptr<const Ring> make(std::vector<std::string> names, TermOrder order);

  // x1..xn
  static std::shared_ptr<const Ring> standard(std::size_t nvars, const std::string& prefix = "x");

  std::size_t nvars() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const TermOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  // Same variables, different order.
  std::shared_ptr<const Ring> with_order(TermOrder order) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace arrwb

#endif  // ARRWB_RING_HPP_
