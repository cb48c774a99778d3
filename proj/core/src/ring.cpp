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

#include "arrwb/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arrwb/error.hpp"

namespace arrwb {

TermOrder::TermOrder(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

TermOrder TermOrder::grevlex(std::size_t nvars) {
  Block all(nvars);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return TermOrder({std::move(all)});
}

TermOrder TermOrder::with_leading_block(Block block) const {
  std::vector<Block> blocks;
  blocks.push_back(std::move(block));
  blocks.insert(blocks.end(), blocks_.begin(), blocks_.end());
  return TermOrder(std::move(blocks));
}

TermOrder TermOrder::with_trailing_block(Block block) const {
  std::vector<Block> blocks = blocks_;
  blocks.push_back(std::move(block));
  return TermOrder(std::move(blocks));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const Block& block : blocks_) {
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t v : block) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da <=> db;
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
  }
  return std::strong_ordering::equal;
}

Ring::Ring(std::vector<std::string> names, TermOrder order) : names_(std::move(names)), order_(std::move(order)) {
  if (names_.size() > kMaxVars) throw Error("too many ring variables (max 16)");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw Error("duplicate ring variable name");
  std::vector<std::size_t> covered;
  for (const auto& block : order_.blocks()) covered.insert(covered.end(), block.begin(), block.end());
  std::sort(covered.begin(), covered.end());
  std::vector<std::size_t> expected(names_.size());
  std::iota(expected.begin(), expected.end(), std::size_t{0});
  if (covered != expected) throw Error("term order blocks must partition the ring variables");
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
  auto n = names.size();
  return std::make_shared<const Ring>(std::move(names), TermOrder::grevlex(n));
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names, TermOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(order));
}

std::shared_ptr<const Ring> Ring::standard(std::size_t nvars, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i + 1));
  return make(std::move(names));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::shared_ptr<const Ring> Ring::with_order(TermOrder order) const { return make(names_, std::move(order)); }

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace arrwb
