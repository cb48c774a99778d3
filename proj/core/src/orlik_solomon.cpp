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

#include "arrwb/orlik_solomon.hpp"

#include <algorithm>

#include "arrwb/error.hpp"

namespace arrwb {

int wedge_sign(const IndexSet& a, const IndexSet& b) {
  std::size_t inversions = 0;
  for (auto i : a) {
    for (auto j : b) {
      if (i == j) return 0;
      if (i > j) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

IndexSet merge_sets(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NbcBasis::NbcBasis(const Arrangement& a) {
  for (const auto& c : a.circuits()) {
    broken_.emplace_back(c.begin() + 1, c.end());
    broken_source_.push_back(c);
  }
  auto contains_broken = [&](const IndexSet& s) {
    return std::any_of(broken_.begin(), broken_.end(),
                       [&](const IndexSet& b) { return std::includes(s.begin(), s.end(), b.begin(), b.end()); });
  };
  basis_.push_back({IndexSet{}});
  while (true) {
    std::vector<IndexSet> next;
    for (const auto& s : basis_.back()) {
      const std::size_t start = s.empty() ? 0 : s.back() + 1;
      for (std::size_t j = start; j < a.size(); ++j) {
        IndexSet t = s;
        t.push_back(j);
        if (!a.is_independent(t) || contains_broken(t)) continue;
        next.push_back(std::move(t));
      }
    }
    if (next.empty()) break;
    basis_.push_back(std::move(next));
  }
  for (const auto& level : basis_) {
    for (std::size_t k = 0; k < level.size(); ++k) index_.emplace(level[k], k);
  }
}

std::vector<std::size_t> NbcBasis::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : basis_) out.push_back(level.size());
  return out;
}

std::optional<std::size_t> NbcBasis::index_of(const IndexSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

OsAlgebra::OsAlgebra(const Arrangement& a) : arrangement_(a), basis_(a) {
  const std::size_t top = basis_.top_degree();
  products_.resize(top);
  for (std::size_t p = 0; p < top; ++p) {
    const auto& level = basis_.degree(p);
    products_[p].resize(level.size());
    for (std::size_t k = 0; k < level.size(); ++k) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        SparseVector col;
        for (const auto& [set, coeff] : product_with_generator(j, level[k])) {
          col.emplace_back(*basis_.index_of(set), coeff);
        }
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        products_[p][k].push_back(std::move(col));
      }
    }
  }
}

OsElement OsAlgebra::straighten(const IndexSet& s) const {
  if (auto it = cache_.find(s); it != cache_.end()) return it->second;
  OsElement out;
  if (s.empty()) {
    out[s] = 1;
  } else if (arrangement_.is_independent(s)) {
    const auto& broken = basis_.broken_circuits();
    std::size_t hit = broken.size();
    for (std::size_t i = 0; i < broken.size(); ++i) {
      if (std::includes(s.begin(), s.end(), broken[i].begin(), broken[i].end())) {
        hit = i;
        break;
      }
    }
    if (hit == broken.size()) {
      out[s] = 1;
    } else {
      // e_B = -sum_{k>=1} (-1)^k e_{C minus c_k} where B = C minus min(C).
      const IndexSet& b = broken[hit];
      const IndexSet& c = basis_.circuit_of_broken(hit);
      IndexSet rest;
      std::set_difference(s.begin(), s.end(), b.begin(), b.end(), std::back_inserter(rest));
      const int sign_br = wedge_sign(b, rest);
      for (std::size_t k = 1; k < c.size(); ++k) {
        IndexSet t;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (i != k) t.push_back(c[i]);
        }
        const int sign_tr = wedge_sign(t, rest);
        if (sign_tr == 0) continue;
        const int sign = (k % 2 == 1 ? 1 : -1) * sign_br * sign_tr;
        for (const auto& [set, coeff] : straighten(merge_sets(t, rest))) {
          Rational& slot = out[set];
          slot += sign * coeff;
          if (slot == 0) out.erase(set);
        }
      }
    }
  }
  cache_.emplace(s, out);
  return out;
}

OsElement OsAlgebra::product_with_generator(std::size_t j, const IndexSet& s) const {
  const IndexSet single{j};
  const int sign = wedge_sign(single, s);
  if (sign == 0) return {};
  OsElement out = straighten(merge_sets(single, s));
  if (sign < 0) {
    for (auto& [set, coeff] : out) coeff = -coeff;
  }
  return out;
}

RationalMatrix OsAlgebra::aomoto_matrix(const WeightVector& lambda, std::size_t p) const {
  if (lambda.size() != arrangement_.size()) throw InvalidArrangement("weight vector has wrong length");
  RationalMatrix m(basis_.size(p + 1), basis_.size(p));
  if (p >= products_.size()) return m;
  for (std::size_t k = 0; k < products_[p].size(); ++k) {
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      if (lambda[j] == 0) continue;
      for (const auto& [row, coeff] : products_[p][k][j]) m(row, k) += lambda[j] * coeff;
    }
  }
  return m;
}

AomotoComplex::AomotoComplex(const OsAlgebra& algebra, WeightVector lambda)
    : lambda_(std::move(lambda)), dims_(algebra.basis().sizes()) {
  for (std::size_t p = 0; p + 1 < dims_.size(); ++p) matrices_.push_back(algebra.aomoto_matrix(lambda_, p));
}

std::vector<std::size_t> AomotoComplex::betti() const {
  std::vector<std::size_t> ranks;
  for (const auto& m : matrices_) ranks.push_back(rank(m));
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < dims_.size(); ++p) {
    std::size_t h = dims_[p];
    if (p < ranks.size()) h -= ranks[p];
    if (p > 0) h -= ranks[p - 1];
    out.push_back(h);
  }
  return out;
}

std::vector<std::size_t> aomoto_betti(const Arrangement& a, const WeightVector& lambda) {
  OsAlgebra algebra(a);
  return AomotoComplex(algebra, lambda).betti();
}

ResonanceResult resonance_least_p(const Arrangement& a, const WeightVector& lambda) {
  ResonanceResult r;
  r.betti = aomoto_betti(a, lambda);
  const std::size_t top = r.betti.size() - 1;
  r.top_dimension = r.betti[top];
  for (std::size_t p = 0; p < top; ++p) {
    if (r.betti[p] != 0) {
      r.least_p = p;
      break;
    }
  }
  return r;
}

PoincareData poincare_and_euler(const Arrangement& a) {
  PoincareData d;
  Integer alt = 0;
  const auto sizes = NbcBasis(a).sizes();
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    Integer c(static_cast<unsigned long>(sizes[p]));
    d.poincare.push_back(c);
    alt += p % 2 == 0 ? c : Integer(-c);
  }
  d.euler_abs = abs(alt);
  return d;
}

bool cone_betti_relation_check(const Arrangement& affine, const WeightVector& lambda) {
  const auto base = aomoto_betti(affine, lambda);
  auto [coned, coned_weights] = cone(affine, lambda);
  const auto lifted = aomoto_betti(coned, coned_weights);
  if (lifted.size() != base.size() + 1) return false;
  for (std::size_t p = 0; p < lifted.size(); ++p) {
    std::size_t expect = (p < base.size() ? base[p] : 0) + (p > 0 ? base[p - 1] : 0);
    if (lifted[p] != expect) return false;
  }
  return true;
}

}  // namespace arrwb
