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

#include "arrwb/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arrwb/error.hpp"
#include "arrwb/matrix.hpp"

namespace arrwb {
namespace {

bool proportional(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  return rank_of_rows({u, v}) < 2;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  IndexSet s(k);
  std::iota(s.begin(), s.end(), std::size_t{0});
  while (true) {
    f(static_cast<const IndexSet&>(s));
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i + 1));
  return out;
}

std::vector<std::string> default_variables(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

}  // namespace

std::size_t rank_of_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  return rank(RationalMatrix::from_rows(rows));
}

WeightVector WeightVector::parse(std::string_view text) { return WeightVector(parse_rational_list(text)); }

Rational WeightVector::sum() const {
  Rational s = 0;
  for (const auto& v : values_) s += v;
  return s;
}

bool WeightVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

WeightVector WeightVector::scaled(const Rational& t) const {
  std::vector<Rational> v = values_;
  for (auto& x : v) x *= t;
  return WeightVector(std::move(v));
}

WeightVector WeightVector::permuted(std::span<const std::size_t> order) const {
  std::vector<Rational> v;
  v.reserve(order.size());
  for (auto i : order) v.push_back(values_.at(i));
  return WeightVector(std::move(v));
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) s += ',';
    s += arrwb::to_string(values_[i]);
  }
  return s;
}

Arrangement Arrangement::build(std::vector<std::vector<Rational>> normals, std::vector<Rational> constants,
                               std::vector<std::string> labels, std::vector<std::string> variables) {
  Arrangement a;
  const std::size_t n = normals.size();
  a.dim_ = n == 0 ? variables.size() : normals.front().size();
  for (const auto& row : normals) {
    if (row.size() != a.dim_) throw InvalidArrangement("forms have inconsistent dimension");
    if (std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; })) {
      throw InvalidArrangement("zero linear form");
    }
  }
  if (constants.empty()) constants.assign(n, 0);
  if (constants.size() != n) throw InvalidArrangement("constant list has wrong length");
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw InvalidArrangement("label list has wrong length");
  if (variables.empty()) variables = default_variables(a.dim_);
  if (variables.size() != a.dim_) throw InvalidArrangement("variable list has wrong length");

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> ui = normals[i];
    ui.push_back(constants[i]);
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Rational> uj = normals[j];
      uj.push_back(constants[j]);
      if (proportional(ui, uj)) {
        throw InvalidArrangement("hyperplanes " + labels[j] + " and " + labels[i] + " coincide");
      }
    }
  }
  a.central_ = std::all_of(constants.begin(), constants.end(), [](const Rational& c) { return c == 0; });
  a.normals_ = std::move(normals);
  a.constants_ = std::move(constants);
  a.labels_ = std::move(labels);
  a.variables_ = std::move(variables);
  a.ring_ = Ring::make(a.variables_);
  return a;
}

Polynomial Arrangement::form(std::size_t i) const {
  return Polynomial::linear_form(ring_, normals_.at(i), constants_.at(i));
}

std::vector<Polynomial> Arrangement::forms() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(form(i));
  return out;
}

Polynomial Arrangement::defining_polynomial() const {
  Polynomial q = Polynomial::constant(ring_, 1);
  for (std::size_t i = 0; i < size(); ++i) q *= form(i);
  return q;
}

std::size_t Arrangement::rank() const {
  IndexSet all(size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return rank_of(all);
}

std::size_t Arrangement::rank_of(std::span<const std::size_t> subset) const {
  std::vector<std::vector<Rational>> rows;
  for (auto i : subset) rows.push_back(normals_.at(i));
  return rank_of_rows(rows);
}

std::size_t Arrangement::augmented_rank_of(std::span<const std::size_t> subset) const {
  std::vector<std::vector<Rational>> rows;
  for (auto i : subset) {
    rows.push_back(normals_.at(i));
    rows.back().push_back(constants_.at(i));
  }
  return rank_of_rows(rows);
}

bool Arrangement::is_consistent(std::span<const std::size_t> subset) const {
  return central_ || augmented_rank_of(subset) == rank_of(subset);
}

std::vector<IndexSet> Arrangement::circuits() const {
  std::vector<IndexSet> out;
  const std::size_t max_size = std::min(size(), rank() + 1);
  for (std::size_t k = 2; k <= max_size; ++k) {
    for_each_subset(size(), k, [&](const IndexSet& s) {
      if (rank_of(s) != k - 1) return;
      if (!is_consistent(s)) return;
      for (std::size_t drop = 0; drop < k; ++drop) {
        IndexSet t;
        for (std::size_t j = 0; j < k; ++j) {
          if (j != drop) t.push_back(s[j]);
        }
        if (rank_of(t) != k - 1) return;
      }
      out.push_back(s);
    });
  }
  return out;
}

std::vector<IndexSet> Arrangement::components() const {
  std::vector<std::size_t> parent(size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : circuits()) {
    for (std::size_t j = 1; j < c.size(); ++j) parent[find(c[j])] = find(c[0]);
  }
  std::vector<IndexSet> comps;
  std::vector<std::ptrdiff_t> slot(size(), -1);
  for (std::size_t i = 0; i < size(); ++i) {
    std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return comps;
}

bool Arrangement::is_irreducible() const {
  if (!central_) throw InvalidArrangement("irreducibility is defined here for central arrangements");
  return components().size() <= 1;
}

IndexSet Arrangement::closure(std::span<const std::size_t> subset) const {
  const std::size_t r = augmented_rank_of(subset);
  IndexSet out;
  IndexSet probe(subset.begin(), subset.end());
  for (std::size_t i = 0; i < size(); ++i) {
    probe.push_back(i);
    if (augmented_rank_of(probe) == r) out.push_back(i);
    probe.pop_back();
  }
  return out;
}

bool Arrangement::is_flat(std::span<const std::size_t> subset) const {
  IndexSet s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  return is_consistent(s) && closure(s) == s;
}

Flat Arrangement::flat_of(std::span<const std::size_t> subset) const {
  IndexSet c = closure(subset);
  return Flat{c, rank_of(c)};
}

std::vector<Flat> Arrangement::flats(std::size_t max_rank) const {
  std::set<IndexSet> seen;
  std::vector<Flat> out;
  for (std::size_t k = 1; k <= std::min(max_rank, rank()); ++k) {
    std::vector<Flat> level;
    for_each_subset(size(), k, [&](const IndexSet& s) {
      if (!is_independent(s) || !is_consistent(s)) return;
      IndexSet c = closure(s);
      if (seen.insert(c).second) level.push_back(Flat{c, k});
    });
    std::sort(level.begin(), level.end(), [](const Flat& a, const Flat& b) { return a.hyperplanes < b.hyperplanes; });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Arrangement Arrangement::localization(const Flat& flat) const {
  if (!is_flat(flat.hyperplanes)) throw InvalidArrangement("localization requires a closed flat");
  return subarrangement(flat.hyperplanes);
}

Arrangement Arrangement::subarrangement(std::span<const std::size_t> indices) const {
  std::vector<std::vector<Rational>> normals;
  std::vector<Rational> constants;
  std::vector<std::string> labels;
  for (auto i : indices) {
    normals.push_back(normals_.at(i));
    constants.push_back(constants_.at(i));
    labels.push_back(labels_.at(i));
  }
  return build(std::move(normals), std::move(constants), std::move(labels), variables_);
}

Arrangement Arrangement::permuted(std::span<const std::size_t> order) const {
  if (order.size() != size()) throw InvalidArrangement("permutation has wrong length");
  return subarrangement(order);
}

bool operator==(const Arrangement& a, const Arrangement& b) {
  return a.dim_ == b.dim_ && a.normals_ == b.normals_ && a.constants_ == b.constants_ && a.labels_ == b.labels_ &&
         a.variables_ == b.variables_;
}

std::pair<Arrangement, WeightVector> cone(const Arrangement& affine, const WeightVector& weights) {
  if (affine.is_central()) throw InvalidArrangement("cone expects an affine arrangement");
  if (weights.size() != affine.size()) throw InvalidArrangement("weight vector has wrong length");
  const std::size_t dim = affine.dim();
  std::vector<std::vector<Rational>> normals;
  std::vector<Rational> x0(dim + 1);
  x0[0] = 1;
  normals.push_back(x0);
  for (std::size_t i = 0; i < affine.size(); ++i) {
    std::vector<Rational> row{affine.constant(i)};
    row.insert(row.end(), affine.normal(i).begin(), affine.normal(i).end());
    normals.push_back(std::move(row));
  }
  std::vector<std::string> labels{"0"};
  labels.insert(labels.end(), affine.labels().begin(), affine.labels().end());
  if (std::count(labels.begin(), labels.end(), "0") > 1) labels.front() = "h0";
  std::vector<std::string> vars{"x0"};
  vars.insert(vars.end(), affine.variables().begin(), affine.variables().end());
  if (std::count(vars.begin(), vars.end(), "x0") > 1) vars.front() = "x_0";
  std::vector<Rational> w{-weights.sum()};
  w.insert(w.end(), weights.values().begin(), weights.values().end());
  return {Arrangement::build(std::move(normals), {}, std::move(labels), std::move(vars)), WeightVector(std::move(w))};
}

Arrangement direct_sum(const Arrangement& a1, const Arrangement& a2) {
  if (!a1.is_central() || !a2.is_central()) throw InvalidArrangement("direct sum expects central arrangements");
  const std::size_t d1 = a1.dim();
  const std::size_t d2 = a2.dim();
  std::vector<std::vector<Rational>> normals;
  for (const auto& row : a1.normals()) {
    std::vector<Rational> r = row;
    r.resize(d1 + d2);
    normals.push_back(std::move(r));
  }
  for (const auto& row : a2.normals()) {
    std::vector<Rational> r(d1);
    r.insert(r.end(), row.begin(), row.end());
    normals.push_back(std::move(r));
  }
  std::vector<std::string> vars = a1.variables();
  vars.insert(vars.end(), a2.variables().begin(), a2.variables().end());
  if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size()) vars.clear();
  std::vector<std::string> labels = a1.labels();
  labels.insert(labels.end(), a2.labels().begin(), a2.labels().end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) labels.clear();
  return Arrangement::build(std::move(normals), {}, std::move(labels), std::move(vars));
}

}  // namespace arrwb
