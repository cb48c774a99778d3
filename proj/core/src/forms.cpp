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

#include "arrwb/forms.hpp"

#include <algorithm>
#include <bit>

#include "arrwb/error.hpp"

namespace arrwb {

int mask_wedge_sign(FormMask a, FormMask b) {
  if ((a & b) != 0) return 0;
  // Count pairs (i in a, j in b) with i > j.
  std::size_t inversions = 0;
  for (FormMask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += static_cast<std::size_t>(std::popcount(a >> (j + 1)));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<FormMask> masks_of_size(std::size_t nvars, std::size_t p) {
  std::vector<std::pair<std::vector<int>, FormMask>> keyed;
  for (FormMask m = 0; m < (FormMask{1} << nvars); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) != p) continue;
    std::vector<int> idx;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m & (FormMask{1} << i)) idx.push_back(static_cast<int>(i));
    }
    keyed.emplace_back(std::move(idx), m);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<FormMask> out;
  for (const auto& [idx, m] : keyed) out.push_back(m);
  return out;
}

DifferentialForm DifferentialForm::differential(const Polynomial& f) {
  DifferentialForm out(f.ring(), 1);
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) out.add(FormMask{1} << i, f.derivative(i));
  return out;
}

DifferentialForm DifferentialForm::term(FormMask mask, const Polynomial& coeff) {
  DifferentialForm out(coeff.ring(), static_cast<std::size_t>(std::popcount(mask)));
  out.add(mask, coeff);
  return out;
}

Polynomial DifferentialForm::coefficient(FormMask mask) const {
  auto it = components_.find(mask);
  return it == components_.end() ? Polynomial(ring_) : it->second;
}

int DifferentialForm::coefficient_degree() const {
  int d = -1;
  for (const auto& [mask, c] : components_) d = std::max(d, c.total_degree());
  return d;
}

void DifferentialForm::add(FormMask mask, const Polynomial& c) {
  if (static_cast<std::size_t>(std::popcount(mask)) != degree_) throw Error("form component of wrong degree");
  if (c.is_zero()) return;
  auto [it, inserted] = components_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) components_.erase(it);
  }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& other) {
  if (other.degree_ != degree_) throw Error("adding forms of different degrees");
  for (const auto& [mask, c] : other.components_) add(mask, c);
  return *this;
}

DifferentialForm& DifferentialForm::operator*=(const Polynomial& c) {
  if (c.is_zero()) {
    components_.clear();
    return *this;
  }
  for (auto& [mask, g] : components_) g *= c;
  return *this;
}

DifferentialForm DifferentialForm::d() const {
  DifferentialForm out(ring_, degree_ + 1);
  for (const auto& [mask, g] : components_) {
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      const FormMask bit = FormMask{1} << i;
      const int sign = mask_wedge_sign(bit, mask);
      if (sign == 0) continue;
      Polynomial dg = g.derivative(i);
      if (dg.is_zero()) continue;
      out.add(bit | mask, sign > 0 ? dg : -dg);
    }
  }
  return out;
}

std::optional<DifferentialForm> DifferentialForm::divide(const Polynomial& q) const {
  DifferentialForm out(ring_, degree_);
  for (const auto& [mask, g] : components_) {
    auto r = exact_divide(g, q);
    if (!r) return std::nullopt;
    out.add(mask, *r);
  }
  return out;
}

std::string DifferentialForm::to_string() const {
  if (components_.empty()) return "0";
  std::string s;
  for (const auto& [mask, g] : components_) {
    if (!s.empty()) s += " + ";
    s += "(" + g.to_string() + ")";
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (mask & (FormMask{1} << i)) s += "*d" + ring_->name(i);
    }
  }
  return s;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  DifferentialForm out(a.ring(), a.degree() + b.degree());
  for (const auto& [ma, ga] : a.components()) {
    for (const auto& [mb, gb] : b.components()) {
      const int sign = mask_wedge_sign(ma, mb);
      if (sign == 0) continue;
      Polynomial prod = ga * gb;
      out.add(ma | mb, sign > 0 ? prod : -prod);
    }
  }
  return out;
}

}  // namespace arrwb
