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

#ifndef ARRWB_TESTS_ORACLES_DELETION_RESTRICTION_HPP_
#define ARRWB_TESTS_ORACLES_DELETION_RESTRICTION_HPP_

#include <vector>

#include "oracles/exterior.hpp"

namespace oracle {

using Poly1 = std::vector<Q>;  // coefficients from t^0 upwards

inline bool proportional(const std::vector<Q>& a, const std::vector<Q>& b) {
  return rank({a, b}) < 2;
}

// Hyperplanes of the restriction to the last hyperplane, in dim - 1
// coordinates, with empty intersections dropped and repeats merged.
inline RawArrangement restrict_to_last(const RawArrangement& a) {
  const auto& h = a.forms.back();
  std::size_t k = 0;
  while (h[k] == 0) ++k;
  RawArrangement out;
  out.dim = a.dim - 1;
  for (std::size_t i = 0; i + 1 < a.forms.size(); ++i) {
    const auto& g = a.forms[i];
    const Q f = g[k] / h[k];
    std::vector<Q> row;
    bool zero_normal = true;
    for (std::size_t j = 0; j <= a.dim; ++j) {
      if (j == k) continue;
      row.push_back(g[j] - f * h[j]);
      if (j < a.dim && row.back() != 0) zero_normal = false;
    }
    if (zero_normal) continue;
    bool seen = false;
    for (const auto& r : out.forms) seen = seen || proportional(r, row);
    if (!seen) out.forms.push_back(row);
  }
  return out;
}

// Poincare polynomial by pi(A) = pi(A - H) + t pi(A^H).
inline Poly1 poincare(const RawArrangement& a) {
  if (a.forms.empty()) return {Q(1)};
  RawArrangement deletion = a;
  deletion.forms.pop_back();
  Poly1 del = poincare(deletion);
  const Poly1 res = poincare(restrict_to_last(a));
  if (del.size() < res.size() + 1) del.resize(res.size() + 1, 0);
  for (std::size_t i = 0; i < res.size(); ++i) del[i + 1] += res[i];
  while (del.size() > 1 && del.back() == 0) del.pop_back();
  return del;
}

inline Q abs_euler(const Poly1& p) {
  Q s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += i % 2 ? -p[i] : p[i];
  return abs(s);
}

}  // namespace oracle

#endif  // ARRWB_TESTS_ORACLES_DELETION_RESTRICTION_HPP_
