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

#ifndef ARRWB_TESTS_ORACLES_EXTERIOR_HPP_
#define ARRWB_TESTS_ORACLES_EXTERIOR_HPP_

#include <bit>
#include <cstdint>
#include <vector>

#include "oracles/linalg.hpp"

namespace oracle {

// Hyperplanes as rows (c_1..c_l, b).
struct RawArrangement {
  std::size_t dim = 0;
  Rows forms;
};

inline std::size_t subset_rank(const RawArrangement& a, std::uint32_t s, bool augmented) {
  Rows rows;
  for (std::size_t i = 0; i < a.forms.size(); ++i) {
    if (!(s >> i & 1)) continue;
    std::vector<Q> row(a.forms[i].begin(), a.forms[i].begin() + static_cast<long>(a.dim));
    if (augmented) row.push_back(a.forms[i][a.dim]);
    rows.push_back(row);
  }
  return rank(rows);
}

inline bool consistent(const RawArrangement& a, std::uint32_t s) {
  return subset_rank(a, s, false) == subset_rank(a, s, true);
}

inline bool dependent(const RawArrangement& a, std::uint32_t s) {
  return subset_rank(a, s, false) < static_cast<std::size_t>(std::popcount(s));
}

// Sign of e_a ^ e_b relative to e_{a|b} for disjoint masks.
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t x = b; x; x &= x - 1) {
    const int j = std::countr_zero(x);
    swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 ? -1 : 1;
}

// Vectors in the full exterior algebra on n generators, indexed by masks.
using ExtVector = std::vector<Q>;

// Boundary of e_S: sum_k (-1)^k e_{S minus its k-th element}.
inline ExtVector boundary(std::uint32_t s, std::size_t n) {
  ExtVector v(std::size_t{1} << n, 0);
  int k = 0;
  for (std::uint32_t x = s; x; x &= x - 1, ++k) {
    const std::uint32_t bit = x & (~x + 1);
    v[s & ~bit] += k % 2 ? -1 : 1;
  }
  return v;
}

inline ExtVector wedge_mask(std::uint32_t t, const ExtVector& v) {
  ExtVector out(v.size(), 0);
  for (std::uint32_t m = 0; m < v.size(); ++m) {
    if (v[m] == 0 || (m & t)) continue;
    out[m | t] += wedge_sign(t, m) * v[m];
  }
  return out;
}

// Betti numbers of (E / I, omega ^) in degrees 0..n, where E is the
// exterior algebra and I is the Orlik-Solomon ideal, found by brute force
// over all subsets.
inline std::vector<std::size_t> brute_force_betti(const RawArrangement& a, const std::vector<Q>& lambda) {
  const std::size_t n = a.forms.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<ExtVector> ideal_gens;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (!consistent(a, s)) {
      ExtVector v(std::size_t{1} << n, 0);
      v[s] = 1;
      ideal_gens.push_back(v);
    } else if (dependent(a, s)) {
      ideal_gens.push_back(boundary(s, n));
    }
  }
  // I as a vector space: e_T ^ g for all generators g and masks T.
  std::vector<std::vector<ExtVector>> ideal_by_degree(n + 2);
  for (const auto& g : ideal_gens) {
    for (std::uint32_t t = 0; t <= full; ++t) {
      ExtVector v = wedge_mask(t, g);
      int deg = -1;
      bool nonzero = false;
      for (std::uint32_t m = 0; m <= full; ++m) {
        if (v[m] != 0) {
          nonzero = true;
          deg = std::popcount(m);
          break;
        }
      }
      if (nonzero) ideal_by_degree[static_cast<std::size_t>(deg)].push_back(std::move(v));
    }
  }
  auto masks_of = [&](std::size_t p) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m <= full; ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) == p) out.push_back(m);
    }
    return out;
  };
  auto restrict_to = [](const ExtVector& v, const std::vector<std::uint32_t>& masks) {
    std::vector<Q> out;
    for (auto m : masks) out.push_back(v[m]);
    return out;
  };
  auto omega_times = [&](std::uint32_t m) {
    ExtVector v(std::size_t{1} << n, 0);
    ExtVector unit(std::size_t{1} << n, 0);
    unit[m] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (lambda[j] == 0) continue;
      const ExtVector w = wedge_mask(std::uint32_t{1} << j, unit);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += lambda[j] * w[k];
    }
    return v;
  };
  auto ideal_rank = [&](std::size_t p) {
    const auto masks = masks_of(p);
    std::vector<std::vector<Q>> cols;
    for (const auto& v : ideal_by_degree[p]) cols.push_back(restrict_to(v, masks));
    return cols.empty() ? std::size_t{0} : rank(columns_to_rows(cols, masks.size()));
  };
  // rank of (omega E^p + I^{p+1}) inside E^{p+1}.
  auto image_plus_ideal = [&](std::size_t p) {
    const auto target = masks_of(p + 1);
    std::vector<std::vector<Q>> cols;
    for (auto m : masks_of(p)) cols.push_back(restrict_to(omega_times(m), target));
    for (const auto& v : ideal_by_degree[p + 1]) cols.push_back(restrict_to(v, target));
    return cols.empty() ? std::size_t{0} : rank(columns_to_rows(cols, target.size()));
  };
  std::vector<std::size_t> betti;
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t dim_e = masks_of(p).size();
    const std::size_t dim_i = ideal_rank(p);
    const std::size_t dim_i_next = p + 1 <= n ? ideal_rank(p + 1) : 0;
    const std::size_t map_rank = p + 1 <= n ? image_plus_ideal(p) - dim_i_next : 0;
    const std::size_t cycles = dim_e - map_rank - dim_i;
    const std::size_t boundaries = p > 0 ? image_plus_ideal(p - 1) - dim_i : 0;
    betti.push_back(cycles - boundaries);
  }
  return betti;
}

// dim (E / I)^p for every p.
inline std::vector<std::size_t> brute_force_dimensions(const RawArrangement& a) {
  return brute_force_betti(a, std::vector<Q>(a.forms.size(), 0));
}

}  // namespace oracle

#endif  // ARRWB_TESTS_ORACLES_EXTERIOR_HPP_
