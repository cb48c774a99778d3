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

#ifndef ARRWB_TESTS_ORACLES_LINALG_HPP_
#define ARRWB_TESTS_ORACLES_LINALG_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Rows = std::vector<std::vector<Q>>;

// Plain Gaussian elimination over Q, kept separate from the library's
// fraction-free code.
inline std::size_t rank(Rows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline Q determinant(Rows m) {
  const std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Q f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

// Columns of `a` followed by columns of `b`, both given as column lists.
inline Rows columns_to_rows(const std::vector<std::vector<Q>>& columns, std::size_t height) {
  Rows out(height, std::vector<Q>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < height; ++i) out[i][j] = columns[j][i];
  }
  return out;
}

}  // namespace oracle

#endif  // ARRWB_TESTS_ORACLES_LINALG_HPP_
