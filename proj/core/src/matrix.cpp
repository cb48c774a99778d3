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

#include "arrwb/matrix.hpp"

#include <algorithm>

#include "arrwb/error.hpp"

namespace arrwb {
namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

IntRow to_int_row(const SparseVector& v) {
  Integer l = 1;
  for (const auto& [i, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) {
    Integer n = x.get_num() * (l / x.get_den());
    out.emplace_back(i, std::move(n));
  }
  return out;
}

void make_primitive(IntRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& [i, x] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (r.front().second < 0) g = -g;
  for (auto& [i, x] : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

const Integer* find_entry(const IntRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) return &it->second;
  return nullptr;
}

// a*s - b*r, then primitive.
IntRow combine(const IntRow& s, const Integer& a, const IntRow& r, const Integer& b) {
  IntRow out;
  out.reserve(s.size() + r.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < s.size() || j < r.size()) {
    if (j == r.size() || (i < s.size() && s[i].first < r[j].first)) {
      out.emplace_back(s[i].first, a * s[i].second);
      ++i;
    } else if (i == s.size() || r[j].first < s[i].first) {
      out.emplace_back(r[j].first, -b * r[j].second);
      ++j;
    } else {
      Integer v = a * s[i].second - b * r[j].second;
      if (v != 0) out.emplace_back(s[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

// Eliminates column `col` of s using pivot row r whose entry at col is p.
IntRow eliminate(const IntRow& s, const Integer& s_col, const IntRow& r, const Integer& p) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), s_col.get_mpz_t());
  return combine(s, p / g, r, s_col / g);
}

// Fraction-free Bareiss forward elimination on an integer copy of m.
// Returns the rank; `det` receives the determinant for square input.
std::size_t bareiss(const RationalMatrix& m, Rational* det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  Integer scale_total = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale_total *= l;
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det != nullptr) {
    if (rows != cols) throw Error("determinant of a non-square matrix");
    if (r < rows) {
      *det = 0;
    } else {
      *det = Rational(prev * sign, scale_total);
      det->canonicalize();
    }
  }
  return r;
}

}  // namespace

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

SparseVector to_sparse(std::span<const Rational> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) v.emplace_back(i, dense[i]);
  }
  return v;
}

std::size_t rank(const RationalMatrix& m) { return bareiss(m, nullptr); }

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Rational d;
  bareiss(m, &d);
  return d;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  std::vector<SparseVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_sparse(m.row(i)));
  return nullspace(rows, m.cols());
}

std::vector<std::vector<Rational>> nullspace(std::span<const SparseVector> rows, std::size_t cols) {
  // Semi-echelon form keyed by pivot column.
  std::map<std::size_t, IntRow> echelon;
  for (const auto& sv : rows) {
    IntRow v = to_int_row(sv);
    make_primitive(v);
    while (!v.empty()) {
      auto it = echelon.find(v.front().first);
      if (it == echelon.end()) {
        std::size_t pc = v.front().first;
        echelon.emplace(pc, std::move(v));
        break;
      }
      v = eliminate(v, v.front().second, it->second, it->second.front().second);
    }
  }
  // Back substitution to reduced form: clear each pivot column from the
  // rows above it.
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    const std::size_t pc = it->first;
    const IntRow& r = it->second;
    for (auto jt = echelon.begin(); jt != echelon.end() && jt->first < pc; ++jt) {
      const Integer* e = find_entry(jt->second, pc);
      if (e == nullptr) continue;
      Integer s_col = *e;
      jt->second = eliminate(jt->second, s_col, r, r.front().second);
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (const auto& [pc, r] : echelon) is_pivot[pc] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (const auto& [pc, r] : echelon) {
      const Integer* e = find_entry(r, f);
      if (e == nullptr) continue;
      v[pc] = Rational(-*e, r.front().second);
      v[pc].canonicalize();
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> solve(const RationalMatrix& m, std::span<const Rational> rhs, bool& solvable) {
  if (rhs.size() != m.rows()) throw Error("right-hand side has wrong length");
  // Kernel of [M | -b] with last coordinate 1.
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = -rhs[i];
  }
  for (const auto& v : nullspace(aug)) {
    if (v.back() != 0) {
      solvable = true;
      std::vector<Rational> x(v.begin(), v.end() - 1);
      for (auto& xi : x) xi /= v.back();
      return x;
    }
  }
  solvable = false;
  return {};
}

IncrementalEchelon::IntRow IncrementalEchelon::reduce(IntRow v) const {
  make_primitive(v);
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    v = eliminate(v, v.front().second, it->second, it->second.front().second);
  }
  return v;
}

bool IncrementalEchelon::insert(const SparseVector& v) {
  IntRow r = reduce(to_int_row(v));
  if (r.empty()) return false;
  std::size_t pc = r.front().first;
  rows_.emplace(pc, std::move(r));
  return true;
}

bool IncrementalEchelon::in_span(const SparseVector& v) const { return reduce(to_int_row(v)).empty(); }

}  // namespace arrwb
