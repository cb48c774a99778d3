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

#ifndef ARRWB_TESTS_TEST_SUPPORT_HPP_
#define ARRWB_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arrwb/arrangement.hpp"
#include "arrwb/poly_io.hpp"
#include "oracles/exterior.hpp"

namespace arrwb::testing {

inline Polynomial P(const RingPtr& ring, const std::string& text) { return parse_polynomial(ring, text); }

inline WeightVector W(const std::string& text) { return WeightVector::parse(text); }

inline Rational R(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline oracle::RawArrangement raw(const Arrangement& a) {
  oracle::RawArrangement out;
  out.dim = a.dim();
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<oracle::Q> row(a.normal(i).begin(), a.normal(i).end());
    row.push_back(a.constant(i));
    out.forms.push_back(row);
  }
  return out;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  Rational rational(long bound = 20) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return R(num(rng_), den(rng_));
  }

  Rational nonzero(long bound = 20) {
    Rational r = 0;
    while (r == 0) r = rational(bound);
    return r;
  }

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Polynomial polynomial(const RingPtr& ring, std::size_t terms, unsigned max_degree) {
    Polynomial p(ring);
    for (std::size_t t = 0; t < terms; ++t) {
      Monomial m;
      for (std::size_t v = 0; v < ring->nvars(); ++v) {
        m.set(v, static_cast<Monomial::Exponent>(std::uniform_int_distribution<unsigned>(0, max_degree)(rng_)));
      }
      p += Polynomial::monomial(ring, m, nonzero());
    }
    return p;
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace arrwb::testing

#endif  // ARRWB_TESTS_TEST_SUPPORT_HPP_
