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

#ifndef ARRWB_MONOMIAL_HPP_
#define ARRWB_MONOMIAL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace arrwb {

// Upper bound on ring variables. Universal-weight rings for the catalog
// need at most ell + n + 2 (tag variables) <= 16.
inline constexpr std::size_t kMaxVars = 16;

// Exponent vector. Entries beyond the owning ring's variable count are zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  constexpr Monomial() = default;

  static Monomial variable(std::size_t index, Exponent power = 1) {
    Monomial m;
    m.exps_[index] = power;
    return m;
  }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e) { exps_[i] = e; }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  // Support bitmask: bit i set iff variable i occurs.
  std::uint32_t support() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps_[i] != 0) mask |= (1u << i);
    }
    return mask;
  }

  bool coprime(const Monomial& other) const { return (support() & other.support()) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
    return m;
  }

  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
};

}  // namespace arrwb

template <>
struct std::hash<arrwb::Monomial> {
  std::size_t operator()(const arrwb::Monomial& m) const noexcept { return m.hash(); }
};

#endif  // ARRWB_MONOMIAL_HPP_
