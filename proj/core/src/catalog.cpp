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

#include "arrwb/catalog.hpp"

#include "arrwb/error.hpp"

namespace arrwb {
namespace {

using Rows = std::vector<std::vector<Rational>>;

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

WeightVector ones_then(std::size_t n, std::size_t k, const Rational& last) {
  std::vector<Rational> v(n, 0);
  for (std::size_t i = 0; i + 1 < k; ++i) v[i] = 1;
  v[k - 1] = last;
  return WeightVector(std::move(v));
}

void require_r(int r) {
  if (r != 1 && r != 2) throw InvalidArrangement("only r = 1 and r = 2 factor over the rationals");
}

CatalogEntry make_entry(std::string name, std::string description, Arrangement a) {
  return CatalogEntry{std::move(name), std::move(description), std::move(a), {}, {}, {}, 0, false};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (std::size_t n = 3; n <= 6; ++n) {
    auto e = make_entry("pencil-" + std::to_string(n), std::to_string(n) + " lines through the origin in the plane",
                        pencil(n));
    e.facts.free = true;
    e.facts.exponents = {0, static_cast<int>(n) - 2};
    e.facts.nbc_sizes = {1, n, n - 1};
    e.facts.minimal_generators = 2;
    e.resonant.push_back({"sum-zero", ones_then(n, n, -Rational(static_cast<long>(n - 1)))});
    out.push_back(std::move(e));
  }
  for (std::size_t ell = 2; ell <= 3; ++ell) {
    auto e = make_entry("boolean-" + std::to_string(ell), "coordinate hyperplanes", boolean_arrangement(ell));
    e.facts.free = true;
    e.facts.exponents = std::vector<int>(ell, 0);
    e.facts.nbc_sizes = ell == 2 ? std::vector<std::size_t>{1, 2, 1} : std::vector<std::size_t>{1, 3, 3, 1};
    e.facts.minimal_generators = ell;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("braid-A3", "reflection arrangement of type A3, supersolvable", braid_a3());
    e.facts.free = true;
    e.facts.exponents = {0, 1, 2};
    e.facts.nbc_sizes = {1, 6, 11, 6};
    e.facts.minimal_generators = 3;
    e.resonant = local_resonant_weights(e.arrangement, 1);
    e.resonant.push_back({"non-local", WeightVector({q(-2), q(1), q(1), q(1), q(1), q(-2)})});
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("X3", "Q = xyz(x+y)(x+z)(y+z)", x3_arrangement());
    e.facts.free = false;
    e.facts.nbc_sizes = {1, 6, 12, 7};
    e.facts.minimal_generators = 4;
    e.resonant = local_resonant_weights(e.arrangement, 2);
    out.push_back(std::move(e));
  }
  for (int r = 1; r <= 2; ++r) {
    auto e = make_entry("monomial-deletion-" + std::to_string(r),
                        "Q = x1 x2 (x1^r-x2^r)(x1^r-x3^r)(x2^r-x3^r) with r = " + std::to_string(r),
                        monomial_deletion(r));
    e.facts.free = true;
    e.facts.exponents = r == 1 ? std::vector<int>{0, 1, 1} : std::vector<int>{0, 2, 3};
    e.facts.nbc_sizes = r == 1 ? std::vector<std::size_t>{1, 5, 8, 4} : std::vector<std::size_t>{1, 8, 19, 12};
    e.facts.minimal_generators = 3;
    e.resonant = local_resonant_weights(e.arrangement, 1);
    e.resonant.push_back({"alpha=1,beta=-1,gamma=0", monomial_deletion_weights(r, 1, -1, 0)});
    e.parametrization = [r](std::span<const Rational> p) { return monomial_deletion_weights(r, p[0], p[1], p[2]); };
    e.parameter_count = 3;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("tame-nonfree-2", "Q = x1 x2 (x1^2-x3^2)(x2^2-x3^2): tame, not free", tame_nonfree(2));
    e.facts.free = false;
    e.facts.nbc_sizes = {1, 6, 13, 8};
    e.facts.minimal_generators = 4;
    e.resonant = local_resonant_weights(e.arrangement, 1);
    e.resonant.push_back({"alpha=1,beta=-1", tame_nonfree_weights(2, 1, -1)});
    e.parametrization = [](std::span<const Rational> p) { return tame_nonfree_weights(2, p[0], p[1]); };
    e.parameter_count = 2;
    out.push_back(std::move(e));
  }
  {
    auto e = make_entry("ER9", "nine hyperplanes in 4-space, not tame", er9());
    e.facts.free = false;
    e.facts.nbc_sizes = {1, 9, 30, 42, 20};
    e.facts.unverified = {"not tame", "S/I is not Cohen-Macaulay: projective dimension 5, codimension 4",
                          "I has the embedded prime (x1, x2, x3, x4)"};
    e.resonant = local_resonant_weights(e.arrangement, 1);
    e.reduced_scope = true;
    out.push_back(std::move(e));
  }
  {
    // z = (0, 3), m = (1, 1), kappa = 7/2: weights -m_j/kappa and 2/kappa.
    auto e = make_entry("discriminantal-2-2", "lines x_i = z_j and x1 = x2 with z = (0, 3)", discriminantal_2_2(0, 3));
    e.facts.nbc_sizes = {1, 5, 6};
    const Rational kappa = q(7, 2);
    const Rational w = -1 / kappa;
    e.resonant.push_back({"m=(1,1),kappa=7/2", WeightVector({w, w, w, w, 2 / kappa})});
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Arrangement pencil(std::size_t n) {
  if (n < 2) throw InvalidArrangement("a pencil needs at least two lines");
  Rows rows{{q(1), q(0)}, {q(0), q(1)}};
  for (std::size_t k = 2; k < n; ++k) rows.push_back({q(1), -Rational(static_cast<long>(k - 1))});
  return Arrangement::build(std::move(rows));
}

Arrangement boolean_arrangement(std::size_t ell) {
  Rows rows;
  for (std::size_t i = 0; i < ell; ++i) {
    std::vector<Rational> row(ell, 0);
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  return Arrangement::build(std::move(rows));
}

Arrangement braid_a3() {
  return Arrangement::build({{q(1), q(0), q(0)},
                             {q(0), q(1), q(0)},
                             {q(0), q(0), q(1)},
                             {q(1), q(-1), q(0)},
                             {q(1), q(0), q(-1)},
                             {q(0), q(1), q(-1)}});
}

Arrangement x3_arrangement() {
  return Arrangement::build({{q(1), q(0), q(0)},
                             {q(0), q(1), q(0)},
                             {q(0), q(0), q(1)},
                             {q(1), q(1), q(0)},
                             {q(1), q(0), q(1)},
                             {q(0), q(1), q(1)}});
}

Arrangement monomial_deletion(int r) {
  require_r(r);
  if (r == 1) {
    return Arrangement::build(
        {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(1), q(-1), q(0)}, {q(1), q(0), q(-1)}, {q(0), q(1), q(-1)}});
  }
  return Arrangement::build({{q(1), q(0), q(0)},
                             {q(0), q(1), q(0)},
                             {q(1), q(-1), q(0)},
                             {q(1), q(1), q(0)},
                             {q(1), q(0), q(-1)},
                             {q(1), q(0), q(1)},
                             {q(0), q(1), q(-1)},
                             {q(0), q(1), q(1)}});
}

Arrangement tame_nonfree(int r) {
  require_r(r);
  if (r == 1) {
    return Arrangement::build({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(1), q(0), q(-1)}, {q(0), q(1), q(-1)}});
  }
  return Arrangement::build({{q(1), q(0), q(0)},
                             {q(0), q(1), q(0)},
                             {q(1), q(0), q(-1)},
                             {q(1), q(0), q(1)},
                             {q(0), q(1), q(-1)},
                             {q(0), q(1), q(1)}});
}

Arrangement er9() {
  return Arrangement::build({{q(1), q(0), q(0), q(0)},
                             {q(0), q(1), q(0), q(0)},
                             {q(0), q(0), q(1), q(0)},
                             {q(1), q(0), q(0), q(1)},
                             {q(0), q(1), q(0), q(1)},
                             {q(0), q(0), q(1), q(1)},
                             {q(1), q(1), q(0), q(1)},
                             {q(1), q(0), q(1), q(1)},
                             {q(0), q(1), q(1), q(1)}});
}

Arrangement discriminantal_2_2(const Rational& z1, const Rational& z2) {
  if (z1 == z2) throw InvalidArrangement("discriminantal points must be distinct");
  return Arrangement::build({{q(1), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(0), q(1)}, {q(1), q(-1)}},
                            {-z1, -z2, -z1, -z2, q(0)}, {"x1-z1", "x1-z2", "x2-z1", "x2-z2", "x1-x2"});
}

Arrangement generic_affine_lines(std::size_t k) {
  Rows rows;
  std::vector<Rational> constants;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational r(static_cast<long>(i));
    rows.push_back({q(1), r});
    constants.push_back(r * r);
  }
  return Arrangement::build(std::move(rows), std::move(constants));
}

WeightVector monomial_deletion_weights(int r, const Rational& alpha, const Rational& beta, const Rational& gamma) {
  require_r(r);
  if (r == 1) return WeightVector({alpha, beta, gamma, beta, alpha});
  return WeightVector({2 * alpha, 2 * beta, gamma, gamma, beta, beta, alpha, alpha});
}

WeightVector tame_nonfree_weights(int r, const Rational& alpha, const Rational& beta) {
  require_r(r);
  if (r == 1) return WeightVector({alpha, beta, beta, alpha});
  return WeightVector({2 * alpha, 2 * beta, beta, beta, alpha, alpha});
}

std::vector<Derivation> monomial_deletion_basis(int r) {
  require_r(r);
  const RingPtr ring = monomial_deletion(r).ring();
  auto x = [&](std::size_t i) { return Polynomial::variable(ring, i); };
  const auto ur = static_cast<unsigned>(r);
  Derivation d2{{pow(x(0), ur + 1), pow(x(1), ur + 1), pow(x(2), ur + 1)}};
  const Polynomial x3r = pow(x(2), ur - 1);
  Derivation d3{{x(0) * pow(x(1), ur) * x3r, pow(x(0), ur) * x(1) * x3r, pow(x(0), ur) * pow(x(1), ur)}};
  return {euler_derivation(ring), d2, d3};
}

std::vector<NamedWeights> local_resonant_weights(const Arrangement& a, std::size_t max_flats) {
  std::vector<NamedWeights> out;
  for (const auto& flat : a.flats(2)) {
    if (out.size() >= max_flats) break;
    if (flat.rank != 2 || flat.hyperplanes.size() < 3) continue;
    std::vector<Rational> v(a.size(), 0);
    std::string name = "local:";
    for (std::size_t k = 0; k < flat.hyperplanes.size(); ++k) {
      v[flat.hyperplanes[k]] = k + 1 < flat.hyperplanes.size()
                                   ? Rational(1)
                                   : -Rational(static_cast<long>(flat.hyperplanes.size() - 1));
      name += (k == 0 ? "" : ",") + a.label(flat.hyperplanes[k]);
    }
    out.push_back({std::move(name), WeightVector(std::move(v))});
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace arrwb
