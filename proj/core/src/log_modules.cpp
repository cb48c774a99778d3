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

#include "arrwb/log_modules.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "arrwb/error.hpp"
#include "arrwb/matrix.hpp"

namespace arrwb {
namespace {

void require_central(const Arrangement& a) {
  if (!a.is_central()) throw InvalidArrangement("logarithmic modules need a central arrangement");
}

// Working modulo f_i: the variable with the largest |coefficient| (lowest
// index on ties) is replaced by its solution of f_i = 0.
struct LinearReducer {
  std::size_t pivot = 0;
  Polynomial replacement;

  LinearReducer(const RingPtr& ring, const std::vector<Rational>& normal) : replacement(ring) {
    for (std::size_t j = 1; j < normal.size(); ++j) {
      if (abs(normal[j]) > abs(normal[pivot])) pivot = j;
    }
    std::vector<Rational> coeffs(normal.size());
    for (std::size_t j = 0; j < normal.size(); ++j) {
      if (j != pivot) coeffs[j] = -normal[j] / normal[pivot];
    }
    replacement = Polynomial::linear_form(ring, coeffs);
  }

  Polynomial reduce(const Polynomial& p) const { return p.substitute(pivot, replacement); }
};

struct MonomialIndex {
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, std::size_t> index;

  MonomialIndex(std::size_t nvars, unsigned degree) : monomials(monomials_of_degree(nvars, degree)) {
    for (std::size_t t = 0; t < monomials.size(); ++t) index.emplace(monomials[t], t);
  }
  std::size_t size() const { return monomials.size(); }
};

// Encodes a form whose coefficients are homogeneous of the index degree.
SparseVector encode_form(const DifferentialForm& form, const std::vector<FormMask>& comps, const MonomialIndex& mons) {
  SparseVector v;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Polynomial g = form.coefficient(comps[c]);
    for (const auto& t : g.terms()) v.emplace_back(c * mons.size() + mons.index.at(t.monomial), t.coeff);
  }
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

SparseVector encode_derivation(const Derivation& theta, const MonomialIndex& mons) {
  SparseVector v;
  for (std::size_t j = 0; j < theta.coeffs.size(); ++j) {
    for (const auto& t : theta.coeffs[j].terms()) v.emplace_back(j * mons.size() + mons.index.at(t.monomial), t.coeff);
  }
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

// Kernel of the conditions f_i | df_i ^ phi on p-forms with coefficients of
// degree k. With p = 0 and a single extra slot per variable this also
// encodes derivations; see derivations_in_degree.
class RowBuilder {
 public:
  std::size_t row(std::size_t i, FormMask mask, const Monomial& m) {
    auto& slot = keys_[{i, mask}];
    auto [it, inserted] = slot.emplace(m, rows_.size());
    if (inserted) rows_.emplace_back();
    return it->second;
  }
  void add(std::size_t r, std::size_t col, const Rational& v) { rows_[r].emplace_back(col, v); }
  std::vector<SparseVector>& rows() { return rows_; }

 private:
  std::map<std::pair<std::size_t, FormMask>, std::unordered_map<Monomial, std::size_t>> keys_;
  std::vector<SparseVector> rows_;
};

std::vector<std::vector<Polynomial>> reduced_monomials(const Arrangement& a, const MonomialIndex& mons) {
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    LinearReducer red(a.ring(), a.normal(i));
    std::vector<Polynomial> row;
    row.reserve(mons.size());
    for (const auto& m : mons.monomials) row.push_back(red.reduce(Polynomial::monomial(a.ring(), m)));
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Polynomial Derivation::apply(const Polynomial& f) const {
  Polynomial out(f.ring());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) out += coeffs[j] * f.derivative(j);
  }
  return out;
}

int Derivation::degree() const {
  int d = -1;
  for (const auto& g : coeffs) d = std::max(d, g.total_degree());
  return d;
}

bool Derivation::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Polynomial& g) { return g.is_zero(); });
}

std::string Derivation::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs[j].to_string() + ")*D" + coeffs[j].ring()->name(j);
  }
  return s.empty() ? "0" : s;
}

Derivation euler_derivation(const RingPtr& ring) {
  Derivation e;
  for (std::size_t j = 0; j < ring->nvars(); ++j) e.coeffs.push_back(Polynomial::variable(ring, j));
  return e;
}

bool is_logarithmic(const Arrangement& a, const Derivation& theta) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Polynomial f = a.form(i);
    if (!exact_divide(theta.apply(f), f)) return false;
  }
  return true;
}

std::vector<Derivation> derivations_in_degree(const Arrangement& a, unsigned d) {
  require_central(a);
  const std::size_t ell = a.dim();
  const MonomialIndex mons(ell, d);
  const auto reduced = reduced_monomials(a, mons);
  RowBuilder rows;
  // theta(f_i) = sum_j c_ij g_j, reduced modulo f_i.
  for (std::size_t j = 0; j < ell; ++j) {
    for (std::size_t t = 0; t < mons.size(); ++t) {
      const std::size_t col = j * mons.size() + t;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational& c = a.normal(i)[j];
        if (c == 0) continue;
        for (const auto& term : reduced[i][t].terms()) rows.add(rows.row(i, 0, term.monomial), col, c * term.coeff);
      }
    }
  }
  std::vector<Derivation> out;
  for (const auto& v : nullspace(rows.rows(), ell * mons.size())) {
    Derivation theta;
    for (std::size_t j = 0; j < ell; ++j) {
      std::vector<Term> terms;
      for (std::size_t t = 0; t < mons.size(); ++t) {
        const Rational& c = v[j * mons.size() + t];
        if (c != 0) terms.push_back({mons.monomials[t], c});
      }
      theta.coeffs.push_back(Polynomial::from_terms(a.ring(), std::move(terms)));
    }
    out.push_back(std::move(theta));
  }
  return out;
}

unsigned default_derivation_bound(const Arrangement& a) {
  return static_cast<unsigned>(a.size() - a.rank() + 2);
}

DerivationGenerators minimal_derivation_generators(const Arrangement& a, std::optional<unsigned> bound) {
  require_central(a);
  DerivationGenerators out;
  out.bound = bound.value_or(default_derivation_bound(a));
  const std::size_t ell = a.dim();
  std::vector<Derivation> previous;
  bool last_new = false;
  for (unsigned d = 0; d <= out.bound; ++d) {
    const MonomialIndex mons(ell, d);
    const auto basis = derivations_in_degree(a, d);
    out.dims.push_back(basis.size());
    IncrementalEchelon span;
    for (const auto& theta : previous) {
      for (std::size_t k = 0; k < ell; ++k) {
        Derivation shifted = theta;
        const Polynomial xk = Polynomial::variable(a.ring(), k);
        for (auto& g : shifted.coeffs) g *= xk;
        span.insert(encode_derivation(shifted, mons));
      }
    }
    last_new = false;
    for (const auto& theta : basis) {
      if (span.insert(encode_derivation(theta, mons))) {
        out.generators.push_back(theta);
        out.degrees.push_back(d);
        last_new = true;
      }
    }
    previous = basis;
  }
  out.stabilized = !last_new;
  return out;
}

std::string to_string(SaitoResult::Status s) {
  switch (s) {
    case SaitoResult::Status::kFree:
      return "free";
    case SaitoResult::Status::kNotLogarithmic:
      return "candidate not logarithmic";
    case SaitoResult::Status::kWrongCount:
      return "wrong number of candidates";
    case SaitoResult::Status::kZeroDeterminant:
      return "determinant is zero";
    case SaitoResult::Status::kNotMultipleOfQ:
      return "determinant is not a scalar multiple of Q";
  }
  return "unknown";
}

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * polynomial_determinant(minor, ring);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

SaitoResult saito_free_check(const Arrangement& a, std::span<const Derivation> candidates) {
  require_central(a);
  SaitoResult r;
  if (candidates.size() != a.dim()) {
    r.status = SaitoResult::Status::kWrongCount;
    return r;
  }
  for (const auto& theta : candidates) {
    if (!is_logarithmic(a, theta)) {
      r.status = SaitoResult::Status::kNotLogarithmic;
      return r;
    }
  }
  std::vector<std::vector<Polynomial>> m;
  for (const auto& theta : candidates) m.push_back(theta.coeffs);
  const Polynomial det = polynomial_determinant(m, a.ring());
  if (det.is_zero()) {
    r.status = SaitoResult::Status::kZeroDeterminant;
    return r;
  }
  auto quotient = exact_divide(det, a.defining_polynomial());
  if (!quotient || !quotient->is_constant()) {
    r.status = SaitoResult::Status::kNotMultipleOfQ;
    return r;
  }
  r.status = SaitoResult::Status::kFree;
  r.scalar = quotient->constant_term();
  for (const auto& theta : candidates) r.exponents.push_back(theta.degree() - 1);
  std::sort(r.exponents.begin(), r.exponents.end());
  return r;
}

FreenessCertificate freeness(const Arrangement& a, std::optional<unsigned> bound) {
  FreenessCertificate cert;
  cert.generators = minimal_derivation_generators(a, bound);
  if (cert.generators.generators.size() == a.dim()) {
    const auto saito = saito_free_check(a, cert.generators.generators);
    cert.free = saito.free();
    cert.exponents = saito.exponents;
  }
  return cert;
}

std::size_t free_hilbert_function(std::size_t nvars, std::span<const int> exponents, unsigned d) {
  std::size_t total = 0;
  for (int e : exponents) {
    const int shift = static_cast<int>(d) - (e + 1);
    if (shift >= 0) total += binomial(static_cast<std::size_t>(shift) + nvars - 1, nvars - 1);
  }
  return total;
}

std::vector<DifferentialForm> log_forms_in_degree(const Arrangement& a, std::size_t p, int m) {
  require_central(a);
  const std::size_t ell = a.dim();
  const int k = m + static_cast<int>(a.size()) - static_cast<int>(p);
  if (p > ell || k < 0) return {};
  const auto comps = masks_of_size(ell, p);
  const MonomialIndex mons(ell, static_cast<unsigned>(k));
  const auto reduced = reduced_monomials(a, mons);
  RowBuilder rows;
  // Component mask I of phi feeds df_i ^ phi at mask {j} u I.
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t t = 0; t < mons.size(); ++t) {
      const std::size_t col = c * mons.size() + t;
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < ell; ++j) {
          const Rational& cij = a.normal(i)[j];
          if (cij == 0) continue;
          const FormMask bit = FormMask{1} << j;
          const int sign = mask_wedge_sign(bit, comps[c]);
          if (sign == 0) continue;
          for (const auto& term : reduced[i][t].terms()) {
            rows.add(rows.row(i, bit | comps[c], term.monomial), col, sign * cij * term.coeff);
          }
        }
      }
    }
  }
  std::vector<DifferentialForm> out;
  for (const auto& v : nullspace(rows.rows(), comps.size() * mons.size())) {
    DifferentialForm phi(a.ring(), p);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      std::vector<Term> terms;
      for (std::size_t t = 0; t < mons.size(); ++t) {
        const Rational& coeff = v[c * mons.size() + t];
        if (coeff != 0) terms.push_back({mons.monomials[t], coeff});
      }
      phi.add(comps[c], Polynomial::from_terms(a.ring(), std::move(terms)));
    }
    out.push_back(std::move(phi));
  }
  return out;
}

DifferentialForm cleared_omega(const Arrangement& a, const WeightVector& lambda) {
  if (lambda.size() != a.size()) throw InvalidArrangement("weight vector has wrong length");
  DifferentialForm out(a.ring(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (lambda[i] == 0) continue;
    Polynomial others = Polynomial::constant(a.ring(), lambda[i]);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k != i) others *= a.form(k);
    }
    out += others * DifferentialForm::differential(a.form(i));
  }
  return out;
}

DifferentialForm omega_wedge_cleared(const Polynomial& q, const DifferentialForm& q_omega,
                                     const DifferentialForm& phi) {
  auto r = wedge(q_omega, phi).divide(q);
  if (!r) throw Error("omega ^ eta is not logarithmic; the input form is not in the module");
  return *r;
}

LogCohomologyTable log_complex_cohomology(const Arrangement& a, const WeightVector& lambda, int m_min, int m_max) {
  require_central(a);
  const std::size_t ell = a.dim();
  const Polynomial q = a.defining_polynomial();
  const DifferentialForm q_omega = cleared_omega(a, lambda);
  LogCohomologyTable table;
  table.m_min = m_min;
  table.m_max = m_max;
  for (int m = m_min; m <= m_max; ++m) {
    std::vector<std::vector<DifferentialForm>> bases;
    std::vector<std::size_t> dims;
    for (std::size_t p = 0; p <= ell; ++p) {
      bases.push_back(log_forms_in_degree(a, p, m));
      dims.push_back(bases.back().size());
    }
    // ranks[p] = rank of omega ^ : Omega^p_m -> Omega^{p+1}_m.
    std::vector<std::size_t> ranks(ell + 1, 0);
    for (std::size_t p = 0; p < ell; ++p) {
      const int k = m + static_cast<int>(a.size()) - static_cast<int>(p) - 1;
      if (k < 0 || bases[p].empty()) continue;
      const auto comps = masks_of_size(ell, p + 1);
      const MonomialIndex mons(ell, static_cast<unsigned>(k));
      IncrementalEchelon image;
      for (const auto& phi : bases[p]) {
        const DifferentialForm w = omega_wedge_cleared(q, q_omega, phi);
        image.insert(encode_form(w, comps, mons));
        if (p + 1 < ell && !omega_wedge_cleared(q, q_omega, w).is_zero()) table.squares_to_zero = false;
      }
      ranks[p] = image.rank();
    }
    std::vector<std::size_t> betti;
    for (std::size_t p = 0; p <= ell; ++p) betti.push_back(dims[p] - ranks[p] - (p > 0 ? ranks[p - 1] : 0));
    table.dims.push_back(std::move(dims));
    table.betti.push_back(std::move(betti));
  }
  return table;
}

Rational euler_pairing(const WeightVector& lambda) { return lambda.sum(); }

bool self_duality_check(const Arrangement& a, std::size_t p, int m) {
  require_central(a);
  const std::size_t ell = a.dim();
  const Polynomial q = a.defining_polynomial();
  const auto left = log_forms_in_degree(a, p, m);
  const auto right = log_forms_in_degree(a, ell - p, static_cast<int>(ell - p));
  std::unordered_map<Monomial, std::size_t> slots;
  IncrementalEchelon rows;
  for (const auto& phi : left) {
    SparseVector v;
    for (std::size_t b = 0; b < right.size(); ++b) {
      auto prod = wedge(phi, right[b]).divide(q);
      if (!prod) return false;
      const Polynomial top = prod->coefficient((FormMask{1} << ell) - 1);
      for (const auto& t : top.terms()) {
        auto [it, inserted] = slots.emplace(t.monomial, slots.size());
        v.emplace_back(it->second * right.size() + b, t.coeff);
      }
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (!rows.insert(v)) return false;
  }
  return true;
}

}  // namespace arrwb
