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

#ifndef ARRWB_HARNESS_HPP_
#define ARRWB_HARNESS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arrwb/arrangement.hpp"
#include "arrwb/catalog.hpp"
#include "arrwb/groebner.hpp"
#include "arrwb/log_modules.hpp"
#include "arrwb/orlik_solomon.hpp"

namespace arrwb {

enum class Verdict { kSatisfied, kVacuous, kInapplicable, kViolated, kIncomplete };

std::string to_string(Verdict v);

// Outcome of checking "H^p != 0 implies codim V(I_lambda) <= p" at one
// weight vector. Affine inputs are coned first; lambda and the Betti numbers
// then refer to the cone.
struct VerificationReport {
  std::string arrangement_id;
  std::string sample_key;
  std::optional<std::uint64_t> seed;
  WeightVector input_lambda;
  WeightVector lambda;
  bool coned = false;

  std::vector<std::size_t> betti;
  std::optional<std::size_t> least_p;
  std::size_t top_dimension = 0;

  std::optional<Codimension> ideal_codim;
  std::optional<Codimension> saturated_codim;
  std::size_t ideal_generator_count = 0;

  bool free = false;
  bool rank_at_most_3 = false;
  bool p_at_most_2 = false;
  bool applicable = false;

  Verdict verdict = Verdict::kIncomplete;
  std::vector<std::string> annotations;
  double seconds = 0;
  bool budget_hit = false;
  std::string error;
  // Arrangement JSON, weights and seed; set exactly when violated.
  std::optional<std::string> bundle;
};

struct HarnessOptions {
  Budget budget = Budget::from_env();
  std::optional<unsigned> derivation_bound;
  // Also compute (I_lambda : Q^inf) for the converse annotation.
  bool saturate = true;
};

// Caches the Orlik-Solomon algebra and the minimal generators of Der(A) so
// that many weight vectors can be checked against one arrangement.
class TheoremHarness {
 public:
  TheoremHarness(Arrangement a, std::string id, HarnessOptions options = {});
  ~TheoremHarness();
  TheoremHarness(TheoremHarness&&) noexcept;
  TheoremHarness& operator=(TheoremHarness&&) noexcept;

  const std::string& id() const { return id_; }
  // The arrangement that is checked: the input, or its cone.
  const Arrangement& arrangement() const { return central_; }
  bool coned() const { return affine_.has_value(); }
  const FreenessCertificate& freeness() const;

  // Weights are given for the input arrangement.
  VerificationReport verify(const WeightVector& lambda, const std::string& sample_key = "",
                            std::optional<std::uint64_t> seed = {}) const;
  // Weights of the input arrangement transported to the checked one.
  WeightVector to_checked(const WeightVector& lambda) const;

 private:
  struct State;
  std::string id_;
  std::optional<Arrangement> affine_;
  Arrangement central_;
  HarnessOptions options_;
  std::unique_ptr<State> state_;
};

VerificationReport verify_theorem(const Arrangement& a, const WeightVector& lambda, const std::string& id = "input",
                                  HarnessOptions options = {});

// Pseudo-random rational weights, numerators and denominators at most 1000,
// rejected while a flat of rank <= 2 (or the whole arrangement) has zero
// weight sum.
class WeightSampler {
 public:
  explicit WeightSampler(std::uint64_t seed);
  // WORKBENCH_SEED if set, otherwise 1.
  static std::uint64_t seed_from_env();

  std::uint64_t seed() const { return seed_; }
  WeightVector generic(const Arrangement& a);
  // Weights summing to zero; only the full set is allowed a zero sum.
  WeightVector generic_sum_zero(const Arrangement& a);
  Rational rational();

 private:
  std::uint64_t seed_;
  struct Engine;
  std::shared_ptr<Engine> engine_;
};

bool is_generic(const Arrangement& a, const WeightVector& lambda, bool allow_zero_total);

struct WeightSample {
  std::string key;
  WeightVector lambda;
  std::optional<std::uint64_t> seed;
};

// Weight family document:
//   {"points": [[w...], ...],
//    "parameters": [[t...], ...],            catalog parametrization
//    "lines": [{"base": [...], "direction": [...], "steps": [t...]}],
//    "grid": {"base": [...], "directions": [[...], ...], "values": [[...], ...]},
//    "generic": k, "generic_sum_zero": k, "seed": s}
// Every field is optional. Numbers may be integers or "p/q" strings.
std::vector<WeightSample> family_samples(const std::string& json_text, const Arrangement& a,
                                         const CatalogEntry* entry = nullptr);

// One report per sample, sorted by sample key.
std::vector<VerificationReport> sweep(const TheoremHarness& harness, const std::vector<WeightSample>& samples);

struct FibreDimension {
  std::size_t dimension = 0;
  std::size_t expected = 0;
  bool holds() const { return dimension == expected; }
};

// Dimension of {lambda : omega_lambda(x) = 0} at a point x of the complement.
// Throws InvalidArrangement if x lies on a hyperplane.
FibreDimension fibre_dimension_check(const Arrangement& a, const std::vector<Rational>& x);

// Substitutes x_var = 1 into every generator and moves the result to the
// ring of the remaining variables.
PolyIdeal dehomogenize(const PolyIdeal& ideal, std::size_t var, const RingPtr& target);

struct CriticalCount {
  WeightVector lambda;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
  Integer expected = 0;
  std::optional<std::size_t> count;
  bool holds() const { return count && Integer(static_cast<unsigned long>(*count)) == expected; }
};

// Critical points of the master function of an affine arrangement at a
// generic weight, counted with multiplicity in the affine chart of the cone,
// against |chi(M)|. Resamples up to five times when the saturated ideal is
// not zero-dimensional.
CriticalCount critical_count_check(const Arrangement& affine, WeightSampler& sampler,
                                   const Budget& budget = Budget::from_env());
// Same count at a fixed weight vector; no resampling.
std::optional<std::size_t> critical_point_count(const Arrangement& affine, const WeightVector& lambda,
                                                const Budget& budget = Budget::from_env());

struct SelfTestItem {
  std::string entry;
  std::string fact;
  std::string expected;
  std::string actual;
  bool ok = false;
};

// Recomputes the known facts of every catalog entry.
std::vector<SelfTestItem> self_test(const std::vector<CatalogEntry>& entries);

}  // namespace arrwb

#endif  // ARRWB_HARNESS_HPP_
