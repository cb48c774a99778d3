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

#include "arrwb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "arrwb/arrangement_json.hpp"
#include "arrwb/critical_ideal.hpp"
#include "arrwb/error.hpp"
#include "json.hpp"

namespace arrwb {
namespace {

using json = nlohmann::json;

constexpr long kSampleBound = 1000;

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

json weights_json(const WeightVector& w) {
  json out = json::array();
  for (const auto& v : w.values()) out.push_back(to_string(v));
  return out;
}

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string");
}

std::vector<Rational> vector_from_json(const json& v) {
  if (!v.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(rational_from_json(x));
  return out;
}

std::string sample_key(const std::string& prefix, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", i);
  return prefix + "-" + buf;
}

WeightVector checked_weights(const Arrangement& a, std::vector<Rational> values) {
  if (values.size() != a.size()) {
    throw ParseError("weight vector has " + std::to_string(values.size()) + " entries, expected " +
                     std::to_string(a.size()));
  }
  return WeightVector(std::move(values));
}

std::string make_bundle(const VerificationReport& r, const Arrangement& checked) {
  json b;
  b["arrangement_id"] = r.arrangement_id;
  b["sample_key"] = r.sample_key;
  b["arrangement"] = json::parse(arrangement_to_json(checked));
  b["input_lambda"] = weights_json(r.input_lambda);
  b["lambda"] = weights_json(r.lambda);
  b["coned"] = r.coned;
  if (r.seed) b["seed"] = *r.seed;
  b["budget"] = Budget::from_env().max_steps;
  return b.dump(2);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kSatisfied:
      return "satisfied";
    case Verdict::kVacuous:
      return "vacuous";
    case Verdict::kInapplicable:
      return "inapplicable";
    case Verdict::kViolated:
      return "violated";
    case Verdict::kIncomplete:
      return "incomplete";
  }
  return "unknown";
}

struct TheoremHarness::State {
  explicit State(const Arrangement& a) : algebra(a) {}
  OsAlgebra algebra;
  mutable std::once_flag once;
  mutable FreenessCertificate certificate;
};

TheoremHarness::TheoremHarness(Arrangement a, std::string id, HarnessOptions options)
    : id_(std::move(id)), central_(a), options_(options) {
  if (!a.is_central()) {
    affine_ = a;
    central_ = cone(a, WeightVector(std::vector<Rational>(a.size(), 0))).first;
  }
  state_ = std::make_unique<State>(central_);
}

TheoremHarness::~TheoremHarness() = default;
TheoremHarness::TheoremHarness(TheoremHarness&&) noexcept = default;
TheoremHarness& TheoremHarness::operator=(TheoremHarness&&) noexcept = default;

const FreenessCertificate& TheoremHarness::freeness() const {
  std::call_once(state_->once,
                 [this] { state_->certificate = arrwb::freeness(central_, options_.derivation_bound); });
  return state_->certificate;
}

WeightVector TheoremHarness::to_checked(const WeightVector& lambda) const {
  if (!affine_) {
    if (lambda.size() != central_.size()) throw InvalidArrangement("weight vector has wrong length");
    return lambda;
  }
  return cone(*affine_, lambda).second;
}

VerificationReport TheoremHarness::verify(const WeightVector& lambda, const std::string& sample_key,
                                          std::optional<std::uint64_t> seed) const {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.arrangement_id = id_;
  r.sample_key = sample_key;
  r.seed = seed;
  r.input_lambda = lambda;
  r.coned = coned();
  // Malformed input is the caller's error, not an incomplete run.
  r.lambda = to_checked(lambda);
  try {
    const AomotoComplex complex(state_->algebra, r.lambda);
    r.betti = complex.betti();
    const std::size_t top = complex.top_degree();
    r.top_dimension = r.betti[top];
    for (std::size_t p = 0; p < top; ++p) {
      if (r.betti[p] != 0) {
        r.least_p = p;
        break;
      }
    }

    const FreenessCertificate& cert = freeness();
    r.free = cert.free;
    r.rank_at_most_3 = central_.rank() <= 3;
    r.p_at_most_2 = r.least_p && *r.least_p <= 2;
    r.applicable = r.free || (r.rank_at_most_3 && (!r.least_p || r.p_at_most_2));

    const CriticalOneForm omega = CriticalOneForm::specialized(central_, r.lambda);
    const PolyIdeal ideal = logarithmic_ideal(omega, cert.generators.generators);
    r.ideal_generator_count = ideal.generators().size();
    r.ideal_codim = codimension(ideal, options_.budget);
    if (options_.saturate) {
      const PolyIdeal sat = saturate(ideal, omega.forms(), options_.budget);
      r.saturated_codim = codimension(sat, options_.budget);
    }

    if (!r.least_p) {
      r.verdict = Verdict::kVacuous;
    } else if (!r.applicable) {
      r.verdict = Verdict::kInapplicable;
    } else if (!r.ideal_codim->empty && r.ideal_codim->codim <= *r.least_p) {
      r.verdict = Verdict::kSatisfied;
    } else {
      r.verdict = Verdict::kViolated;
    }

    if (r.saturated_codim && !r.saturated_codim->empty) {
      const std::size_t c = r.saturated_codim->codim;
      if (c > 0 && c < central_.dim() && c < r.betti.size() && r.betti[c] == 0) {
        r.annotations.push_back("converse fails: codim (I : Q^inf) = " + std::to_string(c) + " but H^" +
                                std::to_string(c) + " = 0");
      }
    }
    if (r.ideal_codim->empty) r.annotations.push_back("V(I) is empty");
    if (!cert.generators.stabilized) r.annotations.push_back("derivation generators not stabilized at bound");
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::kIncomplete;
    r.budget_hit = true;
    r.error = e.what();
  } catch (const Error& e) {
    r.verdict = Verdict::kIncomplete;
    r.error = e.what();
  }
  if (r.verdict == Verdict::kViolated) r.bundle = make_bundle(r, central_);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

VerificationReport verify_theorem(const Arrangement& a, const WeightVector& lambda, const std::string& id,
                                  HarnessOptions options) {
  return TheoremHarness(a, id, options).verify(lambda);
}

struct WeightSampler::Engine {
  explicit Engine(std::uint64_t seed) : rng(seed) {}
  std::mt19937_64 rng;
};

WeightSampler::WeightSampler(std::uint64_t seed) : seed_(seed), engine_(std::make_shared<Engine>(seed)) {}

std::uint64_t WeightSampler::seed_from_env() {
  const char* text = std::getenv("WORKBENCH_SEED");
  if (!text || !*text) return 1;
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ParseError(std::string("WORKBENCH_SEED is not an unsigned integer: ") + text);
  }
}

Rational WeightSampler::rational() {
  std::uniform_int_distribution<long> num(-kSampleBound, kSampleBound);
  std::uniform_int_distribution<long> den(1, kSampleBound);
  const long n = num(engine_->rng);
  const long d = den(engine_->rng);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool is_generic(const Arrangement& a, const WeightVector& lambda, bool allow_zero_total) {
  for (const auto& flat : a.flats(2)) {
    if (allow_zero_total && flat.hyperplanes.size() == a.size()) continue;
    Rational s = 0;
    for (auto i : flat.hyperplanes) s += lambda[i];
    if (s == 0) return false;
  }
  return allow_zero_total || lambda.sum() != 0;
}

WeightVector WeightSampler::generic(const Arrangement& a) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < a.size(); ++i) v.push_back(rational());
    WeightVector w(std::move(v));
    if (is_generic(a, w, false)) return w;
  }
  throw Error("could not sample generic weights");
}

WeightVector WeightSampler::generic_sum_zero(const Arrangement& a) {
  if (a.size() < 2) throw InvalidArrangement("zero-sum weights need at least two hyperplanes");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> v;
    Rational s = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      v.push_back(rational());
      s += v.back();
    }
    v.push_back(-s);
    WeightVector w(std::move(v));
    if (is_generic(a, w, true)) return w;
  }
  throw Error("could not sample generic zero-sum weights");
}

std::vector<WeightSample> family_samples(const std::string& json_text, const Arrangement& a,
                                         const CatalogEntry* entry) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("weight family: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("weight family must be a JSON object");
  std::vector<WeightSample> out;
  try {
    if (doc.contains("points")) {
      std::size_t i = 0;
      for (const auto& p : doc.at("points")) out.push_back({sample_key("point", i++), checked_weights(a, vector_from_json(p)), {}});
    }
    if (doc.contains("parameters")) {
      if (!entry || !entry->parametrization) throw ParseError("\"parameters\" needs a catalog entry with a parametrization");
      std::size_t i = 0;
      for (const auto& p : doc.at("parameters")) {
        const auto t = vector_from_json(p);
        if (t.size() != entry->parameter_count) {
          throw ParseError("parameter vector needs " + std::to_string(entry->parameter_count) + " entries");
        }
        out.push_back({sample_key("param", i++), checked_weights(a, entry->parametrization(t).values()), {}});
      }
    }
    if (doc.contains("lines")) {
      std::size_t li = 0;
      for (const auto& line : doc.at("lines")) {
        const auto base = checked_weights(a, vector_from_json(line.at("base")));
        const auto dir = checked_weights(a, vector_from_json(line.at("direction")));
        std::size_t i = 0;
        for (const auto& tv : line.at("steps")) {
          const Rational t = rational_from_json(tv);
          std::vector<Rational> v;
          for (std::size_t k = 0; k < a.size(); ++k) v.push_back(base[k] + t * dir[k]);
          out.push_back({sample_key("line" + std::to_string(li), i++), WeightVector(std::move(v)), {}});
        }
        ++li;
      }
    }
    if (doc.contains("grid")) {
      const auto& g = doc.at("grid");
      const auto base = checked_weights(a, vector_from_json(g.at("base")));
      std::vector<WeightVector> dirs;
      for (const auto& d : g.at("directions")) dirs.push_back(checked_weights(a, vector_from_json(d)));
      std::vector<std::vector<Rational>> values;
      for (const auto& v : g.at("values")) values.push_back(vector_from_json(v));
      if (values.size() != dirs.size()) throw ParseError("grid needs one value list per direction");
      std::vector<std::size_t> idx(dirs.size(), 0);
      std::size_t n = 0;
      const bool any_empty = std::any_of(values.begin(), values.end(), [](const auto& v) { return v.empty(); });
      while (!any_empty) {
        std::vector<Rational> w = base.values();
        for (std::size_t d = 0; d < dirs.size(); ++d) {
          for (std::size_t k = 0; k < a.size(); ++k) w[k] += values[d][idx[d]] * dirs[d][k];
        }
        out.push_back({sample_key("grid", n++), WeightVector(std::move(w)), {}});
        std::size_t d = 0;
        while (d < dirs.size() && ++idx[d] == values[d].size()) idx[d++] = 0;
        if (d == dirs.size()) break;
      }
    }
    const std::uint64_t seed = doc.contains("seed") ? doc.at("seed").get<std::uint64_t>() : WeightSampler::seed_from_env();
    if (doc.contains("generic")) {
      const auto k = doc.at("generic").get<std::size_t>();
      for (std::size_t i = 0; i < k; ++i) {
        WeightSampler s(seed + i);
        out.push_back({sample_key("generic", i), s.generic(a), seed + i});
      }
    }
    if (doc.contains("generic_sum_zero")) {
      const auto k = doc.at("generic_sum_zero").get<std::size_t>();
      for (std::size_t i = 0; i < k; ++i) {
        WeightSampler s(seed + i);
        out.push_back({sample_key("sumzero", i), s.generic_sum_zero(a), seed + i});
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("weight family: ") + e.what());
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.key < y.key; });
  return out;
}

std::vector<VerificationReport> sweep(const TheoremHarness& harness, const std::vector<WeightSample>& samples) {
  harness.freeness();
  std::vector<VerificationReport> out(samples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < samples.size(); i = next++) {
      out[i] = harness.verify(samples[i].lambda, samples[i].key, samples[i].seed);
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(samples.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.sample_key < y.sample_key; });
  return out;
}

FibreDimension fibre_dimension_check(const Arrangement& a, const std::vector<Rational>& x) {
  if (x.size() != a.dim()) throw InvalidArrangement("point has wrong dimension");
  std::vector<Rational> values;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational v = a.constant(i);
    for (std::size_t j = 0; j < a.dim(); ++j) v += a.normal(i)[j] * x[j];
    if (v == 0) throw InvalidArrangement("point lies on hyperplane " + a.label(i));
    values.push_back(v);
  }
  std::vector<std::vector<Rational>> rows(a.dim(), std::vector<Rational>(a.size()));
  for (std::size_t j = 0; j < a.dim(); ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) rows[j][i] = a.normal(i)[j] / values[i];
  }
  return FibreDimension{a.size() - rank_of_rows(rows), a.size() - a.rank()};
}

PolyIdeal dehomogenize(const PolyIdeal& ideal, std::size_t var, const RingPtr& target) {
  const std::size_t n = ideal.ring()->nvars();
  if (var >= n || target->nvars() + 1 != n) throw RingMismatch();
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i < var ? i : (i == var ? SIZE_MAX : i - 1);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.specialize(var, 1).map_into(target, map));
  return PolyIdeal(target, std::move(gens));
}

std::optional<std::size_t> critical_point_count(const Arrangement& affine, const WeightVector& lambda,
                                                const Budget& budget) {
  if (affine.is_central()) throw InvalidArrangement("critical point count needs an affine arrangement");
  const auto [coned, coned_lambda] = cone(affine, lambda);
  const PolyIdeal ideal = logarithmic_ideal(coned, coned_lambda);
  const PolyIdeal chart = dehomogenize(ideal, 0, affine.ring());
  const PolyIdeal sat = saturate(chart, affine.forms(), budget);
  const Codimension c = codimension(sat, budget);
  if (c.empty) return 0;
  if (c.codim != affine.dim()) return std::nullopt;
  return zero_dim_count(sat, budget);
}

CriticalCount critical_count_check(const Arrangement& affine, WeightSampler& sampler, const Budget& budget) {
  CriticalCount out;
  out.seed = sampler.seed();
  out.expected = poincare_and_euler(affine).euler_abs;
  for (out.attempts = 1; out.attempts <= 5; ++out.attempts) {
    WeightVector w = sampler.generic(affine);
    while (!is_generic(cone(affine, w).first, cone(affine, w).second, true)) w = sampler.generic(affine);
    out.lambda = w;
    out.count = critical_point_count(affine, w, budget);
    if (out.count) break;
  }
  if (out.attempts > 5) out.attempts = 5;
  return out;
}

std::vector<SelfTestItem> self_test(const std::vector<CatalogEntry>& entries) {
  std::vector<SelfTestItem> out;
  for (const auto& e : entries) {
    const Arrangement& a = e.arrangement;
    if (!e.facts.nbc_sizes.empty()) {
      const auto sizes = NbcBasis(a).sizes();
      out.push_back({e.name, "nbc sizes", join(e.facts.nbc_sizes), join(sizes), sizes == e.facts.nbc_sizes});
    }
    if (!a.is_central()) continue;
    if (!e.facts.free && !e.facts.minimal_generators) continue;
    const FreenessCertificate cert = freeness(a);
    if (e.facts.free) {
      out.push_back({e.name, "free", *e.facts.free ? "yes" : "no", cert.free ? "yes" : "no",
                     cert.free == *e.facts.free});
    }
    if (!e.facts.exponents.empty()) {
      out.push_back({e.name, "exponents", join(e.facts.exponents), join(cert.exponents),
                     cert.exponents == e.facts.exponents});
    }
    if (e.facts.minimal_generators) {
      const std::size_t n = cert.generators.generators.size();
      out.push_back({e.name, "minimal generators", std::to_string(*e.facts.minimal_generators), std::to_string(n),
                     n == *e.facts.minimal_generators});
    }
  }
  return out;
}

}  // namespace arrwb
