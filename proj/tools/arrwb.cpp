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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arrwb/arrangement_json.hpp"
#include "arrwb/catalog.hpp"
#include "arrwb/critical_ideal.hpp"
#include "arrwb/error.hpp"
#include "arrwb/groebner.hpp"
#include "arrwb/harness.hpp"
#include "arrwb/log_modules.hpp"
#include "arrwb/orlik_solomon.hpp"
#include "arrwb/poly_io.hpp"
#include "arrwb/report.hpp"

namespace {

using namespace arrwb;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

struct Source {
  std::string file;
  std::string name;

  void add_to(CLI::App* app) {
    app->add_option("-a,--arrangement", file, "arrangement JSON file");
    app->add_option("-c,--catalog", name, "catalog entry name");
  }

  const CatalogEntry* entry() const { return name.empty() ? nullptr : find_entry(name); }

  Arrangement load() const {
    if (file.empty() == name.empty()) throw Error("give exactly one of --arrangement and --catalog");
    if (!file.empty()) return load_arrangement(file);
    const CatalogEntry* e = entry();
    if (!e) throw Error("unknown catalog entry: " + name);
    return e->arrangement;
  }

  std::string id() const { return name.empty() ? file : name; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string codim_text(const Codimension& c) { return c.empty ? "empty" : std::to_string(c.codim); }

WeightVector weights_for(const Arrangement& a, const std::string& text) {
  WeightVector w = WeightVector::parse(text);
  if (w.size() != a.size()) {
    throw Error("expected " + std::to_string(a.size()) + " weights, got " + std::to_string(w.size()));
  }
  return w;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int m = std::stoi(text);
      return {m, m};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error("degree range must look like 0..3: " + text);
  }
}

void print_arrangement(const Arrangement& a) {
  for (std::size_t i = 0; i < a.size(); ++i) std::cout << "  " << a.label(i) << ": " << a.form(i).to_string() << "\n";
}

int cmd_catalog_list() {
  for (const auto& e : catalog()) {
    std::cout << e.name << "  (" << e.arrangement.size() << " hyperplanes in dimension " << e.arrangement.dim()
              << ")  " << e.description << "\n";
  }
  return kExitOk;
}

int cmd_catalog_show(const std::string& name) {
  const CatalogEntry* e = find_entry(name);
  if (!e) throw Error("unknown catalog entry: " + name);
  std::cout << e->name << ": " << e->description << "\n";
  print_arrangement(e->arrangement);
  const auto& f = e->facts;
  if (f.free) std::cout << "free: " << (*f.free ? "yes" : "no") << "\n";
  if (!f.exponents.empty()) {
    std::cout << "exponents:";
    for (int x : f.exponents) std::cout << " " << x;
    std::cout << "\n";
  }
  if (!f.nbc_sizes.empty()) std::cout << "nbc sizes: " << join(f.nbc_sizes) << "\n";
  if (f.minimal_generators) std::cout << "minimal generators of Der: " << *f.minimal_generators << "\n";
  for (const auto& u : f.unverified) std::cout << "unverified: " << u << "\n";
  for (const auto& r : e->resonant) std::cout << "resonant weights " << r.name << ": " << r.lambda.to_string() << "\n";
  if (e->parameter_count) std::cout << "parametrized family with " << e->parameter_count << " parameters\n";
  if (e->reduced_scope) std::cout << "reduced scope: freeness and generic codimension only\n";
  std::cout << "json:\n" << arrangement_to_json(e->arrangement);
  return kExitOk;
}

int cmd_info(const Source& src) {
  const Arrangement a = src.load();
  std::cout << "hyperplanes: " << a.size() << "\ndimension: " << a.dim() << "\nrank: " << a.rank()
            << "\ncentral: " << (a.is_central() ? "yes" : "no") << "\nessential: " << (a.is_essential() ? "yes" : "no")
            << "\n";
  if (a.is_central()) std::cout << "irreducible: " << (a.is_irreducible() ? "yes" : "no") << "\n";
  print_arrangement(a);
  std::cout << "Q = " << a.defining_polynomial().to_string() << "\n";
  std::cout << "circuits: " << a.circuits().size() << "\n";
  std::cout << "nbc sizes: " << join(NbcBasis(a).sizes()) << "\n";
  const PoincareData pd = poincare_and_euler(a);
  std::cout << "poincare:";
  for (const auto& c : pd.poincare) std::cout << " " << c.get_str();
  std::cout << "\n|chi(M)|: " << pd.euler_abs.get_str() << "\n";
  return kExitOk;
}

int cmd_os_betti(const Source& src, const std::string& weights) {
  const Arrangement a = src.load();
  const ResonanceResult r = resonance_least_p(a, weights_for(a, weights));
  std::cout << "betti: " << join(r.betti) << "\n";
  std::cout << "least resonant p: " << (r.least_p ? std::to_string(*r.least_p) : "none") << "\n";
  return kExitOk;
}

int cmd_derivations(const Source& src, std::optional<unsigned> bound) {
  const Arrangement a = src.load();
  const DerivationGenerators g = minimal_derivation_generators(a, bound);
  std::cout << "bound: " << g.bound << "\ndim Der_d:";
  for (std::size_t d = 0; d < g.dims.size(); ++d) std::cout << " " << g.dims[d];
  std::cout << "\nminimal generators: " << g.generators.size() << (g.stabilized ? "" : " (not stabilized)") << "\n";
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    std::cout << "  [degree " << g.degrees[i] << "] " << g.generators[i].to_string() << "\n";
  }
  return kExitOk;
}

int cmd_free_check(const Source& src, std::optional<unsigned> bound) {
  const Arrangement a = src.load();
  const FreenessCertificate c = freeness(a, bound);
  const SaitoResult s = saito_free_check(a, c.generators.generators);
  std::cout << "minimal generators: " << c.generators.generators.size() << "\n";
  std::cout << "saito: " << to_string(s.status) << "\n";
  std::cout << "free: " << (c.free ? "yes" : "no") << "\n";
  if (c.free) {
    std::cout << "exponents:";
    for (int x : c.exponents) std::cout << " " << x;
    std::cout << "\ndet = " << to_string(s.scalar) << " * Q\n";
  }
  return kExitOk;
}

int cmd_log_betti(const Source& src, const std::string& weights, const std::string& degrees) {
  const Arrangement a = src.load();
  const auto [lo, hi] = parse_range(degrees);
  const LogCohomologyTable t = log_complex_cohomology(a, weights_for(a, weights), lo, hi);
  std::cout << "squares to zero: " << (t.squares_to_zero ? "yes" : "no") << "\n";
  for (int m = t.m_min; m <= t.m_max; ++m) {
    const auto k = static_cast<std::size_t>(m - t.m_min);
    std::cout << "m=" << m << "  dims: " << join(t.dims[k]) << "  H: " << join(t.betti[k]) << "\n";
  }
  return kExitOk;
}

int cmd_critical_ideal(const Source& src, const std::string& weights, bool universal) {
  const Arrangement a = src.load();
  const DerivationGenerators g = minimal_derivation_generators(a);
  const CriticalOneForm omega =
      universal ? CriticalOneForm::universal(a) : CriticalOneForm::specialized(a, weights_for(a, weights));
  const PolyIdeal ideal = logarithmic_ideal(omega, g.generators);
  std::cout << format_generator_file(ideal.ring(), ideal.generators());
  return kExitOk;
}

int cmd_codim(const Source& src, const std::string& weights) {
  const Arrangement a = src.load();
  const CriticalSetReport r = critical_set_report(a, weights_for(a, weights));
  std::cout << "generators of I: " << r.ideal_generators.size() << "\n";
  std::cout << "codim V(I): " << codim_text(r.ideal_codim) << "\n";
  std::cout << "codim V(I : Q^inf): " << codim_text(r.saturation_codim) << "\n";
  if (r.point_count) std::cout << "points with multiplicity: " << *r.point_count << "\n";
  return kExitOk;
}

int cmd_verify(const Source& src, const std::string& weights, bool as_json) {
  const Arrangement a = src.load();
  const TheoremHarness h(a, src.id());
  const std::vector<VerificationReport> reports{h.verify(weights_for(a, weights), "cli")};
  std::cout << (as_json ? reports_json(reports) : render_table(reports));
  return exit_code(reports);
}

int cmd_sweep(const Source& src, const std::string& family, bool as_json) {
  const Arrangement a = src.load();
  const auto samples = family_samples(read_file(family), a, src.entry());
  const TheoremHarness h(a, src.id());
  const auto reports = sweep(h, samples);
  std::cout << (as_json ? reports_json(reports) : render_table(reports));
  return exit_code(reports);
}

int cmd_self_test(bool as_json) {
  const auto items = self_test(catalog());
  std::cout << (as_json ? self_test_json(items) : render_self_test(items));
  for (const auto& i : items) {
    if (!i.ok) return kExitViolation;
  }
  return kExitOk;
}

int cmd_ideal(const std::string& op, const std::string& path, const std::string& by) {
  const GeneratorFile file = parse_generator_file(read_file(path));
  const PolyIdeal ideal(file.ring, file.generators);
  if (op == "dim") {
    const Codimension c = codimension(ideal);
    std::cout << "codim: " << codim_text(c) << "\n";
    if (!c.empty) std::cout << "dim: " << file.ring->nvars() - c.codim << "\n";
    return kExitOk;
  }
  if (op == "count") {
    std::cout << zero_dim_count(ideal) << "\n";
    return kExitOk;
  }
  if (by.empty()) throw Error("ideal " + op + " needs --by");
  const Polynomial f = parse_polynomial(file.ring, by);
  const PolyIdeal out = op == "quotient" ? ideal_quotient(ideal, f) : saturate(ideal, f);
  std::cout << format_generator_file(out.ring(), out.groebner().elements());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperplane arrangement workbench: resonance, logarithmic derivations and critical sets"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "built-in arrangements");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog entries");
  auto* cat_show = cat->add_subcommand("show", "show one entry");
  std::string show_name;
  cat_show->add_option("name", show_name)->required();

  Source src;
  std::string weights;
  std::optional<unsigned> bound;
  std::string degrees = "0..2";
  std::string family;
  bool universal = false;
  bool as_json = false;

  auto* info = app.add_subcommand("info", "matroid data, NBC sizes and Poincare polynomial");
  src.add_to(info);
  auto* os = app.add_subcommand("os-betti", "Betti numbers of the Aomoto complex");
  src.add_to(os);
  os->add_option("-w,--weights", weights, "comma separated rationals")->required();
  auto* der = app.add_subcommand("derivations", "graded pieces and minimal generators of Der(A)");
  src.add_to(der);
  der->add_option("--bound", bound, "largest coefficient degree searched");
  auto* free = app.add_subcommand("free-check", "Saito criterion on the minimal generators");
  src.add_to(free);
  free->add_option("--bound", bound, "largest coefficient degree searched");
  auto* log = app.add_subcommand("log-betti", "cohomology of the logarithmic complex by degree");
  src.add_to(log);
  log->add_option("-w,--weights", weights)->required();
  log->add_option("--degrees", degrees, "degree range m0..m1");
  auto* crit = app.add_subcommand("critical-ideal", "generators of the logarithmic ideal");
  src.add_to(crit);
  crit->add_option("-w,--weights", weights);
  crit->add_flag("--universal", universal, "weights as ring variables");
  auto* codim = app.add_subcommand("codim", "codimension of the critical set");
  src.add_to(codim);
  codim->add_option("-w,--weights", weights)->required();
  auto* verify = app.add_subcommand("verify", "check the resonance bound at one weight vector");
  src.add_to(verify);
  verify->add_option("-w,--weights", weights)->required();
  verify->add_flag("--json", as_json);
  auto* sw = app.add_subcommand("sweep", "check the resonance bound over a weight family");
  src.add_to(sw);
  sw->add_option("--family", family, "weight family JSON")->required()->check(CLI::ExistingFile);
  sw->add_flag("--json", as_json);
  auto* st = app.add_subcommand("self-test", "recompute the known facts of the catalog");
  st->add_flag("--json", as_json);

  auto* ideal = app.add_subcommand("ideal", "Groebner operations on a generator file");
  std::string ideal_op;
  std::string ideal_file;
  std::string ideal_by;
  ideal->add_option("op", ideal_op)->required()->check(CLI::IsMember({"dim", "quotient", "saturate", "count"}));
  ideal->add_option("file", ideal_file)->required()->check(CLI::ExistingFile);
  ideal->add_option("--by", ideal_by, "polynomial f for (I : f) or (I : f^inf)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; malformed command lines are input errors.
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (cat->parsed()) return cat_show->parsed() ? cmd_catalog_show(show_name) : cmd_catalog_list();
    if (info->parsed()) return cmd_info(src);
    if (os->parsed()) return cmd_os_betti(src, weights);
    if (der->parsed()) return cmd_derivations(src, bound);
    if (free->parsed()) return cmd_free_check(src, bound);
    if (log->parsed()) return cmd_log_betti(src, weights, degrees);
    if (crit->parsed()) {
      if (!universal && weights.empty()) throw Error("critical-ideal needs --weights or --universal");
      return cmd_critical_ideal(src, weights, universal);
    }
    if (codim->parsed()) return cmd_codim(src, weights);
    if (verify->parsed()) return cmd_verify(src, weights, as_json);
    if (sw->parsed()) return cmd_sweep(src, family, as_json);
    if (st->parsed()) return cmd_self_test(as_json);
    if (ideal->parsed()) return cmd_ideal(ideal_op, ideal_file, ideal_by);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
