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

#include "arrwb/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace arrwb {
namespace {

using json = nlohmann::json;

json weights_json(const WeightVector& w) {
  json out = json::array();
  for (const auto& v : w.values()) out.push_back(to_string(v));
  return out;
}

json codim_json(const std::optional<Codimension>& c) {
  if (!c) return nullptr;
  if (c->empty) return "empty";
  return c->codim;
}

std::string codim_text(const std::optional<Codimension>& c) {
  if (!c) return "?";
  if (c->empty) return "empty";
  return std::to_string(c->codim);
}

std::string p_text(const VerificationReport& r) {
  if (r.verdict == Verdict::kIncomplete && r.betti.empty()) return "?";
  return r.least_p ? std::to_string(*r.least_p) : "none";
}

json to_json(const VerificationReport& r) {
  json o;
  o["arrangement_id"] = r.arrangement_id;
  o["sample_key"] = r.sample_key;
  o["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  o["input_lambda"] = weights_json(r.input_lambda);
  o["lambda"] = weights_json(r.lambda);
  o["coned"] = r.coned;
  o["betti"] = r.betti;
  o["least_p"] = r.least_p ? json(*r.least_p) : json(nullptr);
  o["top_dimension"] = r.top_dimension;
  o["ideal_generators"] = r.ideal_generator_count;
  o["codim"] = codim_json(r.ideal_codim);
  o["saturated_codim"] = codim_json(r.saturated_codim);
  o["flags"] = {{"free", r.free},
                {"rank_at_most_3", r.rank_at_most_3},
                {"p_at_most_2", r.p_at_most_2},
                {"applicable", r.applicable}};
  o["verdict"] = to_string(r.verdict);
  o["annotations"] = r.annotations;
  o["seconds"] = r.seconds;
  o["budget_hit"] = r.budget_hit;
  if (!r.error.empty()) o["error"] = r.error;
  if (r.bundle) o["bundle"] = json::parse(*r.bundle);
  return o;
}

struct Summary {
  std::map<std::string, std::size_t> verdicts;
  std::map<std::pair<std::string, std::string>, std::size_t> pairs;
};

Summary summarize(std::span<const VerificationReport> reports) {
  Summary s;
  for (const auto& r : reports) {
    ++s.verdicts[to_string(r.verdict)];
    ++s.pairs[{p_text(r), codim_text(r.ideal_codim)}];
  }
  return s;
}

}  // namespace

std::string report_json(const VerificationReport& r) {
  json o = to_json(r);
  o["schema_version"] = kReportSchemaVersion;
  return o.dump(2) + "\n";
}

std::string reports_json(std::span<const VerificationReport> reports) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["reports"] = json::array();
  for (const auto& r : reports) doc["reports"].push_back(to_json(r));
  const Summary s = summarize(reports);
  json pairs = json::array();
  for (const auto& [key, count] : s.pairs) pairs.push_back({{"p", key.first}, {"codim", key.second}, {"count", count}});
  doc["summary"] = {{"verdicts", s.verdicts}, {"p_codim", pairs}};
  return doc.dump(2) + "\n";
}

std::string render_table(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %-22s %-14s %-5s %-6s %-6s %-5s %-13s %8s\n", "arrangement", "sample",
                "betti", "p", "codim", "sat", "free", "verdict", "seconds");
  out << line;
  for (const auto& r : reports) {
    std::string betti;
    for (std::size_t i = 0; i < r.betti.size(); ++i) betti += (i ? "," : "") + std::to_string(r.betti[i]);
    std::snprintf(line, sizeof line, "%-20s %-22s %-14s %-5s %-6s %-6s %-5s %-13s %8.3f\n", r.arrangement_id.c_str(),
                  r.sample_key.c_str(), betti.c_str(), p_text(r).c_str(), codim_text(r.ideal_codim).c_str(),
                  codim_text(r.saturated_codim).c_str(), r.free ? "yes" : "no", to_string(r.verdict).c_str(),
                  r.seconds);
    out << line;
    out << "    lambda = (" << r.lambda.to_string() << ")\n";
    for (const auto& a : r.annotations) out << "    note: " << a << "\n";
    if (!r.error.empty()) out << "    error: " << r.error << "\n";
    if (r.bundle) out << "    reproduction bundle:\n" << *r.bundle << "\n";
  }
  const Summary s = summarize(reports);
  out << "verdicts:";
  for (const auto& [v, n] : s.verdicts) out << " " << v << "=" << n;
  out << "\n(p, codim) pairs:";
  for (const auto& [key, n] : s.pairs) out << " (" << key.first << ", " << key.second << ")x" << n;
  out << "\n";
  return out.str();
}

std::string self_test_json(std::span<const SelfTestItem> items) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["items"] = json::array();
  for (const auto& i : items) {
    doc["items"].push_back(
        {{"entry", i.entry}, {"fact", i.fact}, {"expected", i.expected}, {"actual", i.actual}, {"ok", i.ok}});
  }
  return doc.dump(2) + "\n";
}

std::string render_self_test(std::span<const SelfTestItem> items) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& i : items) {
    out << (i.ok ? "ok   " : "FAIL ") << i.entry << ": " << i.fact << " expected " << i.expected << ", got "
        << i.actual << "\n";
    failed += i.ok ? 0 : 1;
  }
  out << items.size() - failed << "/" << items.size() << " known facts confirmed\n";
  return out.str();
}

int exit_code(std::span<const VerificationReport> reports) {
  bool incomplete = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kViolated) return 1;
    if (r.verdict == Verdict::kIncomplete) incomplete = true;
  }
  return incomplete ? 2 : 0;
}

}  // namespace arrwb
