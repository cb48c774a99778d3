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

#include "arrwb/arrangement_json.hpp"

#include <fstream>
#include <sstream>

#include "arrwb/error.hpp"
#include "json.hpp"

namespace arrwb {
namespace {

using nlohmann::json;

Rational rational_from(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw ParseError("expected a rational string or an integer, got " + v.dump());
}

bool default_names(const std::vector<std::string>& names, const std::string& prefix, std::size_t offset) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] != prefix + std::to_string(i + offset)) return false;
  }
  return true;
}

}  // namespace

Arrangement arrangement_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("variables") || !doc.contains("forms")) {
    throw ParseError("arrangement document needs \"variables\" and \"forms\"");
  }
  if (!doc["variables"].is_number_integer() || doc["variables"].get<long long>() < 1) {
    throw ParseError("\"variables\" must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(doc["variables"].get<long long>());
  std::vector<std::vector<Rational>> normals;
  std::vector<Rational> constants;
  for (const auto& row : doc["forms"]) {
    if (!row.is_array() || row.size() != dim + 1) {
      throw ParseError("each form needs " + std::to_string(dim + 1) + " entries");
    }
    std::vector<Rational> normal;
    for (std::size_t j = 0; j < dim; ++j) normal.push_back(rational_from(row[j]));
    normals.push_back(std::move(normal));
    constants.push_back(rational_from(row[dim]));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
  std::vector<std::string> names;
  if (doc.contains("variable_names")) names = doc["variable_names"].get<std::vector<std::string>>();
  if (names.empty()) {
    for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return Arrangement::build(std::move(normals), std::move(constants), std::move(labels), std::move(names));
}

std::string arrangement_to_json(const Arrangement& a) {
  json doc = json::object();
  doc["variables"] = a.dim();
  json forms = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (const auto& c : a.normal(i)) row.push_back(to_string(c));
    row.push_back(to_string(a.constant(i)));
    forms.push_back(std::move(row));
  }
  doc["forms"] = std::move(forms);
  doc["labels"] = a.labels();
  if (!default_names(a.variables(), "x", 1)) doc["variable_names"] = a.variables();
  return doc.dump(2) + "\n";
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return arrangement_from_json(ss.str());
}

}  // namespace arrwb
