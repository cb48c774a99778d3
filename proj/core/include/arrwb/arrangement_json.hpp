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

#ifndef ARRWB_ARRANGEMENT_JSON_HPP_
#define ARRWB_ARRANGEMENT_JSON_HPP_

#include <string>
#include <string_view>

#include "arrwb/arrangement.hpp"

namespace arrwb {

// Arrangement documents:
//
//   {
//     "variables": 2,
//     "forms": [["1", "0", "0"], ["1", "-1/2", "3"]],
//     "labels": ["1", "2"],
//     "variable_names": ["x", "y"]
//   }
//
// Each form row lists the normal coefficients followed by the constant term.
// Rationals are strings "p" or "p/q"; JSON integers are also accepted on
// input. "labels" and "variable_names" are optional. Writing then reading a
// document reproduces the arrangement exactly, and the writer is canonical.
Arrangement arrangement_from_json(std::string_view text);
std::string arrangement_to_json(const Arrangement& a);

Arrangement load_arrangement(const std::string& path);

}  // namespace arrwb

#endif  // ARRWB_ARRANGEMENT_JSON_HPP_
