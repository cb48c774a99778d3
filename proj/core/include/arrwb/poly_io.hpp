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

#ifndef ARRWB_POLY_IO_HPP_
#define ARRWB_POLY_IO_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrwb/polynomial.hpp"

namespace arrwb {

// Polynomial text syntax:
//
//   poly   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := base [ '^' digits ]
//   base   := digits [ '/' digits ] | name | '(' poly ')'
//   name   := letter { letter | digit | '_' }
//
// Whitespace is ignored. Names must be variables of the ring.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

// Generator files: '#' starts a comment line, the first remaining line is
// "ring v1, v2, ...", and every following non-empty line holds one
// polynomial. The ring uses grevlex on the listed variables.
struct GeneratorFile {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

GeneratorFile parse_generator_file(std::string_view text);
std::string format_generator_file(const RingPtr& ring, std::span<const Polynomial> generators);

}  // namespace arrwb

#endif  // ARRWB_POLY_IO_HPP_
