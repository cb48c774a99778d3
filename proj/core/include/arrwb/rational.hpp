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

#ifndef ARRWB_RATIONAL_HPP_
#define ARRWB_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace arrwb {

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as every mutation goes through its operators.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

// Comma separated list of rationals, e.g. "1, 1, -2" or "1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

Integer lcm_of_denominators(const std::vector<Rational>& values);

}  // namespace arrwb

#endif  // ARRWB_RATIONAL_HPP_
