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

#include <cctype>
#include <sstream>

#include "arrwb/error.hpp"
#include "arrwb/poly_io.hpp"

namespace arrwb {
namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse_all() {
    Polynomial p = parse_poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial parse_poly() {
    Polynomial acc(ring_);
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Polynomial t = parse_term();
    acc = negative ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += parse_term();
      } else if (accept('-')) {
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial t = parse_factor();
    while (accept('*')) t *= parse_factor();
    return t;
  }

  Polynomial parse_factor() {
    Polynomial b = parse_base();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = pow(b, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return b;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_poly();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num(digits());
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = std::string(digits());
        if (den.empty()) fail("expected denominator");
      }
      return Polynomial::constant(ring_, parse_rational(num + "/" + den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse_all(); }

GeneratorFile parse_generator_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  GeneratorFile out;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (!out.ring) {
      if (line.rfind("ring", 0) != 0) throw ParseError("generator file must start with a 'ring' line");
      std::vector<std::string> names;
      std::istringstream vars(line.substr(4));
      std::string name;
      while (std::getline(vars, name, ',')) {
        name = trim(name);
        if (!name.empty()) names.push_back(name);
      }
      if (names.empty()) throw ParseError("ring line lists no variables");
      out.ring = Ring::make(std::move(names));
      continue;
    }
    out.generators.push_back(parse_polynomial(out.ring, line));
  }
  if (!out.ring) throw ParseError("generator file has no 'ring' line");
  return out;
}

std::string format_generator_file(const RingPtr& ring, std::span<const Polynomial> generators) {
  std::string out = "ring ";
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (i > 0) out += ", ";
    out += ring->name(i);
  }
  out += '\n';
  for (const auto& g : generators) out += g.to_string() + '\n';
  return out;
}

}  // namespace arrwb
