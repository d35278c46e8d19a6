// Copyright 2026 The simroot Authors
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

#include "simroot/notation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "simroot/error.hpp"

namespace simroot {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  bool skip_ws() {
    const std::size_t start = pos_;
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return pos_ != start;
  }

  Digit integer() {
    const std::size_t start = pos_;
    if (peek() < '1' || peek() > '9') {
      throw ParseError(done() ? std::string("expected a digit, found end of input")
                              : "expected a digit, found '" + std::string(1, peek()) + "'",
                       pos_);
    }
    std::uint64_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > std::numeric_limits<Digit>::max()) {
        throw ParseError("digit out of range", start);
      }
      advance();
    }
    return static_cast<Digit>(value);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Digit> parse_digits(Lexer& lex, char close) {
  std::vector<Digit> digits;
  std::unordered_set<Digit> seen;
  lex.skip_ws();
  if (lex.peek() == close) throw EmptyComponent("empty component", lex.pos());
  for (;;) {
    const std::size_t at = lex.pos();
    const Digit d = lex.integer();
    if (!seen.insert(d).second) {
      throw DuplicateDigit("digit " + std::to_string(d) + " repeated", at);
    }
    digits.push_back(d);
    bool separated = lex.skip_ws();
    if (lex.peek() == close) {
      lex.advance();
      return digits;
    }
    if (lex.peek() == ',') {
      lex.advance();
      lex.skip_ws();
      separated = true;
    }
    if (!separated) {
      if (lex.done()) {
        throw ParseError(std::string("expected '") + close + "'", lex.pos());
      }
      throw ParseError(std::string("unexpected '") + lex.peek() + "'",
                       lex.pos());
    }
  }
}

}  // namespace

Decomposition parse_components(std::string_view text) {
  Lexer lex(text);
  Decomposition d;
  lex.skip_ws();
  while (!lex.done()) {
    const char open = lex.peek();
    if (open != '[' && open != '(') {
      throw ParseError(std::string("unexpected '") + open + "'", lex.pos());
    }
    lex.advance();
    auto digits = parse_digits(lex, open == '[' ? ']' : ')');
    if (open == '[') {
      d.paths.emplace_back(std::move(digits));
    } else {
      d.cycles.emplace_back(std::move(digits));
    }
    lex.skip_ws();
  }
  d.canonicalize();
  return d;
}

PartialInjection parse(std::string_view text, std::optional<Digit> ground_max) {
  const Decomposition d = parse_components(text);
  std::vector<Digit> mentioned = d.digits();
  if (!ground_max) return recompose(d, GroundSet(std::move(mentioned)));
  if (!mentioned.empty() && mentioned.back() > *ground_max) {
    throw GroundError("digit " + std::to_string(mentioned.back()) +
                      " exceeds ground size " + std::to_string(*ground_max));
  }
  return recompose(d, GroundSet::range(*ground_max));
}

std::ostream& operator<<(std::ostream& os, const PathComponent& p) {
  os << '[';
  for (std::size_t i = 0; i < p.digits().size(); ++i) {
    if (i) os << ' ';
    os << p.digits()[i];
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const CycleComponent& c) {
  os << '(';
  for (std::size_t i = 0; i < c.digits().size(); ++i) {
    if (i) os << ' ';
    os << c.digits()[i];
  }
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Decomposition& d) {
  for (const auto& c : d.cycles) os << c;
  for (const auto& p : d.paths) os << p;
  return os;
}

std::ostream& operator<<(std::ostream& os, const PartialInjection& f) {
  return os << decompose(f);
}

std::string format(const Decomposition& d) {
  Decomposition canonical = d;
  canonical.canonicalize();
  std::ostringstream os;
  os << canonical;
  return os.str();
}

std::string format(const PartialInjection& f) {
  std::ostringstream os;
  os << decompose(f);
  return os.str();
}

}  // namespace simroot
