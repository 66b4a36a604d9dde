// Copyright 2026 The mvq Authors
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

#include "cli/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "mvq/errors.hpp"

namespace mvq::cli {

namespace {

// expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
// unary := ('+'|'-') unary | atom; atom := number | "pi" | '(' expr ')'
class AngleParser {
 public:
  explicit AngleParser(std::string_view text) : text_(text) {}

  double run() {
    const double v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    if (!std::isfinite(v)) fail("value is not finite");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ContractError("bad angle '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  double atom() {
    skip_space();
    if (accept('(')) {
      const double v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("expected a number or pi");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

}  // namespace

double parse_angle(std::string_view text) { return AngleParser(text).run(); }

std::vector<GateStep> parse_steps(std::string_view text) {
  std::vector<GateStep> steps;
  for (std::string_view item : split(text, ';')) {
    const auto pair = split(item, ',');
    if (pair.size() != 2) {
      throw ContractError("gate step '" + std::string(item) + "' must be 'eta,phi'");
    }
    steps.push_back({parse_angle(pair[0]), parse_angle(pair[1])});
  }
  return steps;
}

Sweep parse_sweep(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ContractError("sweep must look like KEY=v1,v2,...");
  }
  Sweep sweep{std::string(text.substr(0, eq)), {}};
  for (std::string_view item : split(text.substr(eq + 1), ',')) {
    sweep.values.push_back(parse_angle(item));
  }
  return sweep;
}

}  // namespace mvq::cli
