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

// Text inputs of the command line: angle expressions, gate-step lists and
// sweep specifications.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mvq/braiding.hpp"

namespace mvq::cli {

/// Arithmetic over numbers and `pi`: + - * / and parentheses, e.g.
/// "-pi/2", "3*pi/4", "0.25". Throws ContractError on malformed or
/// non-finite input.
double parse_angle(std::string_view text);

/// "eta,phi;eta,phi;..." with angle expressions.
std::vector<GateStep> parse_steps(std::string_view text);

struct Sweep {
  std::string key;
  std::vector<double> values;
};

/// "KEY=v1,v2,...".
Sweep parse_sweep(std::string_view text);

}  // namespace mvq::cli
