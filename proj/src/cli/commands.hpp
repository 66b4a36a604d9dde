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

// Scenario runners behind the `mvq` subcommands.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/report.hpp"

namespace mvq::cli {

inline constexpr std::uint64_t kDefaultSeed = 20260116;

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitProtocol = 3,
  kExitResource = 4,
};

struct GlobalOptions {
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  bool csv = false;
  bool timing = true;
};

struct VerifyOptions {
  /// Only checks whose name contains this text run.
  std::string filter;
  int spectrum_samples = 50;
  int composite_samples = 20;
};

struct GateOptions {
  std::string eta = "0";
  std::string phi = "0";
  double omega = 1.0;
  /// Factors as written in the product, "eta,phi;eta,phi"; the rightmost
  /// factor acts first.
  std::string compose;
};

struct SynthesizeOptions {
  /// identity, hadamard or random; ignored when `target` is given.
  std::string preset;
  /// Row-major re,im pairs of the four entries.
  std::vector<std::string> target;
};

struct RabiOptions {
  double omega = 1.0;
  double dj = 0.02;
  int pair = 23;
  std::string phi = "0";
  int steps = 256;
  double max_duration = 2000.0;
  double sample_interval = 0.0;
  double min_transfer = 0.99;
  std::string trace;
  int trace_pair = 0;
};

struct EntangleOptions {
  double j12 = 1.0;
  double j1p2p = 1.0;
  double j11p = 0.02;
  std::string sweep;
  double strong = 20.0;
  double weak = 20.0;
  double min_fidelity = 0.99;
  double search_beats = 10.0;
};

Report run_verify(const GlobalOptions& global, const VerifyOptions& options);
Report run_gate(const GlobalOptions& global, const GateOptions& options);
Report run_synthesize(const GlobalOptions& global, const SynthesizeOptions& options);
/// Writes the requested trace file as a side effect.
Report run_rabi(const GlobalOptions& global, const RabiOptions& options, std::ostream& err);
Report run_entangle(const GlobalOptions& global, const EntangleOptions& options);

/// Parses `args` (without the program name), runs the subcommand and writes
/// the report. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvq::cli
