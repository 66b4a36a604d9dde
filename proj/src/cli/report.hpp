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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvq/dynamics.hpp"
#include "mvq/fock.hpp"

namespace mvq::cli {

using Json = nlohmann::ordered_json;

/// One pass/fail entry. Every check is phrased as "value <= tol".
struct Check {
  std::string name;
  double value;
  double tol;
  bool pass;
};

/// Machine-readable result of one scenario. Key order is fixed so that
/// reruns with the same inputs serialize identically.
class Report {
 public:
  explicit Report(std::string scenario);

  Json& inputs() { return inputs_; }
  /// Scenario-specific sections (schedule, table, sweep, notes, ...).
  Json& section(const std::string& key) { return extra_[key]; }

  void add_matrix(const std::string& name, const Eigen::MatrixXcd& m);
  /// Residual check; `override_tol` replaces `tol` when set.
  const Check& add_check(const std::string& name, double value, double tol,
                         std::optional<double> override_tol = std::nullopt);
  void add_fidelity(const std::string& name, double value);
  void set_duration_ms(double ms) { duration_ms_ = ms; }

  const std::vector<Check>& checks() const { return checks_; }
  bool all_pass() const;

  Json to_json() const;
  /// name,value,tol,pass rows.
  std::string to_csv() const;

 private:
  std::string scenario_;
  Json inputs_ = Json::object();
  Json matrices_ = Json::object();
  std::vector<Check> checks_;
  Json fidelities_ = Json::object();
  Json extra_ = Json::object();
  double duration_ms_ = 0.0;
};

/// Finite doubles as numbers; infinities and NaN as strings.
Json number(double v);

/// %.15g.
std::string format_g15(double v);

/// Header "t,<labels>" and one row per recorded sample.
std::string trace_csv(const EvolutionTrace& trace);

}  // namespace mvq::cli
