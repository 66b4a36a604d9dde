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

#include "cli/report.hpp"

#include <cmath>
#include <cstdio>

namespace mvq::cli {

Report::Report(std::string scenario) : scenario_(std::move(scenario)) {}

void Report::add_matrix(const std::string& name, const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(Json::array({number(m(r, c).real()), number(m(r, c).imag())}));
    }
    rows.push_back(std::move(row));
  }
  matrices_[name] = std::move(rows);
}

const Check& Report::add_check(const std::string& name, double value, double tol,
                               std::optional<double> override_tol) {
  const double t = override_tol.value_or(tol);
  // NaN fails.
  checks_.push_back({name, value, t, value <= t});
  return checks_.back();
}

void Report::add_fidelity(const std::string& name, double value) {
  fidelities_[name] = number(value);
}

bool Report::all_pass() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

Json Report::to_json() const {
  Json out = Json::object();
  out["scenario"] = scenario_;
  out["inputs"] = inputs_;
  out["matrices"] = matrices_;
  Json checks = Json::array();
  for (const auto& c : checks_) {
    checks.push_back(
        Json{{"name", c.name}, {"value", number(c.value)}, {"tol", number(c.tol)}, {"pass", c.pass}});
  }
  out["checks"] = std::move(checks);
  out["fidelities"] = fidelities_;
  for (const auto& [key, value] : extra_.items()) out[key] = value;
  out["all_pass"] = all_pass();
  out["duration_ms"] = duration_ms_;
  return out;
}

std::string Report::to_csv() const {
  std::string out = "name,value,tol,pass\n";
  for (const auto& c : checks_) {
    out += c.name + "," + format_g15(c.value) + "," + format_g15(c.tol) + "," +
           (c.pass ? "true" : "false") + "\n";
  }
  return out;
}

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string format_g15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string trace_csv(const EvolutionTrace& trace) {
  std::string out = "t";
  for (const auto& label : trace.labels) out += "," + label;
  out += "\n";
  for (std::size_t s = 0; s < trace.times.size(); ++s) {
    out += format_g15(trace.times[s]);
    for (double p : trace.populations[s]) out += "," + format_g15(p);
    out += "\n";
  }
  return out;
}

}  // namespace mvq::cli
