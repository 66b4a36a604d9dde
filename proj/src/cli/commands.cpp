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

#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "cli/parse.hpp"
#include "mvq/braiding.hpp"
#include "mvq/dynamics.hpp"
#include "mvq/errors.hpp"
#include "mvq/hamiltonian.hpp"
#include "mvq/reference.hpp"
#include "mvq/twoqubit.hpp"

namespace mvq::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string angle_name(const std::string& stem, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s(phi=%.6g)", stem.c_str(), v);
  return buf;
}

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw ContractError(what + " must be finite");
}

Matrix2 haar_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Vector4d q;
  for (int k = 0; k < 4; ++k) q(k) = normal(rng);
  q.normalize();
  Matrix2 u;
  u << Complex(q(0), q(1)), Complex(q(2), q(3)), Complex(-q(2), q(3)), Complex(q(0), -q(1));
  return u;
}

Json steps_json(const std::vector<GateStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back(Json{{"eta", number(s.eta)}, {"phi", number(s.phi)}});
  return out;
}

Json word_json(const BraidWord& word) {
  Json out = Json::array();
  for (const auto& m : word.moves) {
    out.push_back(Json{{"a", m.a},
                       {"b", m.b},
                       {"orientation", m.orientation == Orientation::kCcw ? "ccw" : "cw"}});
  }
  return out;
}

// ---------------------------------------------------------------- verify

class Suite {
 public:
  Suite(Report& report, const GlobalOptions& global, std::string filter)
      : report_(report), global_(global), filter_(std::move(filter)) {}

  bool enabled(const std::string& name) const {
    return filter_.empty() || name.find(filter_) != std::string::npos;
  }
  void check(const std::string& name, double value, double tol) {
    if (enabled(name)) report_.add_check(name, value, tol, global_.tol);
  }

 private:
  Report& report_;
  const GlobalOptions& global_;
  std::string filter_;
};

double anticommutation_residual(int n) {
  const ModeAlgebra alg = build_fock_space(n);
  const Matrix id = Matrix::Identity(static_cast<Eigen::Index>(alg.space().dim()),
                                     static_cast<Eigen::Index>(alg.space().dim()));
  double worst = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Matrix expect = i == j ? Matrix(2.0 * id) : Matrix::Zero(id.rows(), id.cols());
      worst = std::max(
          worst, max_abs_diff(anticommutator(alg.majorana(i), alg.majorana(j)).matrix(), expect));
      const Matrix expect_c = i == j ? id : Matrix::Zero(id.rows(), id.cols());
      worst = std::max(worst, max_abs_diff(
                                  anticommutator(alg.annihilator(i), alg.creator(j)).matrix(),
                                  expect_c));
    }
  }
  return worst;
}

void verify_spectrum(Suite& suite, std::mt19937_64& rng, int samples) {
  if (!suite.enabled("spectrum") && !suite.enabled("zero_mode") &&
      !suite.enabled("quasiparticle")) {
    return;
  }
  const ModeAlgebra alg = build_fock_space(3);
  std::uniform_real_distribution<double> j_dist(0.1, 2.0), theta_dist(0.0, kPi),
      phi_dist(0.0, 2.0 * kPi);
  double spectrum = 0.0, zero_mode = 0.0, quasi = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double j = j_dist(rng), theta = theta_dist(rng), phi = phi_dist(rng);
    const Operator h = build_hamiltonian(alg, couplings_from_angles(j, theta, phi));
    const Spectrum spec = diagonalize(h);
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
      spectrum = std::max(spectrum, std::abs(spec.eigenvalues[k] - (k < 4 ? -j : j)));
    }
    const QuasiparticleOps ops = quasiparticle_ops(alg, theta, phi);
    zero_mode = std::max(zero_mode, max_abs(commutator(h, ops.beta).matrix()));
    const Operator model =
        j * (2.0 * (ops.alpha_dagger * ops.alpha) - Operator::identity(alg.space()));
    quasi = std::max(quasi, max_abs_diff(h, model));
  }
  suite.check("spectrum", spectrum, 1e-10);
  suite.check("zero_mode", zero_mode, 1e-12);
  suite.check("quasiparticle", quasi, 1e-12);
}

void verify_table(Suite& suite) {
  const ModeAlgebra alg = build_fock_space(3);
  const Operator parity = parity_operator(alg.space());
  for (double phi : {0.0, kPi / 6, 1.0}) {
    double amp = 0.0, par = 0.0;
    for (const auto& entry : eigenstate_table(alg, phi)) {
      amp = std::max(amp, max_abs(entry.state.amplitudes() -
                                  reference::table_amplitudes(entry.id, phi)));
      par = std::max(par, max_abs((parity * entry.state).amplitudes() -
                                  double(entry.parity) * entry.state.amplitudes()));
    }
    suite.check(angle_name("table", phi), amp, 1e-10);
    suite.check(angle_name("table_parity", phi), par, 1e-12);
  }
}

void verify_m31(Suite& suite) {
  const ModeAlgebra alg = build_fock_space(3);
  for (double phi : {0.0, kPi / 6, kPi / 4, 1.0}) {
    const std::string name = angle_name("m31", phi);
    if (!suite.enabled(name)) continue;
    const Matrix4 numeric = m31_odd(alg, phi).m;
    const Matrix4 printed = reference::m31_odd(phi);
    const Complex phase = global_phase_between(numeric, printed);
    suite.check(name, max_abs(numeric - phase * printed), 1e-10);
  }
}

void verify_composite(Suite& suite, std::mt19937_64& rng, int samples) {
  if (!suite.enabled("composite")) return;
  std::uniform_real_distribution<double> eta_dist(-kPi, kPi), phi_dist(0.0, 2.0 * kPi);
  double odd = 0.0, odd_blocks = 0.0, even = 0.0, even_blocks = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double eta = eta_dist(rng), phi = phi_dist(rng);
    const Matrix4 printed = reference::composite_gate(eta, phi);
    const CompositeGate g = composite_gate(eta, phi);
    const CompositeGate e = composite_gate_even(eta, phi);
    odd = std::max(odd, max_abs(g.matrix.m - printed));
    odd_blocks = std::max(odd_blocks, g.off_block_residual);
    even = std::max(even, max_abs(e.matrix.m - printed));
    even_blocks = std::max(even_blocks, e.off_block_residual);
  }
  suite.check("composite", odd, 1e-10);
  suite.check("composite_blocks", odd_blocks, 1e-10);
  suite.check("composite_even", even, 1e-10);
  suite.check("composite_even_blocks", even_blocks, 1e-10);
}

void verify_hadamard(Suite& suite) {
  const Matrix2 h = compose_sequence({{kPi / 2, 0.0}, {kPi / 4, -kPi / 2}});
  suite.check("hadamard", 1.0 - gate_fidelity(h, reference::hadamard()), 1e-10);
}

// ------------------------------------------------------------- entangle

Json conditions_json(const ConditionReport& c) {
  return Json{{"ratio_strong", number(c.ratio_strong)},
              {"ratio_weak", number(c.ratio_weak)},
              {"strong_ok", c.strong_ok},
              {"weak_ok", c.weak_ok}};
}

Json optional_number(const std::optional<double>& v) {
  return v ? number(*v) : Json(nullptr);
}

const char* kSignNote =
    "the protocol target (-|00> + |11>)/sqrt(2) and the Bell target (|00> + |11>)/sqrt(2) "
    "differ by the relative sign of |00>; fidelity to both is reported";

// ------------------------------------------------------------------- cli

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ContractError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw ContractError("failed writing '" + path + "'");
}

}  // namespace

Report run_verify(const GlobalOptions& global, const VerifyOptions& options) {
  Report report("verify");
  report.inputs() = Json{{"seed", global.seed},
                         {"tol", global.tol ? number(*global.tol) : Json(nullptr)},
                         {"filter", options.filter},
                         {"spectrum_samples", options.spectrum_samples},
                         {"composite_samples", options.composite_samples}};
  Suite suite(report, global, options.filter);
  std::mt19937_64 rng(global.seed);
  if (suite.enabled("algebra")) {
    suite.check("algebra(n=3)", anticommutation_residual(3), 1e-12);
    suite.check("algebra(n=4)", anticommutation_residual(4), 1e-12);
  }
  verify_spectrum(suite, rng, options.spectrum_samples);
  verify_table(suite);
  verify_m31(suite);
  verify_composite(suite, rng, options.composite_samples);
  verify_hadamard(suite);
  if (report.checks().empty()) throw ContractError("filter '" + options.filter + "' selects no check");
  return report;
}

Report run_gate(const GlobalOptions& global, const GateOptions& options) {
  const double eta = parse_angle(options.eta);
  const double phi = parse_angle(options.phi);
  require_finite(options.omega, "omega");
  if (!(options.omega > 0.0)) throw ContractError("omega must be positive");

  Report report("gate");
  report.inputs() = Json{{"eta", number(eta)},
                         {"phi", number(phi)},
                         {"omega", number(options.omega)},
                         {"compose", options.compose}};

  const MGate m = m_gate(eta, phi);
  const CompositeGate composite = composite_gate(eta, phi);
  report.add_matrix("m_gate", m.matrix);
  report.add_matrix("composite", composite.matrix.m);
  report.add_check("blocks_ok", composite.off_block_residual, 1e-10, global.tol);
  report.add_check("upper_block_vs_m_gate", max_abs(composite.upper - m.matrix), 1e-12,
                   global.tol);

  const GateSchedule schedule = gate_schedule(eta, options.omega);
  report.section("schedule") = Json{{"exchange", word_json(schedule.exchange)},
                                    {"dwell_j12", number(schedule.dwell_j12)},
                                    {"dwell_duration", number(schedule.dwell_duration)},
                                    {"unexchange", word_json(schedule.unexchange)}};
  Json flags{{"blocks_ok", report.checks().front().pass}};

  if (!options.compose.empty()) {
    std::vector<GateStep> factors = parse_steps(options.compose);
    std::reverse(factors.begin(), factors.end());
    const Matrix2 product = compose_sequence(factors);
    report.add_matrix("composed", product);
    const double f = gate_fidelity(product, reference::hadamard());
    report.add_fidelity("hadamard", f);
    report.add_check("composed_unitary", max_abs(product * product.adjoint() - Matrix2::Identity()),
                     1e-12, global.tol);
    flags["hadamard"] = 1.0 - f <= 1e-10;
  }
  report.section("flags") = std::move(flags);
  return report;
}

Report run_synthesize(const GlobalOptions& global, const SynthesizeOptions& options) {
  Matrix2 target;
  std::string source;
  if (!options.target.empty()) {
    if (options.target.size() != 8) {
      throw ContractError("target needs 8 numbers: re,im pairs of the row-major entries");
    }
    for (int k = 0; k < 4; ++k) {
      target(k / 2, k % 2) =
          Complex(parse_angle(options.target[2 * k]), parse_angle(options.target[2 * k + 1]));
    }
    source = "explicit";
  } else if (options.preset == "identity") {
    target = Matrix2::Identity();
    source = "identity";
  } else if (options.preset == "hadamard") {
    target = reference::hadamard();
    source = "hadamard";
  } else if (options.preset == "random") {
    std::mt19937_64 rng(global.seed);
    target = haar_su2(rng);
    source = "random";
  } else {
    throw ContractError("synthesize needs --target or --preset identity|hadamard|random");
  }

  Report report("synthesize");
  report.inputs() = Json{{"source", source}, {"seed", global.seed}};
  report.add_matrix("target", target);
  const std::vector<GateStep> steps = decompose_su2(target);
  const Matrix2 rebuilt = compose_sequence(steps);
  report.add_matrix("reconstructed", rebuilt);
  report.section("sequence") = steps_json(steps);
  const double f = gate_fidelity(rebuilt, target);
  report.add_fidelity("reconstruction", f);
  report.add_check("sequence_length", static_cast<double>(steps.size()), 3.0);
  report.add_check("reconstruction", 1.0 - f, 1e-9, global.tol);
  return report;
}

Report run_rabi(const GlobalOptions& global, const RabiOptions& options, std::ostream& err) {
  require_finite(options.omega, "omega");
  require_finite(options.dj, "dj");
  require_finite(options.max_duration, "max-duration");
  if (options.trace_pair < 0 || options.trace_pair > 3) {
    throw ContractError("trace-pair must be 0..3");
  }
  if (options.omega > 0.0 && std::abs(options.dj) / options.omega > 0.2) {
    err << "warning: dJ/omega = " << std::abs(options.dj) / options.omega
        << " exceeds 0.2; the rotating-wave picture no longer applies\n";
  }
  RabiConfig config;
  config.omega = options.omega;
  config.drive_amplitude = options.dj;
  config.drive_pair = options.pair;
  config.phi = parse_angle(options.phi);
  config.steps_per_drive_period = options.steps;
  config.max_duration = options.max_duration;
  config.sample_interval = options.sample_interval;

  Report report("rabi");
  report.inputs() = Json{{"omega", number(config.omega)},
                         {"dj", number(config.drive_amplitude)},
                         {"pair", config.drive_pair},
                         {"phi", number(config.phi)},
                         {"steps_per_drive_period", config.steps_per_drive_period},
                         {"max_duration", number(config.max_duration)},
                         {"sample_interval", number(config.sample_interval)},
                         {"min_transfer", number(options.min_transfer)}};

  const std::vector<RabiRow> rows = rabi_transition_check(config);
  Json table = Json::array();
  for (const auto& row : rows) {
    const std::string pair = std::string(label(row.ground)) + "->" + std::string(label(row.excited));
    table.push_back(Json{{"ground", label(row.ground)},
                         {"excited", label(row.excited)},
                         {"max_transfer", number(row.max_transfer)},
                         {"peak_time", number(row.peak_time)},
                         {"cross_parity_leakage", number(row.cross_parity_leakage)},
                         {"parity_drift", number(row.parity_drift)},
                         {"norm_drift", number(row.norm_drift)},
                         {"steps", row.trace.steps}});
    report.add_fidelity("transfer(" + pair + ")", row.max_transfer);
    report.add_check("transfer(" + pair + ")", 1.0 - row.max_transfer, 1.0 - options.min_transfer);
    report.add_check("parity_drift(" + pair + ")", row.parity_drift, 1e-9, global.tol);
    report.add_check("leakage(" + pair + ")", row.cross_parity_leakage, 1e-6, global.tol);
    report.add_check("norm_drift(" + pair + ")", row.norm_drift, 1e-9, global.tol);
  }
  report.section("table") = std::move(table);
  if (!options.trace.empty()) {
    write_text(options.trace, trace_csv(rows[static_cast<std::size_t>(options.trace_pair)].trace));
  }
  return report;
}

Report run_entangle(const GlobalOptions& global, const EntangleOptions& options) {
  require_finite(options.j12, "j12");
  require_finite(options.j1p2p, "j1p2p");
  require_finite(options.j11p, "j11p");
  ProtocolOptions protocol;
  protocol.thresholds = {options.strong, options.weak};
  protocol.search_beats = options.search_beats;

  Report report("entangle");
  report.section("notes") = Json::array({kSignNote});

  if (options.sweep.empty()) {
    report.inputs() = Json{{"j12", number(options.j12)},
                           {"j1p2p", number(options.j1p2p)},
                           {"j11p", number(options.j11p)},
                           {"strong_threshold", number(options.strong)},
                           {"weak_threshold", number(options.weak)},
                           {"min_fidelity", number(options.min_fidelity)}};
    const ProtocolResult r = entangling_protocol(options.j12, options.j1p2p, options.j11p, protocol);
    const TwoQubitSystem system = build_two_qubit(options.j12, options.j1p2p, options.j11p);
    report.add_fidelity("target", r.fidelity_target);
    report.add_fidelity("bell", r.fidelity_bell);
    report.add_fidelity("initial", r.fidelity_initial);
    report.section("protocol") = Json{{"dwell_time", number(r.dwell_time)},
                                      {"beat_found", r.beat_found},
                                      {"beat_period", optional_number(r.beat_period)},
                                      {"conditions", conditions_json(r.conditions)}};
    report.add_check("fidelity_target", 1.0 - r.fidelity_target, 1.0 - options.min_fidelity);
    report.add_check("parity_drift", r.parity_drift, 1e-9, global.tol);
    report.add_check("spectator_parity_drift", r.spectator_parity_drift, 1e-9, global.tol);
    report.add_check("stationarity", 1.0 - stationarity_fidelity(system), 1e-3);
    report.add_check("separated_drift", separated_drift(system, r.final_state, 1.0), 1e-6,
                     global.tol);
    return report;
  }

  const Sweep sweep = parse_sweep(options.sweep);
  std::string key = sweep.key;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key != "j12" && key != "j1p2p" && key != "j11p") {
    throw ContractError("sweep key must be J12, J1p2p or J11p");
  }
  report.inputs() = Json{{"j12", number(options.j12)},
                         {"j1p2p", number(options.j1p2p)},
                         {"j11p", number(options.j11p)},
                         {"sweep", options.sweep},
                         {"strong_threshold", number(options.strong)},
                         {"weak_threshold", number(options.weak)}};
  protocol.require_beat = false;
  Json rows = Json::array();
  double worst_drop = 0.0;
  std::optional<double> previous;
  for (double v : sweep.values) {
    double j12 = options.j12, j1p2p = options.j1p2p, j11p = options.j11p;
    (key == "j12" ? j12 : key == "j1p2p" ? j1p2p : j11p) = v;
    const ProtocolResult r = entangling_protocol(j12, j1p2p, j11p, protocol);
    char name[64];
    std::snprintf(name, sizeof name, "%s=%.6g", key.c_str(), v);
    rows.push_back(Json{{"value", number(v)},
                        {"fidelity_target", number(r.fidelity_target)},
                        {"fidelity_bell", number(r.fidelity_bell)},
                        {"dwell_time", number(r.dwell_time)},
                        {"beat_found", r.beat_found},
                        {"beat_period", optional_number(r.beat_period)},
                        {"conditions", conditions_json(r.conditions)}});
    report.add_fidelity(std::string("target(") + name + ")", r.fidelity_target);
    report.add_check(std::string("beat_found(") + name + ")", r.beat_found ? 0.0 : 1.0, 0.0);
    report.add_check(std::string("parity_drift(") + name + ")", r.parity_drift, 1e-9, global.tol);
    if (previous) worst_drop = std::max(worst_drop, *previous - r.fidelity_target);
    previous = r.fidelity_target;
  }
  report.section("sweep") = std::move(rows);
  report.add_check("monotone", worst_drop, 1e-12, global.tol);
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majorana three-vortex qubit simulator", "mvq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "INI file; [section] names match subcommands");
  app.allow_config_extras(CLI::config_extras_mode::error);

  GlobalOptions global;
  double tol = 0.0;
  bool json_flag = false;
  bool no_timing = false;
  app.add_option("--out", global.out, "Write the report here instead of stdout");
  app.add_option("--seed", global.seed, "Seed for randomized suites");
  auto* tol_opt = app.add_option("--tol", tol, "Override residual tolerances")
                      ->check(CLI::PositiveNumber);
  auto* json_opt = app.add_flag("--json", json_flag, "JSON report (default)");
  auto* csv_opt = app.add_flag("--csv", global.csv, "CSV table of checks");
  json_opt->excludes(csv_opt);
  app.add_flag("--no-timing", no_timing, "Report duration_ms as 0");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Identity suite");
  verify_cmd->add_option("--filter", verify.filter, "Run checks whose name contains this");
  verify_cmd->add_option("--spectrum-samples", verify.spectrum_samples)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--composite-samples", verify.composite_samples)
      ->check(CLI::PositiveNumber);

  GateOptions gate;
  auto* gate_cmd = app.add_subcommand("gate", "M(eta, phi), composite matrix and schedule");
  gate_cmd->add_option("--eta", gate.eta, "Angle expression");
  gate_cmd->add_option("--phi", gate.phi, "Angle expression");
  gate_cmd->add_option("--omega", gate.omega, "Dwell coupling J_12");
  gate_cmd->add_option("--compose", gate.compose,
                       "Product factors 'eta,phi;eta,phi', rightmost acts first");

  SynthesizeOptions synth;
  auto* synth_cmd = app.add_subcommand("synthesize", "Decompose a 2x2 unitary into M gates");
  auto* target_opt = synth_cmd->add_option("--target", synth.target,
                                           "Eight numbers: re,im of the row-major entries")
                         ->delimiter(',');
  synth_cmd->add_option("--preset", synth.preset)
      ->check(CLI::IsMember({"identity", "hadamard", "random"}))
      ->excludes(target_opt);

  RabiOptions rabi;
  auto* rabi_cmd = app.add_subcommand("rabi", "Driven transitions of the four pairs");
  rabi_cmd->add_option("--omega", rabi.omega);
  rabi_cmd->add_option("--dj", rabi.dj, "Drive amplitude");
  rabi_cmd->add_option("--pair", rabi.pair, "Driven coupling")->check(CLI::IsMember({23, 31}));
  rabi_cmd->add_option("--phi", rabi.phi, "Angle expression");
  rabi_cmd->add_option("--steps", rabi.steps, "Steps per drive period")->check(CLI::Range(32, 1 << 20));
  rabi_cmd->add_option("--max-duration", rabi.max_duration, "Search window in 1/omega");
  rabi_cmd->add_option("--sample-interval", rabi.sample_interval);
  rabi_cmd->add_option("--min-transfer", rabi.min_transfer)->check(CLI::Range(0.0, 1.0));
  rabi_cmd->add_option("--trace", rabi.trace, "Write a CSV population trace");
  rabi_cmd->add_option("--trace-pair", rabi.trace_pair, "Pair index 0..3 for --trace");

  EntangleOptions ent;
  auto* ent_cmd = app.add_subcommand("entangle", "Two-qubit entangling protocol");
  ent_cmd->add_option("--j12", ent.j12);
  ent_cmd->add_option("--j1p2p", ent.j1p2p);
  ent_cmd->add_option("--j11p", ent.j11p);
  ent_cmd->add_option("--sweep", ent.sweep, "KEY=v1,v2,... over J12, J1p2p or J11p");
  ent_cmd->add_option("--strong", ent.strong, "Threshold for min(J12, J1'2')/J11'");
  ent_cmd->add_option("--weak", ent.weak, "Threshold for J11'/|J12 - J1'2'|");
  ent_cmd->add_option("--min-fidelity", ent.min_fidelity)->check(CLI::Range(0.0, 1.0));
  ent_cmd->add_option("--search-beats", ent.search_beats)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (*tol_opt) global.tol = tol;
  global.timing = !no_timing;

  const auto start = std::chrono::steady_clock::now();
  try {
    std::optional<Report> report;
    if (*verify_cmd) {
      report = run_verify(global, verify);
    } else if (*gate_cmd) {
      report = run_gate(global, gate);
    } else if (*synth_cmd) {
      report = run_synthesize(global, synth);
    } else if (*rabi_cmd) {
      report = run_rabi(global, rabi, err);
    } else {
      report = run_entangle(global, ent);
    }
    if (global.timing) {
      report->set_duration_ms(
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count());
    }
    const std::string text = global.csv ? report->to_csv() : report->to_json().dump(2) + "\n";
    if (global.out.empty()) {
      out << text;
    } else {
      write_text(global.out, text);
    }
    for (const auto& c : report->checks()) {
      if (!c.pass) err << "FAIL " << c.name << ": " << c.value << " > " << c.tol << "\n";
    }
    return report->all_pass() ? kExitPass : kExitCheckFailed;
  } catch (const ProtocolError& e) {
    err << "protocol failure: " << e.what() << "\n";
    return kExitProtocol;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace mvq::cli
