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

#include "mvq/twoqubit.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <limits>
#include <numbers>

#include "mvq/errors.hpp"

namespace mvq {

using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLeakageTol = 1e-9;
// Smallest transfer that counts as a beat.
constexpr double kBeatFloor = 1e-6;

StateVector from_logical(const TwoQubitSystem& system, const Eigen::Vector4cd& coords) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(system.algebra.space().dim()));
  for (int k = 0; k < 4; ++k) v += coords(k) * system.logical[k].amplitudes();
  return {system.algebra.space(), std::move(v)};
}

double physical_parity(const Operator& parity, const StateVector& psi) {
  return expectation(parity, psi).real();
}

// Parity with the spectator zero modes restored: a logical |1> carries one
// extra Majorana, so each qubit in |1> contributes a factor -1.
double spectator_parity(const TwoQubitSystem& system, const Operator& parity,
                        const StateVector& psi) {
  const Eigen::Vector4cd c = logical_coordinates(system, psi);
  const StateVector in_span = from_logical(system, c);
  const std::array<double, 4> restore = {1.0, -1.0, -1.0, 1.0};
  Eigen::Vector4cd flipped;
  for (int k = 0; k < 4; ++k) flipped(k) = restore[k] * c(k);
  return inner(in_span, parity * from_logical(system, flipped)).real();
}

double golden_maximize(const std::function<double(double)>& f, double lo, double hi) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TwoQubitSystem build_two_qubit(double j12, double j1p2p, double j11p) {
  if (!std::isfinite(j12) || !std::isfinite(j1p2p) || !std::isfinite(j11p)) {
    throw ContractError("two-qubit couplings must be finite");
  }
  ModeAlgebra algebra = build_fock_space(4);
  CouplingSet set;
  set.add(kMode1, kMode2, j12);
  set.add(kMode1p, kMode2p, j1p2p);
  set.add(kMode1, kMode1p, j11p);
  Operator h = build_hamiltonian(algebra, set);

  Operator alpha = 0.5 * (algebra.majorana(kMode1) + 1i * algebra.majorana(kMode2));
  Operator alpha_p = 0.5 * (algebra.majorana(kMode1p) + 1i * algebra.majorana(kMode2p));
  const Operator n = alpha.adjoint() * alpha;
  const Operator n_p = alpha_p.adjoint() * alpha_p;
  const StateVector vac = algebra.vacuum();
  std::array<StateVector, 4> logical = {
      (alpha * alpha_p * vac).normalized(), (alpha * n_p * vac).normalized(),
      (n * alpha_p * vac).normalized(), (n * n_p * vac).normalized()};
  return {std::move(algebra), {j12, j1p2p, j11p}, std::move(h),
          std::move(alpha),   std::move(alpha_p), std::move(logical)};
}

double interaction_rewrite_residual(const TwoQubitSystem& system) {
  const auto& alg = system.algebra;
  const double j = system.couplings.j11p;
  const Operator direct = (1i * j) * (alg.majorana(kMode1) * alg.majorana(kMode1p));
  const Operator rewritten = (1i * j) * ((system.alpha + system.alpha.adjoint()) *
                                         (system.alpha_p + system.alpha_p.adjoint()));
  return max_abs_diff(direct, rewritten);
}

ConditionReport check_conditions(const TwoQubitCouplings& c, const ConditionThresholds& t) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  ConditionReport r{};
  const double strong_num = std::min(std::abs(c.j12), std::abs(c.j1p2p));
  r.ratio_strong = c.j11p == 0.0 ? inf : strong_num / std::abs(c.j11p);
  const double detuning = std::abs(c.j12 - c.j1p2p);
  r.ratio_weak = detuning == 0.0 ? inf : std::abs(c.j11p) / detuning;
  r.strong_ok = r.ratio_strong >= t.strong;
  r.weak_ok = r.ratio_weak >= t.weak;
  return r;
}

StateVector ivanov_braid(const TwoQubitSystem& system, const StateVector& psi) {
  return braid_unitary(system.algebra, kMode1, kMode1p, Orientation::kCcw) * psi;
}

StateVector ivanov_expected_state(const TwoQubitSystem& system) {
  const Operator& a = system.alpha;
  const Operator& ap = system.alpha_p;
  const Operator ad = a.adjoint();
  const Operator apd = ap.adjoint();
  const Operator word = a * ap + ad * apd - a * ad * ap * apd + ad * a * apd * ap;
  return (0.5 * word * system.algebra.vacuum()).normalized();
}

StateVector bell_target(const TwoQubitSystem& system) {
  return from_logical(system, Eigen::Vector4cd(1.0, 0.0, 0.0, 1.0) / std::sqrt(2.0));
}

StateVector protocol_target(const TwoQubitSystem& system) {
  return from_logical(system, Eigen::Vector4cd(-1.0, 0.0, 0.0, 1.0) / std::sqrt(2.0));
}

StateVector coupling_midpoint(const TwoQubitSystem& system) {
  return from_logical(system, Eigen::Vector4cd(0.0, 1.0, 1.0, 0.0) / std::sqrt(2.0));
}

Eigen::Vector4cd logical_coordinates(const TwoQubitSystem& system, const StateVector& psi) {
  Eigen::Vector4cd c;
  for (int k = 0; k < 4; ++k) c(k) = inner(system.logical[k], psi);
  return c;
}

double logical_leakage(const TwoQubitSystem& system, const StateVector& psi) {
  const StateVector in_span = from_logical(system, logical_coordinates(system, psi));
  return (psi.amplitudes() - in_span.amplitudes()).norm();
}

StateVector apply_logical_gate(const TwoQubitSystem& system, int qubit, const MGate& gate,
                               const StateVector& psi) {
  if (qubit != 1 && qubit != 2) throw ContractError("qubit must be 1 or 2");
  if (max_abs_diff(gate.matrix * gate.matrix.adjoint(), Matrix2::Identity()) > 1e-10) {
    throw ContractError("logical gate is not unitary");
  }
  const double leak = logical_leakage(system, psi);
  if (leak > kLeakageTol) {
    throw LeakageError("state has weight " + std::to_string(leak) + " outside the logical span");
  }
  const Eigen::Vector4cd c = logical_coordinates(system, psi);
  // index = 2 a + b for |ab>
  Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int k = 0; k < 2; ++k) {
        if (qubit == 1) {
          out(2 * k + b) += gate.matrix(k, a) * c(2 * a + b);
        } else {
          out(2 * a + k) += gate.matrix(k, b) * c(2 * a + b);
        }
      }
    }
  }
  return from_logical(system, out);
}

BeatTrace beat_oscillation_probe(const TwoQubitSystem& system, double duration, int samples) {
  if (!(duration >= 0.0) || samples < 2) throw ContractError("invalid beat probe window");
  const Propagator prop(system.hamiltonian);
  const StateVector start = system.logical[1];
  BeatTrace trace;
  for (int k = 0; k < samples; ++k) {
    const double t = duration * k / (samples - 1);
    const StateVector psi = prop.evolve(t, start);
    const double p01 = std::norm(inner(system.logical[1], psi));
    const double p10 = std::norm(inner(system.logical[2], psi));
    trace.times.push_back(t);
    trace.population_01.push_back(p01);
    trace.population_10.push_back(p10);
    trace.max_transfer = std::max(trace.max_transfer, p10);
    trace.min_pair_population = std::min(trace.min_pair_population, p01 + p10);
  }
  if (trace.max_transfer <= kBeatFloor) return trace;

  // Peaks of the transferred population that reach at least half of the
  // window maximum; ripples from off-resonant terms stay far below that.
  std::vector<double> peaks;
  const auto& p = trace.population_10;
  for (std::size_t k = 1; k + 1 < p.size(); ++k) {
    if (p[k] >= p[k - 1] && p[k] > p[k + 1] && p[k] >= 0.5 * trace.max_transfer) {
      if (peaks.empty() || trace.times[k] - peaks.back() > 0.0) peaks.push_back(trace.times[k]);
    }
  }
  if (peaks.size() >= 2) {
    trace.period = peaks[1] - peaks[0];
  } else if (peaks.size() == 1) {
    trace.period = 2.0 * peaks[0];
  }
  return trace;
}

ProtocolResult entangling_protocol(double j12, double j1p2p, double j11p,
                                   const ProtocolOptions& options) {
  const TwoQubitSystem system = build_two_qubit(j12, j1p2p, j11p);
  const Operator parity = parity_operator(system.algebra.space());
  const MGate flip_gate = m_gate(kPi / 2, kPi / 2);

  const StateVector start = system.logical[0];
  const double spectator0 = spectator_parity(system, parity, start);
  double spectator_drift = 0.0;
  auto track = [&](const StateVector& psi) {
    spectator_drift =
        std::max(spectator_drift, std::abs(spectator_parity(system, parity, psi) - spectator0));
  };

  StateVector psi = apply_logical_gate(system, 2, flip_gate, start);
  track(psi);

  const StateVector midpoint = coupling_midpoint(system);
  const Propagator prop(system.hamiltonian);
  auto overlap_at = [&](double t) { return fidelity(midpoint, prop.evolve(t, psi)); };

  double dwell = 0.0;
  bool beat_found = false;
  std::optional<double> beat_period;
  if (j11p != 0.0) {
    const double nominal = kPi / std::abs(j11p);
    const double horizon = options.search_beats * nominal;
    const BeatTrace beat = beat_oscillation_probe(
        system, horizon,
        static_cast<int>(options.search_beats * options.samples_per_beat) + 1);
    beat_period = beat.period;
    if (beat.max_transfer > kBeatFloor) {
      const int n = static_cast<int>(beat.times.size());
      std::vector<double> f(static_cast<std::size_t>(n));
      double f_max = 0.0, f_min = 1.0;
      for (int k = 0; k < n; ++k) {
        f[k] = overlap_at(beat.times[k]);
        f_max = std::max(f_max, f[k]);
        f_min = std::min(f_min, f[k]);
      }
      const double floor = f_max - 0.05 * (f_max - f_min);
      for (int k = 1; k + 1 < n; ++k) {
        if (f[k] >= f[k - 1] && f[k] >= f[k + 1] && f[k] >= floor) {
          dwell = golden_maximize(overlap_at, beat.times[k - 1], beat.times[k + 1]);
          beat_found = true;
          break;
        }
      }
    }
  }
  if (!beat_found && options.require_beat) {
    throw ProtocolError("no coupling beat between |01> and |10> within " +
                        std::to_string(options.search_beats) + " beat periods");
  }

  const StateVector before_coupling = psi;
  psi = prop.evolve(dwell, psi);
  const double parity_drift =
      std::abs(physical_parity(parity, psi) - physical_parity(parity, before_coupling));
  track(psi);
  const StateVector after_coupling = psi;

  psi = apply_logical_gate(system, 2, flip_gate, psi);
  track(psi);

  return {psi,
          after_coupling,
          fidelity(protocol_target(system), psi),
          fidelity(bell_target(system), psi),
          fidelity(start, psi),
          dwell,
          beat_found,
          beat_period,
          check_conditions(system.couplings, options.thresholds),
          parity_drift,
          spectator_drift};
}

double stationarity_fidelity(const TwoQubitSystem& system, double beats) {
  const double j = system.couplings.j11p;
  const double t = beats * kPi / (j != 0.0 ? std::abs(j) : 1.0);
  return fidelity(system.logical[0], evolve_constant(system.hamiltonian, t, system.logical[0]));
}

double separated_drift(const TwoQubitSystem& system, const StateVector& psi, double beats) {
  const auto& c = system.couplings;
  const double scale = c.j11p != 0.0 ? std::abs(c.j11p) : 1.0;
  const double t = beats * kPi / scale;
  const TwoQubitSystem local = build_two_qubit(c.j12, c.j1p2p, 0.0);
  const StateVector lab = evolve_constant(local.hamiltonian, t, psi);
  // Undo the single-qubit dynamical phases.
  const StateVector rotating = evolve_constant(local.hamiltonian, -t, lab);
  return std::abs(1.0 - fidelity(psi, rotating));
}

}  // namespace mvq
