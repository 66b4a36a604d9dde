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

// Two qubits of two Majoranas each, (gamma_1, gamma_2) and (gamma_1',
// gamma_2'), stored as modes 1..4 in that order. The spectator zero modes of
// the three-vortex construction are not part of this space.
//
// Logical basis: |ab> = L_a L'_b |0) normalized, with L_0 = alpha and
// L_1 = alpha^dag alpha (primed likewise).

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mvq/braiding.hpp"
#include "mvq/dynamics.hpp"
#include "mvq/fock.hpp"

namespace mvq {

inline constexpr int kMode1 = 1;
inline constexpr int kMode2 = 2;
inline constexpr int kMode1p = 3;
inline constexpr int kMode2p = 4;

struct TwoQubitCouplings {
  double j12 = 1.0;
  double j1p2p = 1.0;
  double j11p = 0.0;
};

struct TwoQubitSystem {
  ModeAlgebra algebra;
  TwoQubitCouplings couplings;
  Operator hamiltonian;
  Operator alpha;
  Operator alpha_p;
  /// |00>, |01>, |10>, |11>.
  std::array<StateVector, 4> logical;
};

/// H = i J12 g1 g2 + i J1'2' g1' g2' + i J11' g1 g1'.
TwoQubitSystem build_two_qubit(double j12, double j1p2p, double j11p);

/// Largest entry of i J11' g1 g1' - i J11' (a + a^dag)(a' + a'^dag).
double interaction_rewrite_residual(const TwoQubitSystem& system);

struct ConditionThresholds {
  double strong = 20.0;
  double weak = 20.0;
};

struct ConditionReport {
  /// min(|J12|, |J1'2'|) / |J11'|; infinite when J11' = 0.
  double ratio_strong;
  /// |J11'| / |J12 - J1'2'|; infinite when the difference is 0.
  double ratio_weak;
  bool strong_ok;
  bool weak_ok;
};

ConditionReport check_conditions(const TwoQubitCouplings& couplings,
                                 const ConditionThresholds& thresholds = {});

/// Exchange of gamma_1 and gamma_1' counterclockwise.
StateVector ivanov_braid(const TwoQubitSystem& system, const StateVector& psi);

/// Closed-form states built from operator words on |0).
/// (a a' + a^dag a'^dag - a a^dag a' a'^dag + a^dag a a'^dag a') / 2.
StateVector ivanov_expected_state(const TwoQubitSystem& system);
/// (|00> + |11>)/sqrt(2).
StateVector bell_target(const TwoQubitSystem& system);
/// (-|00> + |11>)/sqrt(2).
StateVector protocol_target(const TwoQubitSystem& system);
/// (|01> + |10>)/sqrt(2).
StateVector coupling_midpoint(const TwoQubitSystem& system);

/// Amplitudes of psi on the logical basis.
Eigen::Vector4cd logical_coordinates(const TwoQubitSystem& system, const StateVector& psi);

/// Norm of the part of psi outside the logical span.
double logical_leakage(const TwoQubitSystem& system, const StateVector& psi);

/// Applies `gate` (column convention) to qubit 1 or 2. Throws LeakageError
/// when psi has more than 1e-9 weight outside the logical span.
StateVector apply_logical_gate(const TwoQubitSystem& system, int qubit, const MGate& gate,
                               const StateVector& psi);

struct BeatTrace {
  std::vector<double> times;
  std::vector<double> population_01;
  std::vector<double> population_10;
  double max_transfer = 0.0;
  double min_pair_population = 1.0;
  /// Distance between successive transfer peaks, when one was detected.
  std::optional<double> period;
};

/// Evolves |01> under the full Hamiltonian and records the two populations.
BeatTrace beat_oscillation_probe(const TwoQubitSystem& system, double duration,
                                 int samples = 4001);

struct ProtocolOptions {
  ConditionThresholds thresholds;
  /// Throw ProtocolError when no beat is found; otherwise the coupling dwell
  /// is skipped.
  bool require_beat = true;
  /// Search horizon in nominal beat periods pi/|J11'|.
  double search_beats = 10.0;
  int samples_per_beat = 400;
};

struct ProtocolResult {
  StateVector final_state;
  StateVector after_coupling;
  double fidelity_target;   // to (-|00> + |11>)/sqrt(2)
  double fidelity_bell;     // to (|00> + |11>)/sqrt(2)
  double fidelity_initial;  // to |00>
  double dwell_time;
  bool beat_found;
  std::optional<double> beat_period;
  ConditionReport conditions;
  /// Physical parity drift during the coupling dwell.
  double parity_drift;
  /// Drift of parity with the dropped spectator modes restored, over all
  /// steps.
  double spectator_parity_drift;
};

/// Prepare |00>, M(pi/2, pi/2) on qubit 2, couple until the state is closest
/// to (|01> + |10>)/sqrt(2), M(pi/2, pi/2) on qubit 2.
ProtocolResult entangling_protocol(double j12, double j1p2p, double j11p,
                                   const ProtocolOptions& options = {});

/// Fidelity of |00> to itself after `beats` nominal beat periods under the
/// full Hamiltonian.
double stationarity_fidelity(const TwoQubitSystem& system, double beats = 1.0);

/// Fidelity change of `psi` after `beats` nominal beat periods with J11'
/// switched off, measured in the frame co-rotating with the single-qubit
/// Hamiltonians.
double separated_drift(const TwoQubitSystem& system, const StateVector& psi, double beats);

}  // namespace mvq
