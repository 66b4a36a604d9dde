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

// Time evolution under static and modulated Majorana couplings.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvq/fock.hpp"
#include "mvq/hamiltonian.hpp"

namespace mvq {

inline constexpr std::int64_t kMaxEvolutionSteps = 100'000'000;

/// exp(-i H t) psi through the spectral decomposition of H.
StateVector evolve_constant(const Operator& hamiltonian, double t, const StateVector& psi);

/// Caches the eigensystem of a fixed Hamiltonian for repeated evolution.
class Propagator {
 public:
  explicit Propagator(const Operator& hamiltonian);
  StateVector evolve(double t, const StateVector& psi) const;
  const Eigen::VectorXd& energies() const { return energies_; }

 private:
  FockSpace space_;
  Eigen::VectorXd energies_;
  Matrix vectors_;
};

/// delta_J cos(frequency t + phase) i gamma_i gamma_j.
struct DriveTerm {
  int i;
  int j;
  double amplitude;
  double frequency;
  double phase = 0.0;
};

struct PulseSchedule {
  CouplingSet static_couplings;
  std::vector<DriveTerm> drives;
  double duration = 0.0;
  int steps_per_drive_period = 256;
  /// Time between recorded samples; 0 records one sample per drive period
  /// (or only the endpoints without drives).
  double sample_interval = 0.0;
};

struct Observable {
  std::string label;
  StateVector state;
};

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<std::string> labels;
  /// populations[sample][observable]
  std::vector<std::vector<double>> populations;
  /// Step-resolution maximum of each observable and when it occurred.
  std::vector<double> peak_population;
  std::vector<double> peak_time;
  StateVector final_state;
  double max_norm_drift = 0.0;
  double max_parity_drift = 0.0;
  std::int64_t steps = 0;
};

/// Options that stop an evolution early, once `watch` has peaked: its
/// population fell below `drop_fraction` of the running maximum after the
/// maximum exceeded `min_peak`.
struct PeakStop {
  std::size_t watch = 0;
  double min_peak = 0.5;
  double drop_fraction = 0.5;
};

/// Fourth-order Magnus integration: each step exponentiates exactly the
/// effective Hamiltonian built from two Gauss-node samples. Throws ResourceError past
/// kMaxEvolutionSteps and ContractError on an invalid schedule.
EvolutionTrace evolve_schedule(const ModeAlgebra& algebra, const PulseSchedule& schedule,
                               const StateVector& psi, const std::vector<Observable>& observables,
                               const std::optional<PeakStop>& stop = std::nullopt);

struct RabiConfig {
  double omega = 1.0;
  double drive_amplitude = 0.02;
  /// 23 or 31: which coupling is modulated.
  int drive_pair = 23;
  double phi = 0.0;
  int steps_per_drive_period = 256;
  /// Upper bound on the search window, in units of 1/omega.
  double max_duration = 2000.0;
  double sample_interval = 0.0;
};

struct RabiRow {
  TableState ground;
  TableState excited;
  double max_transfer;
  double peak_time;
  /// Largest population reached on any state of the other parity.
  double cross_parity_leakage;
  double parity_drift;
  double norm_drift;
  EvolutionTrace trace;
};

/// The four ground/excited pairs that a resonant quadratic drive connects.
std::vector<std::pair<TableState, TableState>> rabi_pairs();

/// Drives each pair from its ground member at frequency 2 omega and reports
/// the transfer at the first population peak of the excited member.
std::vector<RabiRow> rabi_transition_check(const RabiConfig& config);

/// The piecewise-constant Hamiltonian at time t.
Operator schedule_hamiltonian(const ModeAlgebra& algebra, const PulseSchedule& schedule,
                              double t);

}  // namespace mvq
