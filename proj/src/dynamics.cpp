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

#include "mvq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "mvq/errors.hpp"

namespace mvq {

using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGaussLow = 0.5 - std::numbers::sqrt3 / 6.0;
constexpr double kGaussHigh = 0.5 + std::numbers::sqrt3 / 6.0;
constexpr double kMagnusWeight = std::numbers::sqrt3 / 12.0;

struct Term {
  Matrix matrix;  // i gamma_i gamma_j
  double amplitude;
  double frequency;
  double phase;
};

Matrix step_propagator(const Matrix& h, double dt) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXcd phases =
      (solver.eigenvalues().cast<Complex>() * Complex(0.0, -dt)).array().exp();
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

void validate(const ModeAlgebra& algebra, const PulseSchedule& schedule) {
  if (!(schedule.duration >= 0.0) || !std::isfinite(schedule.duration)) {
    throw ContractError("schedule duration must be finite and non-negative");
  }
  if (schedule.steps_per_drive_period < 32) {
    throw ContractError("steps_per_drive_period must be at least 32");
  }
  if (schedule.sample_interval < 0.0) throw ContractError("sample_interval must be >= 0");
  int max_index = schedule.static_couplings.max_index();
  for (const auto& d : schedule.drives) {
    if (d.i == d.j || d.i < 1 || d.j < 1) throw ContractError("invalid drive pair");
    if (!std::isfinite(d.amplitude) || !std::isfinite(d.frequency) || !(d.frequency > 0.0)) {
      throw ContractError("drive amplitude must be finite and frequency positive");
    }
    max_index = std::max({max_index, d.i, d.j});
  }
  if (max_index > algebra.n_modes()) throw ContractError("schedule refers to a missing Majorana");
}

}  // namespace

StateVector evolve_constant(const Operator& hamiltonian, double t, const StateVector& psi) {
  return Propagator(hamiltonian).evolve(t, psi);
}

Propagator::Propagator(const Operator& hamiltonian) : space_(hamiltonian.space()) {
  if (!hamiltonian.is_hermitian(1e-10)) throw ContractError("evolution needs a Hermitian H");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian.matrix());
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

StateVector Propagator::evolve(double t, const StateVector& psi) const {
  if (!(psi.space() == space_)) throw DimensionError("state and Hamiltonian spaces differ");
  if (std::abs(psi.norm() - 1.0) > 1e-9) throw ContractError("evolution needs a normalized state");
  const Eigen::VectorXcd phases = (energies_.cast<Complex>() * Complex(0.0, -t)).array().exp();
  Vector out = vectors_ * (phases.asDiagonal() * (vectors_.adjoint() * psi.amplitudes()));
  return {space_, std::move(out)};
}

Operator schedule_hamiltonian(const ModeAlgebra& algebra, const PulseSchedule& schedule,
                              double t) {
  Operator h = build_hamiltonian(algebra, schedule.static_couplings);
  for (const auto& d : schedule.drives) {
    const double value = d.amplitude * std::cos(d.frequency * t + d.phase);
    h += (1i * value) * (algebra.majorana(d.i) * algebra.majorana(d.j));
  }
  return h;
}

EvolutionTrace evolve_schedule(const ModeAlgebra& algebra, const PulseSchedule& schedule,
                               const StateVector& psi, const std::vector<Observable>& observables,
                               const std::optional<PeakStop>& stop) {
  validate(algebra, schedule);
  if (!(psi.space() == algebra.space())) throw DimensionError("state lives on another space");
  if (std::abs(psi.norm() - 1.0) > 1e-9) throw ContractError("evolution needs a normalized state");
  for (const auto& o : observables) {
    if (!(o.state.space() == algebra.space())) throw DimensionError("observable on another space");
  }
  if (stop && stop->watch >= observables.size()) throw ContractError("peak watch out of range");

  const Matrix h_static = build_hamiltonian(algebra, schedule.static_couplings).matrix();
  std::vector<Term> terms;
  double fastest = 0.0;
  for (const auto& d : schedule.drives) {
    if (d.amplitude == 0.0) continue;
    terms.push_back({(1i * (algebra.majorana(d.i) * algebra.majorana(d.j)).matrix()).eval(),
                     d.amplitude, d.frequency, d.phase});
    fastest = std::max(fastest, d.frequency);
  }

  // Without drives H is constant and each exact step spans one sample
  // interval (or the whole run).
  const double period = fastest > 0.0 ? 2.0 * kPi / fastest : 0.0;
  const double nominal_dt = fastest > 0.0 ? period / schedule.steps_per_drive_period
                            : schedule.sample_interval > 0.0 ? schedule.sample_interval
                                                             : schedule.duration;
  const double steps_real = nominal_dt > 0.0 ? std::ceil(schedule.duration / nominal_dt) : 0.0;
  if (steps_real > static_cast<double>(kMaxEvolutionSteps)) {
    throw ResourceError("schedule needs " + std::to_string(steps_real) + " steps, budget is " +
                        std::to_string(kMaxEvolutionSteps));
  }
  const auto n_steps = static_cast<std::int64_t>(steps_real);
  const double dt = n_steps > 0 ? schedule.duration / static_cast<double>(n_steps) : 0.0;

  const double sample_every = schedule.sample_interval > 0.0 ? schedule.sample_interval : period;
  const std::int64_t stride =
      sample_every > 0.0 && dt > 0.0
          ? std::max<std::int64_t>(1, std::llround(sample_every / dt))
          : std::max<std::int64_t>(1, n_steps);

  const Matrix parity = parity_operator(algebra.space()).matrix();
  const double parity0 = psi.amplitudes().dot(parity * psi.amplitudes()).real();

  EvolutionTrace trace{{}, {}, {}, {}, {}, psi};
  for (const auto& o : observables) trace.labels.push_back(o.label);
  trace.peak_population.assign(observables.size(), 0.0);
  trace.peak_time.assign(observables.size(), 0.0);

  Vector state = psi.amplitudes();
  std::vector<double> pops(observables.size());
  auto measure = [&](double t, bool record) {
    for (std::size_t k = 0; k < observables.size(); ++k) {
      pops[k] = std::norm(observables[k].state.amplitudes().dot(state));
      if (pops[k] > trace.peak_population[k]) {
        trace.peak_population[k] = pops[k];
        trace.peak_time[k] = t;
      }
    }
    trace.max_norm_drift = std::max(trace.max_norm_drift, std::abs(state.norm() - 1.0));
    trace.max_parity_drift =
        std::max(trace.max_parity_drift, std::abs(state.dot(parity * state).real() - parity0));
    if (record) {
      trace.times.push_back(t);
      trace.populations.push_back(pops);
    }
  };

  measure(0.0, true);
  auto sample = [&](double t) {
    Matrix h = h_static;
    for (const auto& term : terms) {
      h += (term.amplitude * std::cos(term.frequency * t + term.phase)) * term.matrix;
    }
    return h;
  };
  const bool constant = terms.empty();
  const Matrix constant_step = constant && n_steps > 0 ? step_propagator(h_static, dt) : Matrix();
  double running_max = 0.0;
  for (std::int64_t k = 0; k < n_steps; ++k) {
    if (constant) {
      state = constant_step * state;
    } else {
      // Fourth-order Magnus step from the two Gauss-Legendre nodes.
      const double t0 = static_cast<double>(k) * dt;
      const Matrix h1 = sample(t0 + kGaussLow * dt);
      const Matrix h2 = sample(t0 + kGaussHigh * dt);
      const Matrix h = 0.5 * (h1 + h2) - Complex(0.0, kMagnusWeight * dt) * (h2 * h1 - h1 * h2);
      state = step_propagator(h, dt) * state;
    }
    const double t = static_cast<double>(k + 1) * dt;
    const bool last = k + 1 == n_steps;
    bool halt = false;
    measure(t, last || (k + 1) % stride == 0);
    trace.steps = k + 1;
    if (stop) {
      const double p = pops[stop->watch];
      running_max = std::max(running_max, p);
      halt = running_max >= stop->min_peak && p < stop->drop_fraction * running_max;
    }
    if (halt) {
      if (!last && (k + 1) % stride != 0) {
        trace.times.push_back(t);
        trace.populations.push_back(pops);
      }
      break;
    }
  }
  trace.final_state = StateVector(algebra.space(), state);
  return trace;
}

std::vector<std::pair<TableState, TableState>> rabi_pairs() {
  return {{TableState::kA, TableState::kAdAB},
          {TableState::kAAdB, TableState::kAd},
          {TableState::kAAd, TableState::kAdB},
          {TableState::kAB, TableState::kAdA}};
}

std::vector<RabiRow> rabi_transition_check(const RabiConfig& config) {
  if (!(config.omega > 0.0)) throw ContractError("Rabi check needs omega > 0");
  if (config.drive_pair != 23 && config.drive_pair != 31) {
    throw ContractError("drive pair must be 23 or 31");
  }
  const ModeAlgebra algebra = build_fock_space(3);
  const auto table = eigenstate_table(algebra, config.phi);

  PulseSchedule schedule;
  schedule.static_couplings.add(1, 2, config.omega);
  const int i = config.drive_pair == 23 ? 2 : 3;
  const int j = config.drive_pair == 23 ? 3 : 1;
  schedule.drives.push_back({i, j, config.drive_amplitude, 2.0 * config.omega, 0.0});
  schedule.duration = config.max_duration / config.omega;
  schedule.steps_per_drive_period = config.steps_per_drive_period;
  schedule.sample_interval = config.sample_interval;

  std::vector<Observable> observables;
  for (const auto& entry : table) observables.push_back({entry.label, entry.state});

  std::vector<RabiRow> rows;
  for (const auto& [ground, excited] : rabi_pairs()) {
    const auto& g = find_state(table, ground);
    std::size_t watch = 0;
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k].id == excited) watch = k;
    }
    EvolutionTrace trace =
        evolve_schedule(algebra, schedule, g.state, observables, PeakStop{watch, 0.5, 0.5});
    double leakage = 0.0;
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k].parity != g.parity) leakage = std::max(leakage, trace.peak_population[k]);
    }
    RabiRow row{ground,
                excited,
                trace.peak_population[watch],
                trace.peak_time[watch],
                leakage,
                trace.max_parity_drift,
                trace.max_norm_drift,
                std::move(trace)};
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mvq
