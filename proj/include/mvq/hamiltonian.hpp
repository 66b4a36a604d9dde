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

// Coupled-Majorana Hamiltonians H = sum i J_ij gamma_i gamma_j, their
// spherical parametrization for three vortices, the quasiparticle and
// zero-mode operators, and the closed-form eigenstates of the J_12 dominated
// regime.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mvq/fock.hpp"

namespace mvq {

/// One term i J gamma_i gamma_j; stored with i < j.
struct Coupling {
  int i;
  int j;
  double value;
};

/// Real antisymmetric coupling data {J_ij}. Terms are stored canonically
/// with i < j; `value(j, i)` returns -J_ij.
class CouplingSet {
 public:
  CouplingSet() = default;

  /// Adds i J gamma_i gamma_j. Accumulates onto an existing pair.
  CouplingSet& add(int i, int j, double value);

  double value(int i, int j) const;
  const std::vector<Coupling>& pairs() const { return pairs_; }
  int max_index() const;

 private:
  std::vector<Coupling> pairs_;
};

/// Spherical form of three-vortex couplings:
/// (J_23, J_31, J_12) = J (sin t cos p, sin t sin p, cos t).
struct SphericalCouplings {
  double J = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  /// Set when phi is undefined (J_23 = J_31 = 0) and was defaulted to 0.
  bool phi_degenerate = false;
};

struct AngleResult {
  double angle = 0.0;
  bool degenerate = false;
};

CouplingSet couplings_from_angles(double J, double theta, double phi);
SphericalCouplings angles_from_couplings(const CouplingSet& couplings);

/// atan2(J_31, J_23) in (-pi, pi]; (0, degenerate) when both vanish.
AngleResult phi_from_couplings(double J23, double J31);

Operator build_hamiltonian(const ModeAlgebra& algebra, const CouplingSet& couplings);

struct EnergyLevel {
  double energy;
  int degeneracy;
};

struct Spectrum {
  std::vector<double> eigenvalues;       // ascending
  std::vector<StateVector> eigenvectors;  // matching order
  std::vector<EnergyLevel> levels;        // grouped by gap tolerance
};

/// Dense Hermitian diagonalization. Eigenvalues closer than `group_tol`
/// are reported as one degenerate level.
Spectrum diagonalize(const Operator& hamiltonian, double group_tol = 1e-9);

struct QuasiparticleOps {
  Operator alpha;
  Operator alpha_dagger;
  Operator beta;
  double theta;
  double phi;
};

/// alpha, alpha^dagger and the zero mode beta for three vortices, built from
/// gamma_1..3. Throws ContractError on any other mode count.
QuasiparticleOps quasiparticle_ops(const ModeAlgebra& algebra, double theta, double phi);

/// The eight closed-form eigenstates in the regime J_12 >> J_23, J_31.
enum class TableState {
  kA,        // alpha|0)                     ground, odd
  kAAdB,     // alpha alpha^dag beta|0)      ground, odd
  kAAd,      // alpha alpha^dag|0)           ground, even
  kAB,       // alpha beta|0)                ground, even
  kAd,       // alpha^dag|0)                 excited, odd
  kAdAB,     // alpha^dag alpha beta|0)      excited, odd
  kAdA,      // alpha^dag alpha|0)           excited, even
  kAdB,      // alpha^dag beta|0)            excited, even
};

inline constexpr std::array<TableState, 8> kAllTableStates = {
    TableState::kA,  TableState::kAAdB, TableState::kAAd,  TableState::kAB,
    TableState::kAd, TableState::kAdAB, TableState::kAdA, TableState::kAdB};

std::string_view label(TableState s);

struct LabeledState {
  TableState id;
  std::string label;
  int energy_sign;  // -1 ground (-omega), +1 excited (+omega)
  int parity;       // +1 even, -1 odd
  StateVector state;
};

/// Product of quasiparticle operators that creates `s` from the vacuum
/// (theta = 0 forms, with the given phi).
Operator table_operator(const QuasiparticleOps& ops, TableState s);

/// The eight normalized eigenstates for theta = 0 and the given phi, in
/// kAllTableStates order.
std::vector<LabeledState> eigenstate_table(const ModeAlgebra& algebra, double phi);

const LabeledState& find_state(const std::vector<LabeledState>& table, TableState s);

}  // namespace mvq
