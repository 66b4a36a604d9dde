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

// Vortex exchanges, the dynamical-phase dwell, and the one-qubit gate family
// built from exchange -> dwell -> inverse exchange.
//
// Two matrix conventions are used and kept apart by type:
//
//  * GateMatrix4 uses the operator-substitution (row) convention: row k holds
//    the expansion of the image of basis state k, R_kl = <e_l|U|e_k>. Steps
//    compose left to right in the order they are performed.
//  * Matrix2 / MGate act on logical amplitude columns, psi' = M psi, so a
//    sequence applied in order g1, g2, g3 is the product g3 g2 g1.

#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mvq/fock.hpp"
#include "mvq/hamiltonian.hpp"

namespace mvq {

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

enum class Orientation { kCcw, kCw };

Orientation flip(Orientation o);

struct BraidMove {
  int a;
  int b;
  Orientation orientation;
};

/// Ordered list of vortex exchanges; the first move is performed first.
struct BraidWord {
  std::vector<BraidMove> moves;

  /// Reversed order with every orientation flipped.
  BraidWord inverse() const;
};

/// Unitary exchanging vortices a and b. Counterclockwise maps
/// gamma_a -> gamma_b and gamma_b -> -gamma_a; clockwise is its inverse.
/// The exchange transports the whole vortex mode, so the occupation vacuum
/// is left invariant.
Operator braid_unitary(const ModeAlgebra& algebra, int a, int b, Orientation orientation);

/// Product of the move unitaries in performance order.
Operator braid_word_unitary(const ModeAlgebra& algebra, const BraidWord& word);

/// A 4x4 matrix in the row convention over four labeled basis states.
struct GateMatrix4 {
  std::array<std::string, 4> labels;
  Matrix4 m;

  /// This step followed by `next`.
  GateMatrix4 then(const GateMatrix4& next) const;
  GateMatrix4 inverse() const;
  bool is_unitary(double tol) const;
};

/// Row-convention matrix of `u` restricted to `basis`. Throws
/// ConsistencyError when the basis is not orthonormal within 1e-10 or when
/// `u` moves weight out of its span by more than 1e-10.
GateMatrix4 project_transformation(const Operator& u, const std::vector<LabeledState>& basis);

/// Odd sector, ordered (alpha, alpha^dag alpha beta, alpha alpha^dag beta,
/// alpha^dag); entries 0,1 and 2,3 are Rabi partners.
std::vector<LabeledState> odd_qubit_basis(const ModeAlgebra& algebra, double phi);
/// Even sector, ordered (alpha beta, alpha^dag alpha, alpha alpha^dag,
/// alpha^dag beta).
std::vector<LabeledState> even_qubit_basis(const ModeAlgebra& algebra, double phi);

/// Counterclockwise (3,1) exchange projected onto the odd basis.
GateMatrix4 m31_odd(const ModeAlgebra& algebra, double phi);
/// Same exchange projected onto the even basis.
GateMatrix4 m31_even(const ModeAlgebra& algebra, double phi);

/// diag(e^{-i eta}, e^{i eta}, e^{-i eta}, e^{i eta}).
GateMatrix4 dynamical_phase_matrix(double eta);

struct CompositeGate {
  GateMatrix4 matrix;
  Matrix2 upper;
  Matrix2 lower;
  double off_block_residual;
};

/// Exchange (3,1) ccw, dwell by eta, exchange (3,1) cw, over the odd
/// (or even) sector. Throws ConsistencyError if the off-diagonal 2x2 blocks
/// exceed 1e-10.
CompositeGate composite_gate(double eta, double phi);
CompositeGate composite_gate_even(double eta, double phi);

struct MGate {
  double eta;
  double phi;
  Matrix2 matrix;
};

/// [[cos eta, -i e^{-i phi} sin eta], [-i e^{i phi} sin eta, cos eta]].
MGate m_gate(double eta, double phi);

struct GateStep {
  double eta;
  double phi;
};

/// Product of the m_gate factors, first step applied first.
Matrix2 compose_sequence(const std::vector<GateStep>& steps);

/// |tr(a^dag b)|^2 / 4: 1 iff a and b agree up to global phase.
double gate_fidelity(const Matrix2& a, const Matrix2& b);

/// Euler factorization over the phi = 0 and phi = pi/2 axes, at most three
/// steps. Throws ContractError when `target` is not unitary within 1e-8.
std::vector<GateStep> decompose_su2(const Matrix2& target);

/// Dwell duration at J_12 = omega realizing m_z(eta) up to global sign.
double dwell_time(double eta, double omega);

/// Braid/dwell/braid schedule realizing composite_gate(eta, phi).
struct GateSchedule {
  BraidWord exchange;
  double dwell_j12;
  double dwell_duration;
  BraidWord unexchange;
};

GateSchedule gate_schedule(double eta, double omega);

/// Phase c with |c| = 1 minimizing ||a - c b||_F; 1 when tr(b^dag a) = 0.
Complex global_phase_between(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace mvq
