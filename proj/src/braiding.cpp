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

#include "mvq/braiding.hpp"

#include <cmath>
#include <numbers>

#include "mvq/errors.hpp"

namespace mvq {

using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBasisTol = 1e-10;
constexpr double kBlockTol = 1e-10;
constexpr double kAngleDropTol = 1e-12;

// Second Majorana of a vortex mode, i(c^dag - c). Used only to transport the
// full mode during an exchange.
Operator partner_majorana(const ModeAlgebra& algebra, int mode) {
  const Operator c = algebra.annihilator(mode);
  return 1i * (c.adjoint() - c);
}

// Wraps an angle into (-pi/2, pi/2]; m_gate(eta + pi) = -m_gate(eta).
double wrap_half_turn(double eta) {
  double w = std::remainder(eta, kPi);
  if (w <= -kPi / 2) w += kPi;
  return w;
}

std::vector<LabeledState> pick(const std::vector<LabeledState>& table,
                               std::initializer_list<TableState> order) {
  std::vector<LabeledState> out;
  for (TableState s : order) out.push_back(find_state(table, s));
  return out;
}

CompositeGate build_composite(const GateMatrix4& exchange, double eta) {
  const GateMatrix4 total = exchange.then(dynamical_phase_matrix(eta)).then(exchange.inverse());
  CompositeGate out{total, total.m.topLeftCorner<2, 2>(), total.m.bottomRightCorner<2, 2>(), 0.0};
  out.off_block_residual = std::max(max_abs(total.m.topRightCorner<2, 2>()),
                                    max_abs(total.m.bottomLeftCorner<2, 2>()));
  if (out.off_block_residual > kBlockTol) {
    throw ConsistencyError("composite gate mixes the two qubit pairs (residual " +
                           std::to_string(out.off_block_residual) + ")");
  }
  return out;
}

}  // namespace

Orientation flip(Orientation o) {
  return o == Orientation::kCcw ? Orientation::kCw : Orientation::kCcw;
}

BraidWord BraidWord::inverse() const {
  BraidWord inv;
  inv.moves.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    inv.moves.push_back({it->a, it->b, flip(it->orientation)});
  }
  return inv;
}

Operator braid_unitary(const ModeAlgebra& algebra, int a, int b, Orientation orientation) {
  if (a == b) throw ContractError("a vortex cannot be exchanged with itself");
  // exp((pi/4) G) = (1 + G)/sqrt(2) for G^2 = -1; the two generators commute.
  const Operator one = Operator::identity(algebra.space());
  const Operator g = algebra.majorana(b) * algebra.majorana(a);
  const Operator g_partner = partner_majorana(algebra, b) * partner_majorana(algebra, a);
  Operator u = 0.5 * ((one + g) * (one + g_partner));
  return orientation == Orientation::kCcw ? u : u.adjoint();
}

Operator braid_word_unitary(const ModeAlgebra& algebra, const BraidWord& word) {
  Operator u = Operator::identity(algebra.space());
  for (const auto& move : word.moves) {
    u = braid_unitary(algebra, move.a, move.b, move.orientation) * u;
  }
  return u;
}

GateMatrix4 GateMatrix4::then(const GateMatrix4& next) const { return {labels, m * next.m}; }

GateMatrix4 GateMatrix4::inverse() const { return {labels, m.inverse()}; }

bool GateMatrix4::is_unitary(double tol) const {
  return max_abs_diff(m * m.adjoint(), Matrix4::Identity()) <= tol;
}

GateMatrix4 project_transformation(const Operator& u, const std::vector<LabeledState>& basis) {
  if (basis.size() != 4) throw ContractError("projection needs exactly four basis states");
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t l = 0; l < 4; ++l) {
      const Complex expected = k == l ? 1.0 : 0.0;
      if (std::abs(inner(basis[k].state, basis[l].state) - expected) > kBasisTol) {
        throw ConsistencyError("projection basis is not orthonormal");
      }
    }
  }
  GateMatrix4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.labels[k] = basis[k].label;
    const StateVector image = u * basis[k].state;
    Vector residual = image.amplitudes();
    for (std::size_t l = 0; l < 4; ++l) {
      const Complex r = inner(basis[l].state, image);
      out.m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = r;
      residual -= r * basis[l].state.amplitudes();
    }
    const double defect = residual.norm();
    if (defect > kBasisTol) {
      throw ConsistencyError("transformation leaves the projection subspace (defect " +
                             std::to_string(defect) + ")");
    }
  }
  return out;
}

std::vector<LabeledState> odd_qubit_basis(const ModeAlgebra& algebra, double phi) {
  return pick(eigenstate_table(algebra, phi),
              {TableState::kA, TableState::kAdAB, TableState::kAAdB, TableState::kAd});
}

std::vector<LabeledState> even_qubit_basis(const ModeAlgebra& algebra, double phi) {
  return pick(eigenstate_table(algebra, phi),
              {TableState::kAB, TableState::kAdA, TableState::kAAd, TableState::kAdB});
}

GateMatrix4 m31_odd(const ModeAlgebra& algebra, double phi) {
  return project_transformation(braid_unitary(algebra, 3, 1, Orientation::kCcw),
                                odd_qubit_basis(algebra, phi));
}

GateMatrix4 m31_even(const ModeAlgebra& algebra, double phi) {
  return project_transformation(braid_unitary(algebra, 3, 1, Orientation::kCcw),
                                even_qubit_basis(algebra, phi));
}

GateMatrix4 dynamical_phase_matrix(double eta) {
  GateMatrix4 out;
  out.labels = {"ground", "excited", "ground", "excited"};
  const Complex down = std::exp(-1i * eta);
  const Complex up = std::exp(1i * eta);
  out.m = Matrix4::Zero();
  out.m.diagonal() << down, up, down, up;
  return out;
}

CompositeGate composite_gate(double eta, double phi) {
  const ModeAlgebra algebra = build_fock_space(3);
  return build_composite(m31_odd(algebra, phi), eta);
}

CompositeGate composite_gate_even(double eta, double phi) {
  const ModeAlgebra algebra = build_fock_space(3);
  return build_composite(m31_even(algebra, phi), eta);
}

MGate m_gate(double eta, double phi) {
  const double c = std::cos(eta), s = std::sin(eta);
  Matrix2 m;
  m << c, -1i * std::exp(-1i * phi) * s, -1i * std::exp(1i * phi) * s, c;
  return {eta, phi, m};
}

Matrix2 compose_sequence(const std::vector<GateStep>& steps) {
  Matrix2 total = Matrix2::Identity();
  for (const auto& step : steps) total = m_gate(step.eta, step.phi).matrix * total;
  return total;
}

double gate_fidelity(const Matrix2& a, const Matrix2& b) {
  return std::norm((a.adjoint() * b).trace()) / 4.0;
}

std::vector<GateStep> decompose_su2(const Matrix2& target) {
  if (!target.allFinite() || max_abs_diff(target * target.adjoint(), Matrix2::Identity()) > 1e-8) {
    throw ContractError("decompose_su2 expects a unitary 2x2 matrix");
  }
  const Matrix2 su = target / std::sqrt(target.determinant());

  // Conjugating by the Hadamard turns X rotations into Z rotations and
  // Y rotations into inverse Y rotations, so a ZYZ split of h su h gives
  // su = Rx(a) Ry(b) Rx(c).
  Matrix2 h;
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  const Matrix2 zyz = h * su * h;

  const double r00 = std::abs(zyz(0, 0));
  const double r10 = std::abs(zyz(1, 0));
  const double tilt = 2.0 * std::atan2(r10, r00);
  double a = 0.0, c = 0.0;
  if (r10 <= kAngleDropTol) {
    a = -2.0 * std::arg(zyz(0, 0));
  } else if (r00 <= kAngleDropTol) {
    a = 2.0 * std::arg(zyz(1, 0));
  } else {
    const double sum = -2.0 * std::arg(zyz(0, 0));
    const double diff = 2.0 * std::arg(zyz(1, 0));
    a = 0.5 * (sum + diff);
    c = 0.5 * (sum - diff);
  }
  const double b = -tilt;

  // Rx(t) = m_gate(t/2, 0), Ry(t) = m_gate(t/2, pi/2); Rx(c) acts first.
  std::vector<GateStep> steps;
  for (GateStep step : {GateStep{c / 2, 0.0}, GateStep{b / 2, kPi / 2}, GateStep{a / 2, 0.0}}) {
    step.eta = wrap_half_turn(step.eta);
    if (std::abs(std::sin(step.eta)) > kAngleDropTol) steps.push_back(step);
  }
  return steps;
}

double dwell_time(double eta, double omega) {
  if (!(omega > 0.0)) throw ContractError("dwell needs a positive splitting omega");
  double t = std::fmod(-eta, kPi);
  if (t < 0.0) t += kPi;
  return t / omega;
}

GateSchedule gate_schedule(double eta, double omega) {
  GateSchedule s;
  s.exchange.moves = {{3, 1, Orientation::kCcw}};
  s.dwell_j12 = omega;
  s.dwell_duration = dwell_time(eta, omega);
  s.unexchange = s.exchange.inverse();
  return s;
}

Complex global_phase_between(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix shapes differ");
  const Complex overlap = (b.adjoint() * a).trace();
  if (std::abs(overlap) == 0.0) return 1.0;
  return overlap / std::abs(overlap);
}

}  // namespace mvq
