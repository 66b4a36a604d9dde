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

#include "mvq/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "mvq/errors.hpp"

namespace mvq {

using namespace std::complex_literals;

CouplingSet& CouplingSet::add(int i, int j, double value) {
  if (i == j) throw ContractError("coupling needs two distinct Majorana indices");
  if (i < 1 || j < 1) throw ContractError("Majorana indices are 1-based");
  if (!std::isfinite(value)) throw ContractError("coupling value must be finite");
  if (i > j) {
    std::swap(i, j);
    value = -value;
  }
  for (auto& p : pairs_) {
    if (p.i == i && p.j == j) {
      p.value += value;
      return *this;
    }
  }
  pairs_.push_back({i, j, value});
  return *this;
}

double CouplingSet::value(int i, int j) const {
  const double sign = i < j ? 1.0 : -1.0;
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  for (const auto& p : pairs_) {
    if (p.i == lo && p.j == hi) return sign * p.value;
  }
  return 0.0;
}

int CouplingSet::max_index() const {
  int m = 0;
  for (const auto& p : pairs_) m = std::max(m, p.j);
  return m;
}

CouplingSet couplings_from_angles(double J, double theta, double phi) {
  if (!(J >= 0.0)) throw ContractError("J must be non-negative");
  CouplingSet set;
  set.add(2, 3, J * std::sin(theta) * std::cos(phi));
  set.add(3, 1, J * std::sin(theta) * std::sin(phi));
  set.add(1, 2, J * std::cos(theta));
  return set;
}

AngleResult phi_from_couplings(double J23, double J31) {
  if (J23 == 0.0 && J31 == 0.0) return {0.0, true};
  return {std::atan2(J31, J23), false};
}

SphericalCouplings angles_from_couplings(const CouplingSet& couplings) {
  if (couplings.max_index() > 3) {
    throw ContractError("spherical parametrization is defined for three vortices");
  }
  const double j23 = couplings.value(2, 3);
  const double j31 = couplings.value(3, 1);
  const double j12 = couplings.value(1, 2);
  SphericalCouplings out;
  out.J = std::sqrt(j23 * j23 + j31 * j31 + j12 * j12);
  if (out.J == 0.0) {
    out.phi_degenerate = true;
    return out;
  }
  out.theta = std::acos(std::clamp(j12 / out.J, -1.0, 1.0));
  const AngleResult phi = phi_from_couplings(j23, j31);
  out.phi = phi.angle < 0.0 ? phi.angle + 2.0 * std::numbers::pi : phi.angle;
  out.phi_degenerate = phi.degenerate;
  return out;
}

Operator build_hamiltonian(const ModeAlgebra& algebra, const CouplingSet& couplings) {
  if (couplings.max_index() > algebra.n_modes()) {
    throw ContractError("coupling refers to Majorana " + std::to_string(couplings.max_index()) +
                        " on a " + std::to_string(algebra.n_modes()) + "-mode space");
  }
  Operator h = Operator::zero(algebra.space());
  for (const auto& p : couplings.pairs()) {
    if (p.value == 0.0) continue;
    h += (1i * p.value) * (algebra.majorana(p.i) * algebra.majorana(p.j));
  }
  return h;
}

Spectrum diagonalize(const Operator& hamiltonian, double group_tol) {
  if (!hamiltonian.is_hermitian(1e-10)) {
    throw ContractError("diagonalize expects a Hermitian operator");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian.matrix());
  if (solver.info() != Eigen::Success) throw ConsistencyError("eigensolver did not converge");

  Spectrum out;
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    out.eigenvalues.push_back(values(k));
    out.eigenvectors.emplace_back(hamiltonian.space(), vectors.col(k));
  }
  for (double e : out.eigenvalues) {
    if (!out.levels.empty() && std::abs(e - out.levels.back().energy) <= group_tol) {
      auto& lvl = out.levels.back();
      // running mean keeps the level centre stable as members are added
      lvl.energy += (e - lvl.energy) / (lvl.degeneracy + 1);
      ++lvl.degeneracy;
    } else {
      out.levels.push_back({e, 1});
    }
  }
  return out;
}

QuasiparticleOps quasiparticle_ops(const ModeAlgebra& algebra, double theta, double phi) {
  if (algebra.n_modes() != 3) {
    throw ContractError("quasiparticle operators are defined on the three-vortex space");
  }
  const Operator g1 = algebra.majorana(1);
  const Operator g2 = algebra.majorana(2);
  const Operator g3 = algebra.majorana(3);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);

  Operator alpha_dagger = 0.5 * ((Complex(ct * cp, sp) * g1) + (Complex(ct * sp, -cp) * g2) +
                                 (Complex(-st, 0.0) * g3));
  Operator alpha = 0.5 * ((Complex(ct * cp, -sp) * g1) + (Complex(ct * sp, cp) * g2) +
                          (Complex(-st, 0.0) * g3));
  Operator beta = (st * cp) * g1 + (st * sp) * g2 + ct * g3;
  return {std::move(alpha), std::move(alpha_dagger), std::move(beta), theta, phi};
}

std::string_view label(TableState s) {
  switch (s) {
    case TableState::kA: return "a";
    case TableState::kAAdB: return "a_ad_b";
    case TableState::kAAd: return "a_ad";
    case TableState::kAB: return "a_b";
    case TableState::kAd: return "ad";
    case TableState::kAdAB: return "ad_a_b";
    case TableState::kAdA: return "ad_a";
    case TableState::kAdB: return "ad_b";
  }
  return "?";
}

Operator table_operator(const QuasiparticleOps& ops, TableState s) {
  const Operator& a = ops.alpha;
  const Operator& ad = ops.alpha_dagger;
  const Operator& b = ops.beta;
  switch (s) {
    case TableState::kA: return a;
    case TableState::kAAdB: return a * ad * b;
    case TableState::kAAd: return a * ad;
    case TableState::kAB: return a * b;
    case TableState::kAd: return ad;
    case TableState::kAdAB: return ad * a * b;
    case TableState::kAdA: return ad * a;
    case TableState::kAdB: return ad * b;
  }
  throw ContractError("unknown table state");
}

namespace {

int energy_sign_of(TableState s) {
  switch (s) {
    case TableState::kA:
    case TableState::kAAdB:
    case TableState::kAAd:
    case TableState::kAB:
      return -1;
    default:
      return +1;
  }
}

int parity_of(TableState s) {
  switch (s) {
    case TableState::kA:
    case TableState::kAAdB:
    case TableState::kAd:
    case TableState::kAdAB:
      return -1;
    default:
      return +1;
  }
}

}  // namespace

std::vector<LabeledState> eigenstate_table(const ModeAlgebra& algebra, double phi) {
  const QuasiparticleOps ops = quasiparticle_ops(algebra, 0.0, phi);
  const StateVector vac = algebra.vacuum();
  std::vector<LabeledState> table;
  table.reserve(kAllTableStates.size());
  for (TableState s : kAllTableStates) {
    // Each raw product has norm 1/sqrt(2); normalized() rescales it.
    StateVector psi = (table_operator(ops, s) * vac).normalized();
    table.push_back({s, std::string(label(s)), energy_sign_of(s), parity_of(s), std::move(psi)});
  }
  return table;
}

const LabeledState& find_state(const std::vector<LabeledState>& table, TableState s) {
  for (const auto& entry : table) {
    if (entry.id == s) return entry;
  }
  throw ContractError("state not present in table");
}

}  // namespace mvq
