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

#include <doctest.h>

#include "mvq/braiding.hpp"
#include "mvq/dynamics.hpp"
#include "mvq/errors.hpp"
#include "oracles.hpp"

using namespace mvq;
using oracle::kI;
using oracle::kPi;

namespace {

// exp(pi/4 (g_b g_a + gt_b gt_a)): the exchange carrying both Majoranas of
// each vortex mode, built by matrix exponential.
oracle::Mat oracle_exchange(int n, int a, int b) {
  const oracle::Mat gen =
      oracle::majorana(n, b) * oracle::majorana(n, a) +
      oracle::majorana_tilde(n, b) * oracle::majorana_tilde(n, a);
  return oracle::expm((kPi / 4) * gen);
}

Matrix conj(const Operator& u, const Matrix& g) { return u.matrix() * g * u.matrix().adjoint(); }

}  // namespace

TEST_CASE("exchange unitary") {
  const ModeAlgebra alg = build_fock_space(3);
  CHECK_THROWS_AS(braid_unitary(alg, 2, 2, Orientation::kCcw), ContractError);
  const Operator u = braid_unitary(alg, 3, 1, Orientation::kCcw);
  CHECK(u.is_unitary(1e-12));
  CHECK(max_abs_diff(u.matrix(), oracle_exchange(3, 3, 1)) < 1e-12);
  CHECK(max_abs_diff(conj(u, oracle::majorana(3, 3)), oracle::majorana(3, 1)) < 1e-12);
  CHECK(max_abs_diff(conj(u, oracle::majorana(3, 1)), -oracle::majorana(3, 3)) < 1e-12);
  CHECK(max_abs_diff(conj(u, oracle::majorana(3, 2)), oracle::majorana(3, 2)) < 1e-12);
  CHECK(max_abs((u * alg.vacuum()).amplitudes() - oracle::vacuum(3)) < 1e-15);

  const Operator twice = u * u;
  CHECK(max_abs_diff(conj(twice, oracle::majorana(3, 3)), -oracle::majorana(3, 3)) < 1e-12);

  const Operator cw = braid_unitary(alg, 3, 1, Orientation::kCw);
  CHECK(max_abs_diff(cw, u.adjoint()) < 1e-15);
  CHECK(flip(Orientation::kCcw) == Orientation::kCw);
}

TEST_CASE("braid word and its inverse cancel") {
  const ModeAlgebra alg = build_fock_space(4);
  BraidWord w;
  w.moves = {{1, 2, Orientation::kCcw}, {3, 1, Orientation::kCw}, {4, 2, Orientation::kCcw}};
  const Operator u = braid_word_unitary(alg, w);
  const Operator v = braid_word_unitary(alg, w.inverse());
  CHECK(max_abs_diff((v * u).matrix(), Operator::identity(alg.space()).matrix()) < 1e-12);
  // Performance order: the first move acts first.
  const Operator manual = braid_unitary(alg, 4, 2, Orientation::kCcw) *
                          braid_unitary(alg, 3, 1, Orientation::kCw) *
                          braid_unitary(alg, 1, 2, Orientation::kCcw);
  CHECK(max_abs_diff(u, manual) < 1e-14);
}

TEST_CASE("projected exchange equals the printed matrix") {
  const ModeAlgebra alg = build_fock_space(3);
  for (double phi : {0.0, kPi / 6, kPi / 4, 1.0, -2.2}) {
    const GateMatrix4 m = m31_odd(alg, phi);
    const oracle::Mat4 printed = oracle::printed_m31(phi);
    const oracle::C phase = oracle::align_phase(m.m, printed);
    CHECK(std::abs(phase - 1.0) < 1e-12);
    CHECK(max_abs(m.m - printed) < 1e-10);
    CHECK(m.is_unitary(1e-10));
  }
  const GateMatrix4 m0 = m31_odd(alg, 0.0);
  for (int c = 0; c < 4; ++c) CHECK(std::abs(m0.m(0, c) - (c == 0 ? 0.5 : -0.5)) < 1e-12);
  // (1,4) entry at phi = pi/4 is -e^{-i pi/2}/2 = i/2.
  CHECK(std::abs(m31_odd(alg, kPi / 4).m(0, 3) - 0.5 * kI) < 1e-12);
}

TEST_CASE("printed matrices compose to the printed gate") {
  // Row convention: performance order reads left to right.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int k = 0; k < 10; ++k) {
    const double eta = u(rng), phi = u(rng);
    const oracle::Mat4 m31 = oracle::printed_m31(phi);
    const oracle::Mat4 product = m31 * oracle::printed_mz(eta) * m31.inverse();
    CHECK(max_abs(product - oracle::printed_gate(eta, phi)) < 1e-12);
  }
}

TEST_CASE("even sector") {
  const ModeAlgebra alg = build_fock_space(3);
  const GateMatrix4 m = m31_even(alg, 0.4);
  CHECK(m.is_unitary(1e-10));
  const CompositeGate g = composite_gate_even(0.3, 0.4);
  CHECK(g.off_block_residual < 1e-10);
  CHECK(max_abs(g.matrix.m - oracle::printed_gate(0.3, 0.4)) < 1e-10);
}

TEST_CASE("dynamical phase matrix") {
  CHECK(max_abs(dynamical_phase_matrix(0.0).m - oracle::Mat4::Identity()) == 0.0);
  oracle::Mat4 d = oracle::Mat4::Zero();
  d.diagonal() << -kI, kI, -kI, kI;
  CHECK(max_abs(dynamical_phase_matrix(kPi / 2).m - d) < 1e-15);
}

TEST_CASE("a dwell at J12 produces the dynamical phase matrix") {
  const ModeAlgebra alg = build_fock_space(3);
  const double omega = 1.3;
  CouplingSet c;
  c.add(1, 2, omega);
  const Operator h = build_hamiltonian(alg, c);
  for (double eta : {0.0, 0.4, -1.1, 2.5}) {
    const double t = dwell_time(eta, omega);
    CHECK(t >= 0.0);
    CHECK(t < kPi / omega);
    const Operator u(alg.space(), oracle::expm(-kI * t * h.matrix()));
    const GateMatrix4 m = project_transformation(u, odd_qubit_basis(alg, 0.2));
    const oracle::Mat4 expect = dynamical_phase_matrix(eta).m;
    const oracle::C phase = oracle::align_phase(m.m, expect);
    CHECK(std::abs(std::abs(phase.real()) - 1.0) < 1e-12);  // +/-1
    CHECK(max_abs(m.m - phase * expect) < 1e-10);
  }
  CHECK_THROWS_AS(dwell_time(0.1, 0.0), ContractError);
}

TEST_CASE("composite gate against the printed form") {
  CHECK(max_abs(composite_gate(0.0, 1.0).matrix.m - oracle::Mat4::Identity()) < 1e-12);
  const CompositeGate x = composite_gate(kPi / 2, 0.0);
  oracle::Mat2 minus_i_x;
  minus_i_x << 0.0, -kI, -kI, 0.0;
  CHECK(max_abs(x.upper - minus_i_x) < 1e-12);

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int k = 0; k < 20; ++k) {
    const double eta = u(rng), phi = u(rng);
    const CompositeGate g = composite_gate(eta, phi);
    CHECK(max_abs(g.matrix.m - oracle::printed_gate(eta, phi)) < 1e-10);
    CHECK(g.off_block_residual < 1e-10);
    CHECK(max_abs(g.upper - oracle::printed_m(eta, phi)) < 1e-12);
  }
}

TEST_CASE("braid, dwell, unbraid as one physical unitary") {
  const ModeAlgebra alg = build_fock_space(3);
  const double omega = 1.0, eta = 0.7, phi = 0.35;
  const GateSchedule s = gate_schedule(eta, omega);
  REQUIRE(s.exchange.moves.size() == 1);
  CHECK(s.exchange.moves[0].a == 3);
  CHECK(s.exchange.moves[0].b == 1);
  CHECK(s.exchange.moves[0].orientation == Orientation::kCcw);
  CHECK(s.unexchange.moves[0].orientation == Orientation::kCw);
  CouplingSet c;
  c.add(1, 2, s.dwell_j12);
  const Operator dwell(alg.space(), oracle::expm(-kI * s.dwell_duration *
                                                 build_hamiltonian(alg, c).matrix()));
  const Operator total = braid_word_unitary(alg, s.unexchange) * dwell *
                         braid_word_unitary(alg, s.exchange);
  const GateMatrix4 m = project_transformation(total, odd_qubit_basis(alg, phi));
  const oracle::Mat4 expect = oracle::printed_gate(eta, phi);
  const oracle::C phase = oracle::align_phase(m.m, expect);
  CHECK(max_abs(m.m - phase * expect) < 1e-10);
}

TEST_CASE("M gate") {
  CHECK(max_abs(m_gate(0.0, 0.6).matrix - oracle::Mat2::Identity()) == 0.0);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int k = 0; k < 20; ++k) {
    const double eta = u(rng), phi = u(rng);
    const MGate m = m_gate(eta, phi);
    CHECK(max_abs(m.matrix - oracle::printed_m(eta, phi)) < 1e-15);
    const oracle::Mat gen = std::cos(phi) * oracle::pauli_x() + std::sin(phi) * oracle::pauli_y();
    CHECK(max_abs(m.matrix - oracle::expm(-kI * eta * gen)) < 1e-12);
    CHECK(max_abs(m.matrix * m_gate(-eta, phi).matrix - oracle::Mat2::Identity()) < 1e-12);
  }
}

TEST_CASE("Hadamard from two M gates") {
  const oracle::Mat2 product = oracle::printed_m(kPi / 4, -kPi / 2) * oracle::printed_m(kPi / 2, 0);
  CHECK(oracle::gate_overlap(product, oracle::hadamard()) > 1.0 - 1e-12);
  const Matrix2 seq = compose_sequence({{kPi / 2, 0.0}, {kPi / 4, -kPi / 2}});
  CHECK(max_abs(seq - product) < 1e-15);
  CHECK(gate_fidelity(seq, oracle::hadamard()) > 1.0 - 1e-12);
}

TEST_CASE("SU(2) synthesis") {
  CHECK(decompose_su2(oracle::Mat2::Identity()).empty());
  CHECK(decompose_su2(std::exp(kI * 0.4) * oracle::Mat2::Identity()).empty());

  const auto h = decompose_su2(oracle::hadamard());
  CHECK(h.size() <= 3);
  CHECK(gate_fidelity(compose_sequence(h), oracle::hadamard()) > 1.0 - 1e-9);

  std::mt19937_64 rng(1234);
  for (int k = 0; k < 100; ++k) {
    const oracle::Mat2 target = std::exp(kI * double(k)) * oracle::haar_su2(rng);
    const auto steps = decompose_su2(target);
    CHECK(steps.size() <= 3);
    oracle::Mat2 rebuilt = oracle::Mat2::Identity();
    for (const auto& s : steps) {
      CHECK((s.phi == 0.0 || s.phi == kPi / 2));
      rebuilt = oracle::printed_m(s.eta, s.phi) * rebuilt;
    }
    CHECK(oracle::gate_overlap(rebuilt, target) > 1.0 - 1e-9);
  }

  oracle::Mat2 bad;
  bad << 1.0, 0.0, 0.0, 2.0;
  CHECK_THROWS_AS(decompose_su2(bad), ContractError);
}

TEST_CASE("projection rejects a non-orthonormal basis") {
  const ModeAlgebra alg = build_fock_space(3);
  auto basis = odd_qubit_basis(alg, 0.0);
  basis[1] = basis[0];
  CHECK_THROWS_AS(project_transformation(Operator::identity(alg.space()), basis),
                  ConsistencyError);
  // A single Majorana flips parity and leaves the odd sector.
  CHECK_THROWS_AS(project_transformation(alg.majorana(3), odd_qubit_basis(alg, 0.0)),
                  ConsistencyError);
}

TEST_CASE("global phase alignment") {
  const oracle::Mat2 a = oracle::hadamard();
  const oracle::C c = std::exp(kI * 1.9);
  CHECK(std::abs(global_phase_between(c * a, a) - c) < 1e-15);
  CHECK(global_phase_between(oracle::Mat2::Zero(), a) == oracle::C(1.0));
}
