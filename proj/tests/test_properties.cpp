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

// Seeded randomized invariants across modules.

#include <doctest.h>

#include "mvq/braiding.hpp"
#include "mvq/hamiltonian.hpp"
#include "mvq/twoqubit.hpp"
#include "oracles.hpp"

using namespace mvq;
using oracle::kI;
using oracle::kPi;

namespace {

BraidWord random_word(std::mt19937_64& rng, int modes, int length) {
  std::uniform_int_distribution<int> mode(1, modes), coin(0, 1);
  BraidWord w;
  for (int k = 0; k < length; ++k) {
    const int a = mode(rng);
    int b = mode(rng);
    while (b == a) b = mode(rng);
    w.moves.push_back({a, b, coin(rng) ? Orientation::kCcw : Orientation::kCw});
  }
  return w;
}

}  // namespace

TEST_CASE("random braid words are parity-preserving Clifford unitaries") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 6);
  for (int modes : {3, 4}) {
    const ModeAlgebra alg = build_fock_space(modes);
    const oracle::Mat parity = parity_operator(alg.space()).matrix();
    const auto id = oracle::identity(modes);
    for (int trial = 0; trial < 25; ++trial) {
      const BraidWord w = random_word(rng, modes, len(rng));
      const oracle::Mat u = braid_word_unitary(alg, w).matrix();
      CHECK(oracle::max_abs(u * u.adjoint() - id) < 1e-12);
      CHECK(oracle::max_abs(u * parity - parity * u) < 1e-12);
      CHECK(oracle::max_abs(braid_word_unitary(alg, w.inverse()).matrix() * u - id) < 1e-12);
      for (int k = 1; k <= modes; ++k) {
        // Conjugation sends each gamma to a signed gamma.
        const oracle::Mat image = u * oracle::majorana(modes, k) * u.adjoint();
        int hits = 0;
        for (int l = 1; l <= modes; ++l) {
          const oracle::Mat g = oracle::majorana(modes, l);
          if (oracle::max_abs(image - g) < 1e-12 || oracle::max_abs(image + g) < 1e-12) ++hits;
        }
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("random couplings square to J^2 and are traceless") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> j(-2.0, 2.0);
  const ModeAlgebra alg = build_fock_space(3);
  for (int trial = 0; trial < 40; ++trial) {
    CouplingSet c;
    const double j12 = j(rng), j23 = j(rng), j31 = j(rng);
    c.add(1, 2, j12).add(2, 3, j23).add(3, 1, j31);
    const oracle::Mat h = build_hamiltonian(alg, c).matrix();
    const double jj = j12 * j12 + j23 * j23 + j31 * j31;
    CHECK(oracle::max_abs(h * h - jj * oracle::identity(3)) < 1e-12);
    CHECK(std::abs(h.trace()) < 1e-12);
  }
}

TEST_CASE("M gates are unitary, invert by negating eta and compose additively") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> a(-2 * kPi, 2 * kPi);
  for (int trial = 0; trial < 50; ++trial) {
    const double eta = a(rng), phi = a(rng), eta2 = a(rng);
    const Matrix2 m = m_gate(eta, phi).matrix;
    CHECK(oracle::max_abs(m * m.adjoint() - oracle::Mat2::Identity()) < 1e-14);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-14);
    CHECK(oracle::max_abs(m_gate(-eta, phi).matrix * m - oracle::Mat2::Identity()) < 1e-14);
    CHECK(oracle::max_abs(m_gate(eta2, phi).matrix * m - m_gate(eta + eta2, phi).matrix) <
          1e-13);
    CHECK(oracle::max_abs(m - oracle::printed_m(eta, phi)) < 1e-14);
  }
}

TEST_CASE("Haar targets reconstruct through composite gates") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const oracle::Mat2 u = oracle::haar_su2(rng);
    const auto steps = decompose_su2(u);
    CHECK(steps.size() <= 3);
    Matrix2 product = Matrix2::Identity();
    for (const auto& s : steps) product = composite_gate(s.eta, s.phi).upper * product;
    CHECK(gate_fidelity(product, u) >= 1.0 - 1e-9);
  }
}

TEST_CASE("random logical gates act as a tensor factor") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  std::normal_distribution<double> g(0.0, 1.0);
  const TwoQubitSystem s = build_two_qubit(1.0, 1.0, 0.02);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Vector4cd c;
    for (int k = 0; k < 4; ++k) c(k) = {g(rng), g(rng)};
    c.normalize();
    oracle::Vec psi = oracle::Vec::Zero(16);
    for (int k = 0; k < 4; ++k) psi += c(k) * s.logical[k].amplitudes();
    const StateVector state(s.algebra.space(), psi);
    const MGate gate = m_gate(a(rng), a(rng));
    const oracle::Mat2 id = oracle::Mat2::Identity();

    const Eigen::Vector4cd one =
        logical_coordinates(s, apply_logical_gate(s, 1, gate, state));
    const Eigen::Vector4cd two =
        logical_coordinates(s, apply_logical_gate(s, 2, gate, state));
    const Eigen::Matrix4cd g1 = oracle::kron(gate.matrix, id);
    const Eigen::Matrix4cd g2 = oracle::kron(id, gate.matrix);
    CHECK((one - g1 * c).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((two - g2 * c).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(logical_leakage(s, apply_logical_gate(s, 2, gate, state)) < 1e-12);
  }
}
