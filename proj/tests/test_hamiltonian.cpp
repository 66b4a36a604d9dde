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

#include "mvq/errors.hpp"
#include "mvq/hamiltonian.hpp"
#include "oracles.hpp"

using namespace mvq;
using oracle::kI;
using oracle::kPi;

namespace {

oracle::Mat printed_alpha(double theta, double phi) {
  const double ct = std::cos(theta), st = std::sin(theta);
  return 0.5 * ((ct * std::cos(phi) - kI * std::sin(phi)) * oracle::majorana(3, 1) +
                (ct * std::sin(phi) + kI * std::cos(phi)) * oracle::majorana(3, 2) -
                st * oracle::majorana(3, 3));
}

oracle::Mat printed_beta(double theta, double phi) {
  return std::sin(theta) * std::cos(phi) * oracle::majorana(3, 1) +
         std::sin(theta) * std::sin(phi) * oracle::majorana(3, 2) +
         std::cos(theta) * oracle::majorana(3, 3);
}

oracle::Mat oracle_h(double j23, double j31, double j12) {
  using oracle::majorana;
  return kI * (j12 * majorana(3, 1) * majorana(3, 2) + j23 * majorana(3, 2) * majorana(3, 3) +
               j31 * majorana(3, 3) * majorana(3, 1));
}

}  // namespace

TEST_CASE("spherical couplings") {
  CouplingSet c = couplings_from_angles(1.0, 0.0, 2.3);
  CHECK(c.value(2, 3) == doctest::Approx(0.0));
  CHECK(c.value(3, 1) == doctest::Approx(0.0));
  CHECK(c.value(1, 2) == doctest::Approx(1.0));

  c = couplings_from_angles(1.0, kPi / 2, 0.0);
  CHECK(c.value(2, 3) == doctest::Approx(1.0));
  CHECK(std::abs(c.value(3, 1)) < 1e-15);
  CHECK(std::abs(c.value(1, 2)) < 1e-15);

  c = couplings_from_angles(2.0, kPi / 3, kPi / 4);
  CHECK(c.value(2, 3) == doctest::Approx(std::sqrt(6.0) / 2).epsilon(1e-14));
  CHECK(c.value(3, 1) == doctest::Approx(std::sqrt(6.0) / 2).epsilon(1e-14));
  CHECK(c.value(1, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.value(1, 3) == doctest::Approx(-std::sqrt(6.0) / 2).epsilon(1e-14));

  CHECK_THROWS_AS(couplings_from_angles(-1.0, 0.1, 0.1), ContractError);
}

TEST_CASE("coupling set accumulates and stays antisymmetric") {
  CouplingSet c;
  c.add(1, 2, 0.5).add(2, 1, 0.25);
  CHECK(c.value(1, 2) == doctest::Approx(0.25));
  CHECK(c.value(2, 1) == doctest::Approx(-0.25));
  CHECK(c.max_index() == 2);
}

TEST_CASE("phi from couplings") {
  CHECK(phi_from_couplings(1.0, 0.0).angle == doctest::Approx(0.0));
  CHECK(phi_from_couplings(1.0, 1.0).angle == doctest::Approx(kPi / 4));
  const AngleResult d = phi_from_couplings(0.0, 0.0);
  CHECK(d.angle == 0.0);
  CHECK(d.degenerate);
  CHECK_FALSE(phi_from_couplings(1.0, 1.0).degenerate);
}

TEST_CASE("angles round trip") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> j(0.1, 3.0), th(0.05, kPi - 0.05), ph(0.0, 2 * kPi);
  for (int k = 0; k < 30; ++k) {
    const double J = j(rng), t = th(rng), p = ph(rng);
    const SphericalCouplings s = angles_from_couplings(couplings_from_angles(J, t, p));
    CHECK(s.J == doctest::Approx(J).epsilon(1e-12));
    CHECK(s.theta == doctest::Approx(t).epsilon(1e-12));
    CHECK(s.phi == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("Hamiltonian matches the Kronecker oracle") {
  const ModeAlgebra alg = build_fock_space(3);
  CouplingSet c;
  c.add(1, 2, 0.7).add(2, 3, -0.4).add(3, 1, 1.3);
  const Operator h = build_hamiltonian(alg, c);
  CHECK(h.is_hermitian(1e-14));
  CHECK(max_abs_diff(h.matrix(), oracle_h(-0.4, 1.3, 0.7)) < 1e-14);
  CHECK(max_abs(build_hamiltonian(alg, CouplingSet{}).matrix()) == 0.0);
  CouplingSet bad;
  bad.add(1, 4, 1.0);
  CHECK_THROWS(build_hamiltonian(alg, bad));
}

TEST_CASE("J12 alone gives two fourfold levels") {
  const ModeAlgebra alg = build_fock_space(3);
  CouplingSet c;
  c.add(1, 2, 0.8);
  const Spectrum s = diagonalize(build_hamiltonian(alg, c));
  REQUIRE(s.levels.size() == 2);
  CHECK(s.levels[0].energy == doctest::Approx(-0.8));
  CHECK(s.levels[0].degeneracy == 4);
  CHECK(s.levels[1].energy == doctest::Approx(0.8));
  CHECK(s.levels[1].degeneracy == 4);
}

TEST_CASE("generic couplings: spectrum, zero mode and quasiparticle form") {
  const ModeAlgebra alg = build_fock_space(3);
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> j(0.1, 2.0), th(0.0, kPi), ph(0.0, 2 * kPi);
  for (int k = 0; k < 50; ++k) {
    const double J = j(rng), t = th(rng), p = ph(rng);
    const Operator h = build_hamiltonian(alg, couplings_from_angles(J, t, p));
    // Oracle eigenvalues from the Kronecker construction.
    const oracle::Mat ho =
        oracle_h(J * std::sin(t) * std::cos(p), J * std::sin(t) * std::sin(p), J * std::cos(t));
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(ho);
    const Spectrum s = diagonalize(h);
    for (int e = 0; e < 8; ++e) {
      CHECK(std::abs(s.eigenvalues[e] - (e < 4 ? -J : J)) < 1e-10);
      CHECK(std::abs(es.eigenvalues()(e) - (e < 4 ? -J : J)) < 1e-10);
    }

    const QuasiparticleOps ops = quasiparticle_ops(alg, t, p);
    CHECK(max_abs_diff(ops.alpha.matrix(), printed_alpha(t, p)) < 1e-14);
    CHECK(max_abs_diff(ops.beta.matrix(), printed_beta(t, p)) < 1e-14);
    CHECK(max_abs_diff(ops.alpha_dagger.matrix(), ops.alpha.adjoint().matrix()) == 0.0);
    CHECK(max_abs(commutator(h, ops.beta).matrix()) < 1e-12);
    CHECK(max_abs(anticommutator(ops.alpha, ops.beta).matrix()) < 1e-12);
    CHECK(max_abs(anticommutator(ops.alpha_dagger, ops.beta).matrix()) < 1e-12);
    const Operator model =
        J * (2.0 * (ops.alpha_dagger * ops.alpha) - Operator::identity(alg.space()));
    CHECK(max_abs_diff(h, model) < 1e-12);
  }
}

TEST_CASE("theta = 0 operators take the isolated-vortex form") {
  const ModeAlgebra alg = build_fock_space(3);
  const double phi = 0.9;
  const QuasiparticleOps ops = quasiparticle_ops(alg, 0.0, phi);
  const oracle::Mat expect =
      std::exp(-kI * phi) / 2.0 * (oracle::majorana(3, 1) + kI * oracle::majorana(3, 2));
  CHECK(max_abs_diff(ops.alpha.matrix(), expect) < 1e-15);
  CHECK(max_abs_diff(ops.beta.matrix(), oracle::majorana(3, 3)) < 1e-15);
  CHECK_THROWS_AS(quasiparticle_ops(build_fock_space(4), 0.0, 0.0), ContractError);
}

TEST_CASE("eigenstate table reproduces the printed expansions") {
  const ModeAlgebra alg = build_fock_space(3);
  const Operator parity = parity_operator(alg.space());
  for (double phi : {0.0, kPi / 6, kPi / 4, 1.0, 4.0}) {
    const auto table = eigenstate_table(alg, phi);
    const auto printed = oracle::printed_table(phi);
    REQUIRE(table.size() == 8);
    CouplingSet c;
    c.add(1, 2, 1.0);
    const Operator h = build_hamiltonian(alg, c);
    for (std::size_t k = 0; k < 8; ++k) {
      CAPTURE(printed[k].name);
      CHECK(table[k].label == printed[k].name);
      CHECK(max_abs(table[k].state.amplitudes() - printed[k].amplitudes) < 1e-10);
      CHECK(table[k].parity == printed[k].parity);
      CHECK(table[k].energy_sign == printed[k].energy_sign);
      CHECK(max_abs((parity * table[k].state).amplitudes() -
                    double(printed[k].parity) * table[k].state.amplitudes()) < 1e-12);
      // Eigenstate of the J12-only Hamiltonian at energy -/+ 1.
      CHECK(max_abs((h * table[k].state).amplitudes() -
                    double(printed[k].energy_sign) * table[k].state.amplitudes()) < 1e-12);
      for (std::size_t l = 0; l < 8; ++l) {
        const double expect = k == l ? 1.0 : 0.0;
        CHECK(std::abs(std::abs(inner(table[k].state, table[l].state)) - expect) < 1e-12);
      }
    }
    CHECK(&find_state(table, TableState::kAdB) == &table[7]);
  }
}
