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

// Fermionic Fock space of vortex-local zero modes, the Jordan-Wigner mode
// operators on it, and the dense operator/state value types used by every
// other module.
//
// Basis convention: an occupation tuple (n_1, ..., n_k) maps to the index
// sum_i n_i 2^(k-i), so mode 1 is the most significant bit. The annihilator
// c_i carries the parity string prod_{j<i} (-1)^{n_j}. Majorana operators are
// gamma_i = c_i + c_i^dagger, which are real symmetric matrices.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace mvq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kMaxModes = 12;

/// The 2^n dimensional occupation-number space of n vortex modes.
class FockSpace {
 public:
  explicit FockSpace(int n_modes);

  int n_modes() const { return n_modes_; }
  std::size_t dim() const { return std::size_t{1} << n_modes_; }

  /// Basis index of an occupation tuple; `occupations[i]` is the occupation
  /// of mode i + 1.
  std::size_t index_of(const std::vector<int>& occupations) const;

  /// Occupation of `mode` (1-based) in basis state `index`.
  int occupation(std::size_t index, int mode) const;

  /// Total particle number of basis state `index`.
  int particle_number(std::size_t index) const;

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int n_modes_;
};

class StateVector;

/// Dense complex operator bound to a FockSpace.
class Operator {
 public:
  Operator(FockSpace space, Matrix matrix);

  static Operator identity(FockSpace space);
  static Operator zero(FockSpace space);

  const FockSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }

  Operator adjoint() const;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex scale);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, Complex s) { return a *= s; }
  friend Operator operator*(Complex s, Operator a) { return a *= s; }
  friend Operator operator*(double s, Operator a) { return a *= Complex(s); }
  friend Operator operator*(const Operator& a, const Operator& b);
  friend StateVector operator*(const Operator& a, const StateVector& psi);

 private:
  FockSpace space_;
  Matrix matrix_;
};

/// Amplitudes on a FockSpace. The normalized flag is derived from the
/// amplitudes at construction: it is set iff the norm is 1 within 1e-12.
class StateVector {
 public:
  StateVector(FockSpace space, Vector amplitudes);

  /// The occupation basis state with the given index.
  static StateVector basis(FockSpace space, std::size_t index);

  const FockSpace& space() const { return space_; }
  const Vector& amplitudes() const { return amplitudes_; }
  bool is_normalized() const { return normalized_; }
  double norm() const { return amplitudes_.norm(); }

  /// Copy scaled to unit norm; throws ContractError on a zero vector.
  StateVector normalized() const;

  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

 private:
  FockSpace space_;
  Vector amplitudes_;
  bool normalized_;
};

/// The mode and Majorana operators of a Fock space. Operators are built on
/// request so that large spaces do not hold every matrix at once.
class ModeAlgebra {
 public:
  explicit ModeAlgebra(FockSpace space) : space_(space) {}

  const FockSpace& space() const { return space_; }
  int n_modes() const { return space_.n_modes(); }

  /// c_i for 1 <= mode <= n.
  Operator annihilator(int mode) const;
  /// c_i^dagger.
  Operator creator(int mode) const;
  /// gamma_i = c_i + c_i^dagger.
  Operator majorana(int mode) const;

  /// The occupation vacuum |0...0).
  StateVector vacuum() const { return StateVector::basis(space_, 0); }

 private:
  void check_mode(int mode) const;
  FockSpace space_;
};

/// Builds the Fock space of `n_vortices` modes with its operator algebra.
/// Throws SizeError outside 1..kMaxModes.
ModeAlgebra build_fock_space(int n_vortices);

Operator anticommutator(const Operator& a, const Operator& b);
Operator commutator(const Operator& a, const Operator& b);

/// diag((-1)^N) in the occupation basis.
Operator parity_operator(const FockSpace& space);

/// <a|b>.
Complex inner(const StateVector& a, const StateVector& b);

/// |<a|b>|^2 for normalized states; throws ContractError otherwise.
double fidelity(const StateVector& a, const StateVector& b);

/// <psi|op|psi>.
Complex expectation(const Operator& op, const StateVector& psi);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const Operator& a, const Operator& b);
double max_abs(const Matrix& a);

}  // namespace mvq
