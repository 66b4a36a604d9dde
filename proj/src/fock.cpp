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

#include "mvq/fock.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "mvq/errors.hpp"

namespace mvq {

namespace {

// Inputs to fidelity() may carry a few ulps of drift from long evolutions.
constexpr double kFidelityNormTol = 1e-9;

void require_same_space(const FockSpace& a, const FockSpace& b, const char* what) {
  if (!(a == b)) {
    throw DimensionError(std::string(what) + ": operands live on different Fock spaces (" +
                         std::to_string(a.n_modes()) + " vs " + std::to_string(b.n_modes()) +
                         " modes)");
  }
}

}  // namespace

FockSpace::FockSpace(int n_modes) : n_modes_(n_modes) {
  if (n_modes < 1 || n_modes > kMaxModes) {
    throw SizeError("Fock space needs 1.." + std::to_string(kMaxModes) + " modes, got " +
                    std::to_string(n_modes));
  }
}

std::size_t FockSpace::index_of(const std::vector<int>& occupations) const {
  if (occupations.size() != static_cast<std::size_t>(n_modes_)) {
    throw DimensionError("occupation tuple length does not match mode count");
  }
  std::size_t index = 0;
  for (int n : occupations) {
    if (n != 0 && n != 1) throw ContractError("occupations must be 0 or 1");
    index = (index << 1) | static_cast<std::size_t>(n);
  }
  return index;
}

int FockSpace::occupation(std::size_t index, int mode) const {
  return static_cast<int>((index >> (n_modes_ - mode)) & 1U);
}

int FockSpace::particle_number(std::size_t index) const {
  return std::popcount(static_cast<std::uint64_t>(index));
}

Operator::Operator(FockSpace space, Matrix matrix) : space_(space), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(space_.dim());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionError("operator matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + ", space dimension is " +
                         std::to_string(d));
  }
}

Operator Operator::identity(FockSpace space) {
  const auto d = static_cast<Eigen::Index>(space.dim());
  return {space, Matrix::Identity(d, d)};
}

Operator Operator::zero(FockSpace space) {
  const auto d = static_cast<Eigen::Index>(space.dim());
  return {space, Matrix::Zero(d, d)};
}

Operator Operator::adjoint() const { return {space_, matrix_.adjoint()}; }

bool Operator::is_hermitian(double tol) const {
  return max_abs_diff(matrix_, matrix_.adjoint()) <= tol;
}

bool Operator::is_unitary(double tol) const {
  const Matrix product = matrix_ * matrix_.adjoint();
  return max_abs_diff(product, Matrix::Identity(product.rows(), product.cols())) <= tol;
}

Operator& Operator::operator+=(const Operator& other) {
  require_same_space(space_, other.space_, "operator +");
  matrix_ += other.matrix_;
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  require_same_space(space_, other.space_, "operator -");
  matrix_ -= other.matrix_;
  return *this;
}

Operator& Operator::operator*=(Complex scale) {
  matrix_ *= scale;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a.space_, b.space_, "operator product");
  return {a.space_, a.matrix_ * b.matrix_};
}

StateVector operator*(const Operator& a, const StateVector& psi) {
  require_same_space(a.space_, psi.space(), "operator application");
  return {a.space_, a.matrix_ * psi.amplitudes()};
}

StateVector::StateVector(FockSpace space, Vector amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != static_cast<Eigen::Index>(space_.dim())) {
    throw DimensionError("state has " + std::to_string(amplitudes_.size()) +
                         " amplitudes, space dimension is " + std::to_string(space_.dim()));
  }
  normalized_ = std::abs(amplitudes_.norm() - 1.0) <= 1e-12;
}

StateVector StateVector::basis(FockSpace space, std::size_t index) {
  if (index >= space.dim()) throw DimensionError("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return {space, std::move(v)};
}

StateVector StateVector::normalized() const {
  const double n = amplitudes_.norm();
  if (n == 0.0) throw ContractError("cannot normalize the zero vector");
  return {space_, amplitudes_ / n};
}

void ModeAlgebra::check_mode(int mode) const {
  if (mode < 1 || mode > space_.n_modes()) {
    throw ContractError("mode index " + std::to_string(mode) + " outside 1.." +
                        std::to_string(space_.n_modes()));
  }
}

Operator ModeAlgebra::annihilator(int mode) const {
  check_mode(mode);
  const auto d = space_.dim();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  const int shift = space_.n_modes() - mode;
  // Occupations of modes 1..mode-1 sit above bit `shift`.
  for (std::size_t s = 0; s < d; ++s) {
    if (((s >> shift) & 1U) == 0) continue;
    const int before = std::popcount(static_cast<std::uint64_t>(s >> (shift + 1)));
    const double sign = (before % 2 == 0) ? 1.0 : -1.0;
    const std::size_t target = s & ~(std::size_t{1} << shift);
    m(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(s)) = sign;
  }
  return {space_, std::move(m)};
}

Operator ModeAlgebra::creator(int mode) const { return annihilator(mode).adjoint(); }

Operator ModeAlgebra::majorana(int mode) const {
  Operator c = annihilator(mode);
  return c + c.adjoint();
}

ModeAlgebra build_fock_space(int n_vortices) { return ModeAlgebra(FockSpace(n_vortices)); }

Operator anticommutator(const Operator& a, const Operator& b) { return a * b + b * a; }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator parity_operator(const FockSpace& space) {
  Operator p = Operator::zero(space);
  Matrix m = p.matrix();
  for (std::size_t s = 0; s < space.dim(); ++s) {
    const auto i = static_cast<Eigen::Index>(s);
    m(i, i) = (space.particle_number(s) % 2 == 0) ? 1.0 : -1.0;
  }
  return {space, std::move(m)};
}

Complex inner(const StateVector& a, const StateVector& b) {
  require_same_space(a.space(), b.space(), "inner product");
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (std::abs(a.norm() - 1.0) > kFidelityNormTol || std::abs(b.norm() - 1.0) > kFidelityNormTol) {
    throw ContractError("fidelity requires normalized states");
  }
  return std::norm(inner(a, b));
}

Complex expectation(const Operator& op, const StateVector& psi) { return inner(psi, op * psi); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Operator& a, const Operator& b) {
  require_same_space(a.space(), b.space(), "max_abs_diff");
  return max_abs_diff(a.matrix(), b.matrix());
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace mvq
