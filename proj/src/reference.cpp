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

#include "mvq/reference.hpp"

#include <cmath>

namespace mvq::reference {

using namespace std::complex_literals;

Matrix4 m31_odd(double phi) {
  const Complex e = std::exp(1i * phi);
  const Complex ei = std::exp(-1i * phi);
  Matrix4 m;
  // clang-format off
  m <<  1.0,       -ei,  -ei, -ei * ei,
        e,          1.0, -1.0, ei,
        e,         -1.0,  1.0, ei,
       -e * e,     -e,   -e,   1.0;
  // clang-format on
  return 0.5 * m;
}

Matrix4 composite_gate(double eta, double phi) {
  const double c = std::cos(eta), s = std::sin(eta);
  const Complex e = std::exp(1i * phi);
  const Complex ei = std::exp(-1i * phi);
  Matrix4 m;
  // clang-format off
  m << c,            -1i * ei * s,  0.0,          0.0,
       -1i * e * s,   c,            0.0,          0.0,
       0.0,           0.0,          c,            1i * ei * s,
       0.0,           0.0,          1i * e * s,   c;
  // clang-format on
  return m;
}

Matrix2 hadamard() {
  Matrix2 h;
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

Vector table_amplitudes(TableState s, double phi) {
  // |n1 n2 n3) sits at index 4 n1 + 2 n2 + n3.
  constexpr int k000 = 0, k001 = 1, k010 = 2, k011 = 3, k100 = 4, k101 = 5, k110 = 6, k111 = 7;
  const Complex e = std::exp(1i * phi);
  const Complex ei = std::exp(-1i * phi);
  Vector v = Vector::Zero(8);
  switch (s) {
    case TableState::kA: v(k100) = ei; v(k010) = 1i * ei; break;
    case TableState::kAAdB: v(k001) = 1.0; v(k111) = -1i; break;
    case TableState::kAAd: v(k000) = 1.0; v(k110) = -1i; break;
    case TableState::kAB: v(k101) = ei; v(k011) = 1i * ei; break;
    case TableState::kAd: v(k100) = e; v(k010) = -1i * e; break;
    case TableState::kAdAB: v(k001) = 1.0; v(k111) = 1i; break;
    case TableState::kAdA: v(k000) = 1.0; v(k110) = 1i; break;
    case TableState::kAdB: v(k101) = e; v(k011) = -1i * e; break;
  }
  return v / std::sqrt(2.0);
}

}  // namespace mvq::reference
