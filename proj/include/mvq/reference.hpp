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

// Closed-form target matrices and states written out entry by entry. These
// are the comparison side of the identity checks: nothing here is computed
// from the operator algebra.

#pragma once

#include "mvq/braiding.hpp"
#include "mvq/hamiltonian.hpp"

namespace mvq::reference {

/// Exchange matrix of the (3,1) ccw move in the odd basis.
Matrix4 m31_odd(double phi);

/// Block-diagonal exchange -> dwell -> inverse exchange result.
Matrix4 composite_gate(double eta, double phi);

Matrix2 hadamard();

/// Occupation-basis expansion of a theta = 0 eigenstate on three modes,
/// normalized; index = 4 n_1 + 2 n_2 + n_3.
Vector table_amplitudes(TableState s, double phi);

}  // namespace mvq::reference
