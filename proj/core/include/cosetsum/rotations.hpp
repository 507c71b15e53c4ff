// Copyright 2026 The cosetsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COSETSUM_ROTATIONS_HPP
#define COSETSUM_ROTATIONS_HPP

#include <array>
#include <span>
#include <vector>

#include "cosetsum/complex_matrix.hpp"

namespace cosetsum {

/// A two-mode SU(2) optical element acting on channels (mode_i, mode_j).
///
/// Channel numbers are 1-based with mode_i < mode_j. The embedded n x n
/// matrix is the identity outside those two channels; the 2x2 block is
///
///   [ e^{-i(alpha+gamma)/2} cos(beta/2)   -e^{-i(alpha-gamma)/2} sin(beta/2) ]
///   [ e^{-i(gamma-alpha)/2} sin(beta/2)    e^{+i(alpha+gamma)/2} cos(beta/2) ]
///
/// which is unitary with determinant 1 for every angle triple.
struct ModeRotation {
    int mode_i = 1;
    int mode_j = 2;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// The 2x2 block of a rotation, row-major: {b00, b01, b10, b11}.
std::array<Complex, 4> rotation_block(const ModeRotation &rot);

/// Inverse element on the same mode pair: R(alpha,beta,gamma)^{-1} = R(-gamma,-beta,-alpha).
ModeRotation inverse(const ModeRotation &rot);

/// Embeds a rotation into an n x n matrix. Requires 1 <= mode_i < mode_j <= n.
ComplexMatrix embed_rotation(const ModeRotation &rot, std::size_t n);

/// Product of embedded rotations, left to right as listed:
/// compose({r0, r1, ...}) = R(r0) * R(r1) * ...
///
/// With the convention "output = U * input", the first listed element is
/// adjacent to the outputs and the last listed element is adjacent to the
/// inputs. An empty sequence yields the identity.
ComplexMatrix compose(std::span<const ModeRotation> seq, std::size_t n);

}  // namespace cosetsum

#endif
