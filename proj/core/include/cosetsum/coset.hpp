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

#ifndef COSETSUM_COSET_HPP
#define COSETSUM_COSET_HPP

#include <span>
#include <vector>

#include "cosetsum/complex_matrix.hpp"
#include "cosetsum/rotations.hpp"

namespace cosetsum {

enum class Side {
    kOutput,  // U = compose(rotations) * coset, coset upper Hessenberg
    kInput,   // U = coset * compose(rotations), coset lower Hessenberg
};

const char *to_string(Side side);

/// Result of stripping a subgroup transformation on modes 1..n-1 off a
/// scattering matrix. The rotations never touch mode n, and
/// removed_parameter_count = (n-1)^2 - 1 is the dimension of the removed
/// SU(n-1) factor.
struct CosetFactorization {
    Side side = Side::kOutput;
    std::vector<ModeRotation> rotations;
    ComplexMatrix coset;
    int removed_parameter_count = 0;
    double reconstruction_error = 0.0;   // max-norm against the input matrix
    double input_unitarity_defect = 0.0;
    bool nonunitary_warning = false;     // input defect above 1e-6
};

/// Factors U = R * Ubar with R a product of two-mode rotations confined to
/// modes 1..n-1 and Ubar upper Hessenberg (Ubar(i, i+k) = 0 for k >= 2).
///
/// Eliminations walk columns n down to 3 and rows top-down within each
/// column; entry (i, j) is cleared by a rotation on the mode pair (i, i+1),
/// with phases chosen so the surviving entry (i+1, j) becomes real and
/// non-negative. Entries already below 1e-12 in magnitude get identity
/// rotations, so matrices that are Hessenberg to rounding precision come
/// back unchanged. The elimination order is fixed, making the rotation list
/// deterministic.
///
/// Non-unitary inputs are factorized all the same (the eliminations are
/// defined for any matrix); they are only flagged, since the removed factor
/// is unitary by construction either way.
///
/// With alternate_zero_row (meaningful for n = 3), the coset is
/// left-multiplied by the embedded R_12(0, pi, 0) and the compensating
/// rotation appended, which moves the structural zero from row 1 to row 2 of
/// the last column.
CosetFactorization factor_output_coset(const ComplexMatrix &u, bool alternate_zero_row = false);

/// Factors U = Utilde * R with R confined to modes 1..n-1 and Utilde lower
/// Hessenberg (zeros at (k+m, k), m >= 2; for n = 3 this is the single zero
/// at (3,1)). Implemented by factoring the transpose on the output side and
/// transposing back; R(a,b,g)^T = R(g,-b,a) keeps the rotation list in the
/// same parametrization.
CosetFactorization factor_input_coset(const ComplexMatrix &u);

/// Given a netlist of optical elements composing (within 1e-8) to the
/// factorized matrix, returns the elements that the corresponding sum rule
/// lets you remove: the leading run of elements confined to modes 1..n-1
/// for an output-side factorization, the trailing run for an input-side one.
/// The first listed netlist element is output-adjacent (see compose()), so
/// output sums strip the left factor and input sums the right factor.
/// Throws if the netlist does not reproduce the factorized matrix.
std::vector<ModeRotation> removed_elements(const CosetFactorization &f,
                                           std::span<const ModeRotation> netlist);

}  // namespace cosetsum

#endif
