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

#ifndef COSETSUM_MATRIX_FUNCTIONS_HPP
#define COSETSUM_MATRIX_FUNCTIONS_HPP

#include "cosetsum/complex_matrix.hpp"
#include "cosetsum/partitions.hpp"

namespace cosetsum {

/// Default tolerance for structural-zero tests. Coset factorization produces
/// its zeros only to working precision, so exact comparisons are useless.
inline constexpr double kHessenbergTol = 1e-10;

/// Relative comparison used throughout: |a-b| <= tol * max(1, |a|, |b|).
/// Permanents span many orders of magnitude, hence the max(1, .) floor.
bool approx_equal(Complex a, Complex b, double tol);

/// Permanent by the full permutation sum, sum_sigma prod_k M(sigma(k), k).
/// Reference oracle; guarded to n <= 9.
Complex permanent_naive(const ComplexMatrix &m);

/// Permanent by Ryser's inclusion-exclusion formula with Gray-code column
/// updates, O(2^{n-1} n) work in the subset loop. Subsets are visited in
/// canonical Gray order and accumulated sequentially, so the result is
/// reproducible bit for bit. Guarded to n <= 30.
Complex permanent_ryser(const ComplexMatrix &m);

/// Determinant by LU with partial pivoting, O(n^3).
Complex determinant(const ComplexMatrix &m);

/// True iff |M(i, i+k)| <= tol for all k >= 2.
bool is_upper_hessenberg(const ComplexMatrix &m, double tol = kHessenbergTol);

/// True iff |M(i+k, i)| <= tol for all k >= 2.
bool is_lower_hessenberg(const ComplexMatrix &m, double tol = kHessenbergTol);

/// Copy of M with the superdiagonal negated. An involution.
ComplexMatrix t_map(const ComplexMatrix &m);

/// Permanent of a Hessenberg matrix through the determinant identity
/// Per(M) = Det(t_map(M)), evaluated in O(n^3). Lower Hessenberg inputs are
/// transposed first (the permanent is transpose-invariant). Throws if the
/// matrix is not Hessenberg at the given tolerance.
Complex permanent_hessenberg(const ComplexMatrix &m, double tol = kHessenbergTol);

/// Character-weighted permutation sum
/// sum_sigma chi^lambda(sigma) prod_k M(sigma(k), k).
/// lambda = (n) gives the permanent, lambda = (1^n) the determinant.
/// Guarded to n <= 9; lambda must partition n.
Complex immanant(const ComplexMatrix &m, const Partition &lambda);

}  // namespace cosetsum

#endif
