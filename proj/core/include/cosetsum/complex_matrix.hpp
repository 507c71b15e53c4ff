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

#ifndef COSETSUM_COMPLEX_MATRIX_HPP
#define COSETSUM_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cosetsum {

using Complex = std::complex<double>;

/// Dense complex matrix with row-major storage.
///
/// Holds scattering matrices, coset matrices and their submatrices.
/// Element access is 0-based; optical channel numbers in configuration
/// types and the CLI are 1-based and converted at those boundaries.
/// Constructors reject non-finite entries but impose no unitarity
/// requirement; use unitarity_defect() to measure deviation from U(n).
class ComplexMatrix {
  public:
    /// Zero matrix. Both dimensions must be at least 1.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Matrix from row-major entries; data.size() must equal rows*cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Bounds-checked access.
    Complex &at(std::size_t r, std::size_t c);
    const Complex &at(std::size_t r, std::size_t c) const;

    std::span<const Complex> data() const { return data_; }

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix &rhs) const;

    bool operator==(const ComplexMatrix &rhs) const = default;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

/// Largest |a(r,c) - b(r,c)|; matrices must have equal shapes.
double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entry magnitude.
double max_abs(const ComplexMatrix &m);

/// Max-norm of M†M - I. Zero exactly for unitary M; throws on non-square input.
double unitarity_defect(const ComplexMatrix &m);

}  // namespace cosetsum

#endif
