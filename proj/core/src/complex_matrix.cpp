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

#include "cosetsum/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cosetsum {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be at least 1x1, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
}

void check_finite(const std::vector<Complex> &data) {
    for (const Complex &z : data) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("ComplexMatrix: entries must be finite");
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
    check_dims(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    check_dims(rows, cols);
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(rows_ * cols_) +
                                    " entries, got " + std::to_string(data_.size()));
    }
    check_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

Complex &ComplexMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("ComplexMatrix::at: index (" + std::to_string(r) + "," +
                                std::to_string(c) + ") outside " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
    }
    return data_[r * cols_ + c];
}

const Complex &ComplexMatrix::at(std::size_t r, std::size_t c) const {
    return const_cast<ComplexMatrix *>(this)->at(r, c);
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("ComplexMatrix: product shape mismatch " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                                    std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_difference: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

double max_abs(const ComplexMatrix &m) {
    double worst = 0.0;
    for (const Complex &z : m.data()) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

double unitarity_defect(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("unitarity_defect: matrix must be square");
    }
    return max_abs_difference(m.adjoint() * m, ComplexMatrix::identity(m.rows()));
}

}  // namespace cosetsum
