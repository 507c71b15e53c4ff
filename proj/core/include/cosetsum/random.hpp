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

#ifndef COSETSUM_RANDOM_HPP
#define COSETSUM_RANDOM_HPP

#include <cstdint>
#include <random>

#include "cosetsum/complex_matrix.hpp"

namespace cosetsum {

/// Deterministic stream of doubles and complex Gaussians backed by
/// std::mt19937_64. Uniforms and Box-Muller are constructed explicitly from
/// the raw 64-bit stream, so a fixed seed gives the same values on every
/// standard library.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard real Gaussian.
    double gaussian();

    /// Complex Gaussian with E|z|^2 = 1.
    Complex complex_gaussian();

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed n x n unitary, deterministic in the seed.
///
/// A complex Gaussian matrix is orthonormalized column by column; the
/// positive diagonal of the implicit R factor fixes the phases, which makes
/// the result Haar rather than merely unitary.
ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed);

/// Matrix with independent complex Gaussian entries.
ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Random upper Hessenberg matrix (Gaussian entries, zeros above the superdiagonal).
ComplexMatrix random_upper_hessenberg(std::size_t n, std::uint64_t seed);

}  // namespace cosetsum

#endif
