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

#include "cosetsum/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cosetsum {

double RandomStream::uniform() {
    // Top 53 bits of the engine output, mapped to [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double RandomStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 in (0, 1] keeps the log finite.
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

Complex RandomStream::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex{re, im} / std::sqrt(2.0);
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    RandomStream rng(seed);
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rng.complex_gaussian();
        }
    }
    return m;
}

ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("haar_unitary: n must be at least 1");
    }
    ComplexMatrix g = gaussian_matrix(n, n, seed);

    // Modified Gram-Schmidt with one re-orthogonalization pass. The implicit
    // R factor has a positive diagonal, which is exactly the phase fixing
    // that turns "some unitary from QR" into a Haar sample.
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj{0.0, 0.0};
                for (std::size_t r = 0; r < n; ++r) {
                    proj += std::conj(g(r, k)) * g(r, j);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    g(r, j) -= proj * g(r, k);
                }
            }
        }
        double norm_sq = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            norm_sq += std::norm(g(r, j));
        }
        const double norm = std::sqrt(norm_sq);
        for (std::size_t r = 0; r < n; ++r) {
            g(r, j) /= norm;
        }
    }
    return g;
}

ComplexMatrix random_upper_hessenberg(std::size_t n, std::uint64_t seed) {
    ComplexMatrix m = gaussian_matrix(n, n, seed);
    for (std::size_t r = 0; r + 2 < n; ++r) {
        for (std::size_t c = r + 2; c < n; ++c) {
            m(r, c) = 0.0;
        }
    }
    return m;
}

}  // namespace cosetsum
