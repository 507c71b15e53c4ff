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

#include "cosetsum/rotations.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cosetsum {

namespace {

void check_rotation(const ModeRotation &rot, std::size_t n) {
    if (rot.mode_i < 1 || rot.mode_j <= rot.mode_i ||
        static_cast<std::size_t>(rot.mode_j) > n) {
        throw std::out_of_range("ModeRotation: modes (" + std::to_string(rot.mode_i) + "," +
                                std::to_string(rot.mode_j) + ") invalid for n=" +
                                std::to_string(n) + " (need 1 <= i < j <= n)");
    }
    if (!std::isfinite(rot.alpha) || !std::isfinite(rot.beta) || !std::isfinite(rot.gamma)) {
        throw std::invalid_argument("ModeRotation: angles must be finite");
    }
}

}  // namespace

std::array<Complex, 4> rotation_block(const ModeRotation &rot) {
    const double c = std::cos(rot.beta / 2.0);
    const double s = std::sin(rot.beta / 2.0);
    const Complex i{0.0, 1.0};
    return {
        std::exp(-i * ((rot.alpha + rot.gamma) / 2.0)) * c,
        -std::exp(-i * ((rot.alpha - rot.gamma) / 2.0)) * s,
        std::exp(-i * ((rot.gamma - rot.alpha) / 2.0)) * s,
        std::exp(i * ((rot.alpha + rot.gamma) / 2.0)) * c,
    };
}

ModeRotation inverse(const ModeRotation &rot) {
    return ModeRotation{rot.mode_i, rot.mode_j, -rot.gamma, -rot.beta, -rot.alpha};
}

ComplexMatrix embed_rotation(const ModeRotation &rot, std::size_t n) {
    check_rotation(rot, n);
    ComplexMatrix m = ComplexMatrix::identity(n);
    const auto b = rotation_block(rot);
    const std::size_t i = static_cast<std::size_t>(rot.mode_i) - 1;
    const std::size_t j = static_cast<std::size_t>(rot.mode_j) - 1;
    m(i, i) = b[0];
    m(i, j) = b[1];
    m(j, i) = b[2];
    m(j, j) = b[3];
    return m;
}

ComplexMatrix compose(std::span<const ModeRotation> seq, std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("compose: n must be at least 1");
    }
    ComplexMatrix m = ComplexMatrix::identity(n);
    // Right-multiplying by each embedded rotation in turn touches only two
    // columns, so the product is built in O(len * n) instead of full matmuls.
    for (const ModeRotation &rot : seq) {
        check_rotation(rot, n);
        const auto b = rotation_block(rot);
        const std::size_t i = static_cast<std::size_t>(rot.mode_i) - 1;
        const std::size_t j = static_cast<std::size_t>(rot.mode_j) - 1;
        for (std::size_t r = 0; r < n; ++r) {
            const Complex mi = m(r, i);
            const Complex mj = m(r, j);
            m(r, i) = mi * b[0] + mj * b[2];
            m(r, j) = mi * b[1] + mj * b[3];
        }
    }
    return m;
}

}  // namespace cosetsum
