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

#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>

#include "cosetsum/complex_matrix.hpp"
#include "cosetsum/matrix_functions.hpp"
#include "cosetsum/random.hpp"
#include "cosetsum/rotations.hpp"

using namespace cosetsum;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ComplexMatrix enforces shape and finiteness") {
    CHECK_THROWS_AS(ComplexMatrix(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {Complex{1, 0}}), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{nan, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{0, std::numeric_limits<double>::infinity()}}),
                    std::invalid_argument);

    ComplexMatrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK_FALSE(m.is_square());
    CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m.at(0, 3), std::out_of_range);
}

TEST_CASE("matrix product and adjoint") {
    const ComplexMatrix a(2, 2, {Complex{0, 1}, Complex{1, 0}, Complex{2, 0}, Complex{0, -1}});
    const ComplexMatrix id = ComplexMatrix::identity(2);
    CHECK(max_abs_difference(a * id, a) == 0.0);
    CHECK(max_abs_difference(id * a, a) == 0.0);
    const ComplexMatrix aa = a.adjoint();
    CHECK(aa(0, 1) == Complex{2, 0});
    CHECK(aa(1, 0) == Complex{1, 0});
    CHECK(aa(0, 0) == Complex{0, -1});
    CHECK_THROWS_AS(a * ComplexMatrix(3, 2), std::invalid_argument);
}

TEST_CASE("embed_rotation: zero angles give the identity") {
    const ComplexMatrix r = embed_rotation(ModeRotation{1, 2, 0, 0, 0}, 3);
    CHECK(max_abs_difference(r, ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("embed_rotation: closed form at beta = pi and beta = pi/2") {
    // The 2x2 block at (0, pi, 0) is [[0, -1], [1, 0]]; its inverse
    // (0, -pi, 0) gives [[0, 1], [-1, 0]].
    const ComplexMatrix r = embed_rotation(ModeRotation{1, 2, 0, kPi, 0}, 3);
    CHECK(std::abs(r(0, 0)) < 1e-15);
    CHECK(std::abs(r(0, 1) - Complex{-1, 0}) < 1e-15);
    CHECK(std::abs(r(1, 0) - Complex{1, 0}) < 1e-15);
    CHECK(std::abs(r(1, 1)) < 1e-15);
    CHECK(r(2, 2) == Complex{1, 0});

    const ComplexMatrix rinv = embed_rotation(ModeRotation{1, 2, 0, -kPi, 0}, 3);
    CHECK(std::abs(rinv(0, 1) - Complex{1, 0}) < 1e-15);
    CHECK(std::abs(rinv(1, 0) - Complex{-1, 0}) < 1e-15);
    CHECK(max_abs_difference(r * rinv, ComplexMatrix::identity(3)) < 1e-15);

    const double c = std::cos(kPi / 4);
    const ComplexMatrix half = embed_rotation(ModeRotation{1, 2, 0, kPi / 2, 0}, 2);
    CHECK(std::abs(half(0, 0) - Complex{c, 0}) < 1e-15);
    CHECK(std::abs(half(0, 1) - Complex{-c, 0}) < 1e-15);
    CHECK(std::abs(half(1, 0) - Complex{c, 0}) < 1e-15);
    CHECK(std::abs(half(1, 1) - Complex{c, 0}) < 1e-15);
    CHECK(unitarity_defect(half) < 1e-14);
}

TEST_CASE("embed_rotation: unitary with determinant 1 for random angles") {
    RandomStream rng(11);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
        const int i = 1 + static_cast<int>(rng.uniform() * static_cast<double>(n - 1));
        const int j = i + 1 + static_cast<int>(rng.uniform() * static_cast<double>(n - static_cast<std::size_t>(i)));
        const ModeRotation rot{i, std::min<int>(j, static_cast<int>(n)),
                               rng.uniform(-6.0, 6.0), rng.uniform(-6.0, 6.0),
                               rng.uniform(-6.0, 6.0)};
        const ComplexMatrix r = embed_rotation(rot, n);
        CHECK(unitarity_defect(r) < 1e-14);
        CHECK(std::abs(determinant(r) - Complex{1, 0}) < 1e-13);
        // Identity outside the two active modes.
        for (std::size_t row = 0; row < n; ++row) {
            for (std::size_t col = 0; col < n; ++col) {
                const bool active = (row + 1 == static_cast<std::size_t>(rot.mode_i) ||
                                     row + 1 == static_cast<std::size_t>(rot.mode_j)) &&
                                    (col + 1 == static_cast<std::size_t>(rot.mode_i) ||
                                     col + 1 == static_cast<std::size_t>(rot.mode_j));
                if (!active) {
                    CHECK(r(row, col) == (row == col ? Complex{1, 0} : Complex{0, 0}));
                }
            }
        }
    }
}

TEST_CASE("embed_rotation rejects bad mode pairs") {
    CHECK_THROWS_AS(embed_rotation(ModeRotation{2, 2, 0, 0, 0}, 3), std::out_of_range);
    CHECK_THROWS_AS(embed_rotation(ModeRotation{0, 1, 0, 0, 0}, 3), std::out_of_range);
    CHECK_THROWS_AS(embed_rotation(ModeRotation{1, 4, 0, 0, 0}, 3), std::out_of_range);
    CHECK_THROWS_AS(embed_rotation(ModeRotation{2, 1, 0, 0, 0}, 3), std::out_of_range);
}

TEST_CASE("compose: empty sequence, inverse pairs, ordering") {
    CHECK(max_abs_difference(compose({}, 4), ComplexMatrix::identity(4)) == 0.0);

    const std::vector<ModeRotation> pair = {ModeRotation{1, 2, 0, kPi, 0},
                                            ModeRotation{1, 2, 0, -kPi, 0}};
    CHECK(max_abs_difference(compose(pair, 3), ComplexMatrix::identity(3)) < 1e-15);

    RandomStream rng(12);
    const std::vector<ModeRotation> seq = {
        ModeRotation{1, 2, rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)},
        ModeRotation{2, 3, rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)},
        ModeRotation{1, 2, rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)},
    };
    const ComplexMatrix u = compose(seq, 3);
    CHECK(unitarity_defect(u) < 1e-13);

    // compose applies left to right as written.
    const ComplexMatrix manual =
        embed_rotation(seq[0], 3) * embed_rotation(seq[1], 3) * embed_rotation(seq[2], 3);
    CHECK(max_abs_difference(u, manual) < 1e-14);
}

TEST_CASE("compose against the reversed-inverted sequence") {
    RandomStream rng(13);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 3);
        std::vector<ModeRotation> seq;
        for (int k = 0; k < 6; ++k) {
            const int i = 1 + static_cast<int>(rng.uniform() * static_cast<double>(n - 1));
            seq.push_back(ModeRotation{i, i + 1, rng.uniform(-3, 3), rng.uniform(-3, 3),
                                       rng.uniform(-3, 3)});
        }
        std::vector<ModeRotation> undo;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            undo.push_back(inverse(*it));
        }
        CHECK(max_abs_difference(compose(seq, n) * compose(undo, n),
                                 ComplexMatrix::identity(n)) < 1e-12);
    }
}

TEST_CASE("haar_unitary: determinism, unitarity, edge cases") {
    const ComplexMatrix a = haar_unitary(3, 42);
    const ComplexMatrix b = haar_unitary(3, 42);
    CHECK(a == b);  // bit-identical
    CHECK(haar_unitary(3, 43) != a);

    CHECK(unitarity_defect(haar_unitary(5, 7)) < 1e-12);

    const ComplexMatrix u1 = haar_unitary(1, 5);
    CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-14);

    CHECK_THROWS_AS(haar_unitary(0, 1), std::invalid_argument);
}

TEST_CASE("haar_unitary: |U11|^2 has the Haar marginal mean 1/2 for n=2") {
    double total = 0.0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const ComplexMatrix u = haar_unitary(2, 10000 + s);
        total += std::norm(u(0, 0));
    }
    const double mean = total / 1000.0;
    CHECK(mean > 0.45);
    CHECK(mean < 0.55);
}

TEST_CASE("unitarity_defect") {
    CHECK(unitarity_defect(ComplexMatrix::identity(4)) == 0.0);

    ComplexMatrix twice = ComplexMatrix::identity(2);
    twice(0, 0) = 2.0;
    twice(1, 1) = 2.0;
    CHECK(unitarity_defect(twice) == 3.0);

    CHECK(unitarity_defect(haar_unitary(4, 3)) < 1e-12);
    CHECK_THROWS_AS(unitarity_defect(ComplexMatrix(2, 3)), std::invalid_argument);
}
