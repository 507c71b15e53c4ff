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

#include "cosetsum/coset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cosetsum {

namespace {

constexpr double kNonUnitaryWarnThreshold = 1e-6;

// Entries at or below this magnitude are treated as already eliminated. Well
// under the 1e-11 zero-pattern contract, and it keeps matrices that are
// Hessenberg to rounding precision fixed points of the factorization (a
// rotation built from two ~1e-16 entries would have an arbitrary angle).
constexpr double kEliminationSkipTol = 1e-12;

// Rotation on the 0-based row pair (i, i+1) whose adjoint, applied from the
// left, zeroes entry (i, j) of m. The free phase is spent making the
// surviving entry (i+1, j) real and non-negative.
ModeRotation eliminate_entry(ComplexMatrix &m, std::size_t i, std::size_t j) {
    const Complex a = m(i, j);
    const Complex b = m(i + 1, j);
    if (std::abs(a) <= kEliminationSkipTol) {
        return ModeRotation{static_cast<int>(i) + 1, static_cast<int>(i) + 2, 0.0, 0.0, 0.0};
    }
    const double phase_a = std::arg(a);
    const double phase_b = std::arg(b);
    // The angles live on the double cover: shifting alpha or gamma by 2*pi
    // flips the sign of the whole block, so they are stored as derived, in
    // (-3*pi, 3*pi), rather than wrapped.
    ModeRotation rot{
        static_cast<int>(i) + 1,
        static_cast<int>(i) + 2,
        std::numbers::pi + phase_b - phase_a,
        2.0 * std::atan2(std::abs(a), std::abs(b)),
        phase_a + phase_b - std::numbers::pi,
    };
    const auto blk = rotation_block(rot);
    // Apply the adjoint block to rows i, i+1.
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Complex top = m(i, c);
        const Complex bot = m(i + 1, c);
        m(i, c) = std::conj(blk[0]) * top + std::conj(blk[2]) * bot;
        m(i + 1, c) = std::conj(blk[1]) * top + std::conj(blk[3]) * bot;
    }
    return rot;
}

std::size_t check_input(const ComplexMatrix &u, const char *who) {
    if (!u.is_square()) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    }
    if (u.rows() < 2) {
        throw std::invalid_argument(std::string(who) + ": need at least 2 modes");
    }
    return u.rows();
}

}  // namespace

const char *to_string(Side side) {
    return side == Side::kOutput ? "output" : "input";
}

CosetFactorization factor_output_coset(const ComplexMatrix &u, bool alternate_zero_row) {
    const std::size_t n = check_input(u, "factor_output_coset");

    CosetFactorization f{Side::kOutput, {}, u, static_cast<int>((n - 1) * (n - 1)) - 1};
    f.input_unitarity_defect = unitarity_defect(u);
    f.nonunitary_warning = f.input_unitarity_defect > kNonUnitaryWarnThreshold;

    // Columns n..3 descending, rows top-down within each column. Entry (i,j)
    // is cleared on the row pair (i, i+1) with i <= j-2 <= n-2, so no
    // rotation ever touches mode n, and each step preserves the zeros
    // already placed to its right and above.
    for (std::size_t j = n; j >= 3; --j) {
        for (std::size_t i = 1; i + 1 < j; ++i) {
            f.rotations.push_back(eliminate_entry(f.coset, i - 1, j - 1));
        }
    }

    if (alternate_zero_row && n >= 3) {
        // Move the structural zero of the last column from row 1 to row 2 by
        // re-splitting U = (R * S^-1) * (S * Ubar) with S = R_12(0, pi, 0).
        const ModeRotation swap{1, 2, 0.0, std::numbers::pi, 0.0};
        f.coset = embed_rotation(swap, n) * f.coset;
        f.rotations.push_back(inverse(swap));
    }

    f.reconstruction_error = max_abs_difference(compose(f.rotations, n) * f.coset, u);
    return f;
}

CosetFactorization factor_input_coset(const ComplexMatrix &u) {
    const std::size_t n = check_input(u, "factor_input_coset");

    // U^T = R * W with W upper Hessenberg gives U = W^T * R^T; W^T is lower
    // Hessenberg and R^T is again a product of two-mode rotations, taken in
    // reverse order with R(a, b, g)^T = R(g, -b, a).
    CosetFactorization out = factor_output_coset(u.transpose());

    CosetFactorization f{Side::kInput, {}, out.coset.transpose(),
                         out.removed_parameter_count};
    f.input_unitarity_defect = unitarity_defect(u);
    f.nonunitary_warning = f.input_unitarity_defect > kNonUnitaryWarnThreshold;
    f.rotations.reserve(out.rotations.size());
    for (auto it = out.rotations.rbegin(); it != out.rotations.rend(); ++it) {
        f.rotations.push_back(ModeRotation{it->mode_i, it->mode_j, it->gamma, -it->beta, it->alpha});
    }
    f.reconstruction_error = max_abs_difference(f.coset * compose(f.rotations, n), u);
    return f;
}

std::vector<ModeRotation> removed_elements(const CosetFactorization &f,
                                           std::span<const ModeRotation> netlist) {
    const std::size_t n = f.coset.rows();
    const ComplexMatrix original = f.side == Side::kOutput
                                       ? compose(f.rotations, n) * f.coset
                                       : f.coset * compose(f.rotations, n);
    const ComplexMatrix from_netlist = compose(netlist, n);
    const double mismatch = max_abs_difference(from_netlist, original);
    if (mismatch > 1e-8) {
        throw std::invalid_argument(
            "removed_elements: netlist does not compose to the factorized matrix "
            "(max deviation " +
            std::to_string(mismatch) + ")");
    }

    const auto subgroup_confined = [n](const ModeRotation &rot) {
        return static_cast<std::size_t>(rot.mode_j) <= n - 1;
    };

    std::vector<ModeRotation> removed;
    if (f.side == Side::kOutput) {
        // Output sums make the leftmost factor irrelevant; the first listed
        // netlist elements are the output-adjacent ones.
        for (const ModeRotation &rot : netlist) {
            if (!subgroup_confined(rot)) {
                break;
            }
            removed.push_back(rot);
        }
    } else {
        for (auto it = netlist.rbegin(); it != netlist.rend(); ++it) {
            if (!subgroup_confined(*it)) {
                break;
            }
            removed.push_back(*it);
        }
        std::reverse(removed.begin(), removed.end());
    }
    return removed;
}

}  // namespace cosetsum
