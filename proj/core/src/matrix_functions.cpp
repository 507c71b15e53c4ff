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

#include "cosetsum/matrix_functions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cosetsum/characters.hpp"

namespace cosetsum {

namespace {

std::size_t require_square(const ComplexMatrix &m, const char *who) {
    if (!m.is_square()) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square");
    }
    return m.rows();
}

}  // namespace

bool approx_equal(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

Complex permanent_naive(const ComplexMatrix &m) {
    const std::size_t n = require_square(m, "permanent_naive");
    if (n > 9) {
        throw std::invalid_argument("permanent_naive: n = " + std::to_string(n) +
                                    " exceeds the factorial-sum guard (9)");
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total{0.0, 0.0};
    do {
        Complex term{1.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            term *= m(static_cast<std::size_t>(perm[k]), k);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Complex permanent_ryser(const ComplexMatrix &m) {
    const std::size_t n = require_square(m, "permanent_ryser");
    if (n > 30) {
        throw std::invalid_argument("permanent_ryser: n = " + std::to_string(n) +
                                    " exceeds the subset-sum guard (30)");
    }
    // Per(A) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} A(i,j).
    // Gray-code order changes one column per step, so the row sums update in
    // O(n) and each subset costs O(n) overall.
    std::vector<Complex> row_sums(n, Complex{0.0, 0.0});
    Complex total{0.0, 0.0};
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    int popcount = 0;
    for (std::uint64_t k = 1; k < limit; ++k) {
        const int bit = std::countr_zero(k);
        const std::uint64_t mask = std::uint64_t{1} << bit;
        gray ^= mask;
        if (gray & mask) {
            ++popcount;
            for (std::size_t r = 0; r < n; ++r) {
                row_sums[r] += m(r, static_cast<std::size_t>(bit));
            }
        } else {
            --popcount;
            for (std::size_t r = 0; r < n; ++r) {
                row_sums[r] -= m(r, static_cast<std::size_t>(bit));
            }
        }
        Complex term{1.0, 0.0};
        for (std::size_t r = 0; r < n; ++r) {
            term *= row_sums[r];
        }
        if ((static_cast<int>(n) - popcount) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

Complex determinant(const ComplexMatrix &m) {
    const std::size_t n = require_square(m, "determinant");
    std::vector<Complex> a(m.data().begin(), m.data().end());
    auto at = [&a, n](std::size_t r, std::size_t c) -> Complex & { return a[r * n + c]; };

    Complex det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double cand = std::abs(at(r, col));
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best == 0.0) {
            return Complex{0.0, 0.0};
        }
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) {
                std::swap(at(pivot, c), at(col, c));
            }
            det = -det;
        }
        const Complex p = at(col, col);
        det *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = at(r, col) / p;
            if (factor == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = col + 1; c < n; ++c) {
                at(r, c) -= factor * at(col, c);
            }
        }
    }
    return det;
}

bool is_upper_hessenberg(const ComplexMatrix &m, double tol) {
    const std::size_t n = require_square(m, "is_upper_hessenberg");
    for (std::size_t r = 0; r + 2 < n; ++r) {
        for (std::size_t c = r + 2; c < n; ++c) {
            if (std::abs(m(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_lower_hessenberg(const ComplexMatrix &m, double tol) {
    const std::size_t n = require_square(m, "is_lower_hessenberg");
    for (std::size_t c = 0; c + 2 < n; ++c) {
        for (std::size_t r = c + 2; r < n; ++r) {
            if (std::abs(m(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix t_map(const ComplexMatrix &m) {
    require_square(m, "t_map");
    ComplexMatrix out = m;
    for (std::size_t k = 0; k + 1 < m.rows(); ++k) {
        out(k, k + 1) = -out(k, k + 1);
    }
    return out;
}

Complex permanent_hessenberg(const ComplexMatrix &m, double tol) {
    require_square(m, "permanent_hessenberg");
    if (is_upper_hessenberg(m, tol)) {
        return determinant(t_map(m));
    }
    if (is_lower_hessenberg(m, tol)) {
        return determinant(t_map(m.transpose()));
    }
    throw std::invalid_argument("permanent_hessenberg: matrix is not Hessenberg at tolerance " +
                                std::to_string(tol));
}

Complex immanant(const ComplexMatrix &m, const Partition &lambda) {
    const std::size_t n = require_square(m, "immanant");
    if (n > 9) {
        throw std::invalid_argument("immanant: n = " + std::to_string(n) +
                                    " exceeds the factorial-sum guard (9)");
    }
    if (lambda.degree() != static_cast<int>(n)) {
        throw std::invalid_argument("immanant: partition " + lambda.to_string() +
                                    " does not match matrix size " + std::to_string(n));
    }
    std::map<Partition, long long> chi;
    for (const Partition &cls : partitions_of(static_cast<int>(n))) {
        chi.emplace(cls, character_value(lambda, cls));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total{0.0, 0.0};
    do {
        const long long weight = chi.at(cycle_type(perm));
        if (weight == 0) {
            continue;
        }
        Complex term{1.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            term *= m(static_cast<std::size_t>(perm[k]), k);
        }
        total += static_cast<double>(weight) * term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace cosetsum
