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

#include "cosetsum/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace cosetsum {

namespace {

// Beta-set (abacus) encoding: with k parts, beta_i = lambda_i + (k-1-i).
// Removing a border strip of length L is moving one bead from b to b-L onto
// an empty slot; the strip height is the number of beads jumped over.
std::vector<int> beta_set(const std::vector<int> &parts) {
    const int k = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < k; ++i) {
        beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (k - 1 - i);
    }
    return beta;
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int k = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) {
        const int p = beta[static_cast<std::size_t>(i)] - (k - 1 - i);
        if (p > 0) {
            parts.push_back(p);
        }
    }
    return parts;
}

using Memo = std::map<std::pair<std::vector<int>, std::vector<int>>, long long>;

long long mn_recurse(const std::vector<int> &lambda, const std::vector<int> &cycles,
                     std::size_t cycle_index, Memo &memo) {
    if (lambda.empty()) {
        return 1;  // cycles are exhausted at the same time since the degrees match
    }
    std::vector<int> rest(cycles.begin() + static_cast<std::ptrdiff_t>(cycle_index),
                          cycles.end());
    const auto key = std::make_pair(lambda, rest);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }

    const int strip = cycles[cycle_index];
    const std::vector<int> beta = beta_set(lambda);
    long long total = 0;
    for (std::size_t bi = 0; bi < beta.size(); ++bi) {
        const int target = beta[bi] - strip;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        int height = 0;
        for (int other : beta) {
            if (other > target && other < beta[bi]) {
                ++height;
            }
        }
        std::vector<int> new_beta = beta;
        new_beta[bi] = target;
        const long long sub =
            mn_recurse(partition_from_beta(std::move(new_beta)), cycles, cycle_index + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace

long long character_value(const Partition &irrep, const Partition &cycle_class) {
    if (irrep.degree() != cycle_class.degree()) {
        throw std::invalid_argument("character_value: partitions must have equal degree (" +
                                    irrep.to_string() + " vs " + cycle_class.to_string() + ")");
    }
    Memo memo;
    return mn_recurse(irrep.parts(), cycle_class.parts(), 0, memo);
}

long long conjugacy_class_size(const Partition &cycle_class) {
    long long factorial = 1;
    for (int k = 2; k <= cycle_class.degree(); ++k) {
        factorial *= k;
    }
    // z = prod_k k^{m_k} m_k! over the distinct cycle lengths k.
    long long z = 1;
    const auto &parts = cycle_class.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        const long long mult = static_cast<long long>(j - i);
        for (long long m = 0; m < mult; ++m) {
            z *= parts[i];
        }
        for (long long m = 2; m <= mult; ++m) {
            z *= m;
        }
        i = j;
    }
    return factorial / z;
}

CharacterTable::CharacterTable(int degree) : degree_(degree) {
    if (degree < 1 || degree > 8) {
        throw std::invalid_argument("CharacterTable: degree must be in 1..8, got " +
                                    std::to_string(degree));
    }
    labels_ = partitions_of(degree);
    sizes_.reserve(labels_.size());
    for (const Partition &cls : labels_) {
        sizes_.push_back(conjugacy_class_size(cls));
    }
    chi_.resize(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        chi_[i].resize(labels_.size());
        for (std::size_t j = 0; j < labels_.size(); ++j) {
            chi_[i][j] = character_value(labels_[i], labels_[j]);
        }
    }
}

int CharacterTable::index_of(const Partition &label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        if (labels_[k] == label) {
            return static_cast<int>(k);
        }
    }
    throw std::invalid_argument("CharacterTable: " + label.to_string() +
                                " is not a partition of " + std::to_string(degree_));
}

long long CharacterTable::chi(const Partition &irrep, const Partition &cycle_class) const {
    return chi_[static_cast<std::size_t>(index_of(irrep))]
               [static_cast<std::size_t>(index_of(cycle_class))];
}

long long CharacterTable::class_size(const Partition &cycle_class) const {
    return sizes_[static_cast<std::size_t>(index_of(cycle_class))];
}

long long CharacterTable::dimension(const Partition &irrep) const {
    return chi(irrep, Partition(std::vector<int>(static_cast<std::size_t>(degree_), 1)));
}

bool CharacterTable::orthogonality_holds() const {
    long long factorial = 1;
    for (int k = 2; k <= degree_; ++k) {
        factorial *= k;
    }
    for (std::size_t a = 0; a < labels_.size(); ++a) {
        for (std::size_t b = a; b < labels_.size(); ++b) {
            long long dot = 0;
            for (std::size_t c = 0; c < labels_.size(); ++c) {
                dot += sizes_[c] * chi_[a][c] * chi_[b][c];
            }
            if (dot != (a == b ? factorial : 0)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cosetsum
