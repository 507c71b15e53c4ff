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

#ifndef COSETSUM_CHARACTERS_HPP
#define COSETSUM_CHARACTERS_HPP

#include <vector>

#include "cosetsum/partitions.hpp"

namespace cosetsum {

/// Character value chi^irrep(class) of S_n, computed by the
/// Murnaghan-Nakayama border-strip recursion in exact integer arithmetic.
/// Both arguments must partition the same n.
long long character_value(const Partition &irrep, const Partition &cycle_class);

/// Number of permutations in S_n with the given cycle type: n! / z,
/// z = prod_k k^{m_k} m_k!.
long long conjugacy_class_size(const Partition &cycle_class);

/// Full character table of S_n.
///
/// Irreps and classes are both indexed by partitions of n in descending
/// lexicographic order, so for n = 3 the rows are (3), (2,1), (1,1,1) and the
/// columns are the classes with cycle types (3), (2,1), (1,1,1).
class CharacterTable {
  public:
    /// Builds the table for S_degree. Requires 1 <= degree <= 8.
    explicit CharacterTable(int degree);

    int degree() const { return degree_; }
    const std::vector<Partition> &irreps() const { return labels_; }
    const std::vector<Partition> &classes() const { return labels_; }

    long long chi(const Partition &irrep, const Partition &cycle_class) const;
    long long class_size(const Partition &cycle_class) const;

    /// chi at the identity class, i.e. the number of standard tableaux.
    long long dimension(const Partition &irrep) const;

    /// Exact row orthogonality:
    /// sum_c |c| chi^l(c) chi^m(c) == n! * delta_{lm} for all irrep pairs.
    bool orthogonality_holds() const;

  private:
    int index_of(const Partition &label) const;

    int degree_;
    std::vector<Partition> labels_;
    std::vector<long long> sizes_;
    std::vector<std::vector<long long>> chi_;  // chi_[irrep][class]
};

inline CharacterTable characters(int n) {
    return CharacterTable(n);
}

}  // namespace cosetsum

#endif
