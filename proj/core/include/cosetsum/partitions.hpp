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

#ifndef COSETSUM_PARTITIONS_HPP
#define COSETSUM_PARTITIONS_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace cosetsum {

/// Integer partition (Young diagram). Parts are positive and non-increasing;
/// the degree is their sum. Labels an irrep of S_n or a conjugacy class by
/// cycle type. The empty partition (degree 0) is allowed; it is the base case
/// of the character recursion.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int degree() const { return degree_; }
    const std::vector<int> &parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Transposed Young diagram. An involution: conjugate(conjugate(p)) == p.
    Partition conjugate() const;

    /// "(2,1)" style rendering.
    std::string to_string() const;

    bool operator==(const Partition &rhs) const { return parts_ == rhs.parts_; }
    auto operator<=>(const Partition &rhs) const { return parts_ <=> rhs.parts_; }

  private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// All partitions of n in descending lexicographic order:
/// (n), (n-1,1), ..., (1^n). partitions_of(0) yields the empty partition.
std::vector<Partition> partitions_of(int n);

/// Cycle type of a 0-based permutation, as a partition of its length.
Partition cycle_type(std::span<const int> perm);

}  // namespace cosetsum

#endif
