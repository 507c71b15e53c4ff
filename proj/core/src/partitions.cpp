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

#include "cosetsum/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cosetsum {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = parts_.empty() ? 0 : parts_.front();
    for (int p : parts_) {
        if (p < 1) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        if (p > prev) {
            throw std::invalid_argument("Partition: parts must be non-increasing");
        }
        prev = p;
        degree_ += p;
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) {
        return Partition{};
    }
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) {
            ++conj[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k != 0) {
            out += ",";
        }
        out += std::to_string(parts_[k]);
    }
    out += ")";
    return out;
}

namespace {

void emit_partitions(int remaining, int cap, std::vector<int> &prefix,
                     std::vector<Partition> &out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        prefix.push_back(next);
        emit_partitions(remaining - next, next, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) {
        throw std::invalid_argument("partitions_of: n must be non-negative");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

Partition cycle_type(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> hit(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("cycle_type: not a permutation of 0..n-1");
        }
        hit[static_cast<std::size_t>(v)] = true;
    }
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lengths;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        int len = 0;
        int k = start;
        while (!seen[static_cast<std::size_t>(k)]) {
            seen[static_cast<std::size_t>(k)] = true;
            k = perm[static_cast<std::size_t>(k)];
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

}  // namespace cosetsum
