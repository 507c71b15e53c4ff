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

#ifndef COSETSUM_PHOTON_CONFIG_HPP
#define COSETSUM_PHOTON_CONFIG_HPP

#include <string>
#include <vector>

namespace cosetsum {

/// Multiset of occupied channels, one entry per photon.
///
/// Modes are 1-based and must be listed in non-decreasing order; this keeps
/// the photon index -> list position -> delay association unambiguous, so
/// constructors reject unsorted input instead of silently sorting it.
/// The normalization weight c = 1 / prod_m (multiplicity_m)! is exact:
/// c_denominator() returns the integer product of factorials.
class PhotonConfig {
  public:
    explicit PhotonConfig(std::vector<int> modes);

    int photon_count() const { return static_cast<int>(modes_.size()); }
    const std::vector<int> &modes() const { return modes_; }
    int max_mode() const { return modes_.back(); }
    bool all_distinct() const;

    long long c_denominator() const { return c_denominator_; }
    double c_factor() const { return 1.0 / static_cast<double>(c_denominator_); }

    std::string to_string() const;  // "(2,3,4)"

    bool operator==(const PhotonConfig &rhs) const { return modes_ == rhs.modes_; }

  private:
    std::vector<int> modes_;
    long long c_denominator_ = 1;
};

/// Arrival-time offsets, one per input photon (positional, matching the
/// input PhotonConfig), plus the common Gaussian spectral width s > 0.
/// Pairwise indistinguishability decays as exp(-s^2 (tau_i - tau_j)^2).
struct DelaySpec {
    std::vector<double> taus;
    double spectral_width = 1.0;

    bool all_equal() const;

    /// Throws unless taus.size() == photon_count, every entry is finite and
    /// spectral_width > 0.
    void validate(int photon_count) const;
};

}  // namespace cosetsum

#endif
