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

#include "cosetsum/photon_config.hpp"

#include <cmath>
#include <stdexcept>

namespace cosetsum {

PhotonConfig::PhotonConfig(std::vector<int> modes) : modes_(std::move(modes)) {
    if (modes_.empty()) {
        throw std::invalid_argument("PhotonConfig: need at least one photon");
    }
    if (modes_.size() > 20) {
        throw std::invalid_argument("PhotonConfig: photon number capped at 20");
    }
    int prev = 0;
    for (int m : modes_) {
        if (m < 1) {
            throw std::invalid_argument("PhotonConfig: modes are 1-based, got " +
                                        std::to_string(m));
        }
        if (m < prev) {
            throw std::invalid_argument(
                "PhotonConfig: modes must be non-decreasing (delays are positional, sorting "
                "for you would silently reassociate them)");
        }
        prev = m;
    }
    long long run = 1;
    for (std::size_t k = 1; k < modes_.size(); ++k) {
        if (modes_[k] == modes_[k - 1]) {
            ++run;
            c_denominator_ *= run;  // multiplies up to run! incrementally
        } else {
            run = 1;
        }
    }
}

bool PhotonConfig::all_distinct() const {
    return c_denominator_ == 1;
}

std::string PhotonConfig::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < modes_.size(); ++k) {
        if (k != 0) {
            out += ",";
        }
        out += std::to_string(modes_[k]);
    }
    out += ")";
    return out;
}

bool DelaySpec::all_equal() const {
    for (double t : taus) {
        if (t != taus.front()) {
            return false;
        }
    }
    return true;
}

void DelaySpec::validate(int photon_count) const {
    if (static_cast<int>(taus.size()) != photon_count) {
        throw std::invalid_argument("DelaySpec: got " + std::to_string(taus.size()) +
                                    " delays for " + std::to_string(photon_count) +
                                    " photons (delays are positional, never broadcast)");
    }
    for (double t : taus) {
        if (!std::isfinite(t)) {
            throw std::invalid_argument("DelaySpec: delays must be finite");
        }
    }
    if (!(spectral_width > 0.0) || !std::isfinite(spectral_width)) {
        throw std::invalid_argument("DelaySpec: spectral width must be positive and finite");
    }
}

}  // namespace cosetsum
