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

#include <benchmark/benchmark.h>

#include <vector>

#include "cosetsum/random.hpp"
#include "cosetsum/rates.hpp"
#include "cosetsum/sumrules.hpp"

namespace {

using cosetsum::DelaySpec;
using cosetsum::PhotonConfig;

PhotonConfig first_modes(int count) {
    std::vector<int> modes;
    for (int m = 1; m <= count; ++m) {
        modes.push_back(m);
    }
    return PhotonConfig(modes);
}

void BM_RateOracle(benchmark::State &state) {
    const int np = static_cast<int>(state.range(0));
    const auto u = cosetsum::haar_unitary(static_cast<std::size_t>(np + 1), 21);
    const PhotonConfig config = first_modes(np);
    DelaySpec delays;
    for (int k = 0; k < np; ++k) {
        delays.taus.push_back(0.1 * k);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosetsum::rate_oracle(u, config, config, delays));
    }
}
BENCHMARK(BM_RateOracle)->DenseRange(2, 6, 1);

void BM_ThreePhotonClosedForm(benchmark::State &state) {
    const auto u = cosetsum::haar_unitary(4, 22);
    const PhotonConfig input({2, 3, 4});
    const PhotonConfig output({1, 2, 4});
    const DelaySpec delays{{0.2, 0.2, -0.5}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosetsum::rate_three_photon_partial(u, input, output, delays));
    }
}
BENCHMARK(BM_ThreePhotonClosedForm);

void BM_SumOverOutputs(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto u = cosetsum::haar_unitary(static_cast<std::size_t>(n), 23);
    std::vector<int> input_modes;
    for (int m = 2; m <= n; ++m) {
        input_modes.push_back(m);
    }
    const PhotonConfig input(input_modes);
    cosetsum::SumSpec spec;
    spec.photon_number = n - 1;
    spec.delays.taus.assign(static_cast<std::size_t>(n - 1), 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosetsum::sum_over_outputs(u, input, spec));
    }
}
BENCHMARK(BM_SumOverOutputs)->DenseRange(3, 6, 1);

}  // namespace
