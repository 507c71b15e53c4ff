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

// The contrast that motivates the coset reduction: Ryser doubles per mode,
// the Hessenberg determinant path grows like n^3.

#include <benchmark/benchmark.h>

#include "cosetsum/coset.hpp"
#include "cosetsum/matrix_functions.hpp"
#include "cosetsum/random.hpp"

namespace {

using cosetsum::ComplexMatrix;

ComplexMatrix hessenberg_unitary(std::size_t n) {
    return cosetsum::factor_output_coset(cosetsum::haar_unitary(n, 1234)).coset;
}

void BM_PermanentNaive(benchmark::State &state) {
    const ComplexMatrix m = cosetsum::gaussian_matrix(
        static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosetsum::permanent_naive(m));
    }
}
BENCHMARK(BM_PermanentNaive)->DenseRange(4, 9, 1);

void BM_PermanentRyser(benchmark::State &state) {
    const ComplexMatrix m = hessenberg_unitary(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosetsum::permanent_ryser(m));
    }
}
BENCHMARK(BM_PermanentRyser)->DenseRange(4, 20, 2);

void BM_PermanentHessenbergDet(benchmark::State &state) {
    const ComplexMatrix m = hessenberg_unitary(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosetsum::permanent_hessenberg(m));
    }
}
BENCHMARK(BM_PermanentHessenbergDet)->DenseRange(4, 20, 2);

void BM_Determinant(benchmark::State &state) {
    const ComplexMatrix m = cosetsum::haar_unitary(static_cast<std::size_t>(state.range(0)), 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosetsum::determinant(m));
    }
}
BENCHMARK(BM_Determinant)->DenseRange(4, 20, 4);

void BM_FactorOutputCoset(benchmark::State &state) {
    const ComplexMatrix u = cosetsum::haar_unitary(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cosetsum::factor_output_coset(u));
    }
}
BENCHMARK(BM_FactorOutputCoset)->DenseRange(4, 16, 4);

}  // namespace
