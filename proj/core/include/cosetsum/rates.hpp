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

#ifndef COSETSUM_RATES_HPP
#define COSETSUM_RATES_HPP

#include <map>
#include <string>
#include <vector>

#include "cosetsum/complex_matrix.hpp"
#include "cosetsum/matrix_functions.hpp"
#include "cosetsum/partitions.hpp"
#include "cosetsum/photon_config.hpp"

namespace cosetsum {

/// How to evaluate the permanent inside indistinguishable rates.
enum class PermanentMethod {
    kAuto,           // determinant fast path when the submatrix is Hessenberg
    kRyser,          // force Ryser
    kHessenbergDet,  // force the determinant path; throws if not Hessenberg
};

/// A coincidence rate with its amplitude bookkeeping.
///
/// value is clamped to 0 if a rounding-level negative slips through (flagged).
/// decomposition maps partitions to the matrix-function amplitudes that enter
/// the closed form; group_amplitudes carries the three-photon amplitudes
/// grouped by which detector slot receives the delayed photon (slot 3, 2, 1).
struct RateResult {
    double value = 0.0;
    bool clamped = false;
    bool oracle_fallback = false;
    std::string method;
    std::map<Partition, std::vector<Complex>> decomposition;
    std::vector<Complex> group_amplitudes;
};

/// Submatrix with row k taken from row output.modes[k] of U and column l
/// from column input.modes[l], duplicating rows/columns for repeated modes.
/// Mode numbers are 1-based; U must be square and large enough.
ComplexMatrix scattering_submatrix(const ComplexMatrix &u, const PhotonConfig &input,
                                   const PhotonConfig &output);

/// Two partially distinguishable photons (distinct input channels):
///
///   c_out * [ (1+E)/2 |Per(S)|^2 + (1-E)/2 |Det(S)|^2 ],
///   E = exp(-s^2 (tau_1 - tau_2)^2), S the scattering submatrix.
RateResult rate_two_photon(const ComplexMatrix &u, const PhotonConfig &input,
                           const PhotonConfig &output, const DelaySpec &delays);

/// Three photons with the first two coincident (tau_1 = tau_2 != tau_3) and
/// distinct input channels. Writing g = exp(-s^2 (tau_1 - tau_3)^2):
///
/// - doubled output (q,q,p): c * [ (1+2g)/3 |Per(S)|^2 + 2(1-g)/3 |Imm^{(2,1)}(S)|^2 ]
/// - distinct outputs: |A1|^2 + |A2|^2 + |A3|^2
///     + g * [ (A1+A2)* A3 + (A2+A3)* A1 + (A3+A1)* A2 ]
///   where A_k is the amplitude for the delayed photon reaching detector
///   slot 4-k; each A_k is a combination of Per(S) and (2,1)-immanants of
///   column reorderings of S (see the implementation note in rates.cpp).
/// - other output patterns use the same grouped-amplitude form directly.
///
/// Every branch collapses to c |Per(S)|^2 at tau_1 = tau_3. A delay vector
/// not matching the tau_1 = tau_2 pattern falls back to rate_oracle, with
/// the oracle_fallback flag set.
RateResult rate_three_photon_partial(const ComplexMatrix &u, const PhotonConfig &input,
                                     const PhotonConfig &output, const DelaySpec &delays);

/// Fully indistinguishable photons: c_out * c_in * |Per(S)|^2, with the
/// permanent evaluated by Ryser or, for Hessenberg submatrices, through the
/// determinant identity. Photon number up to 20.
RateResult rate_indistinguishable(const ComplexMatrix &u, const PhotonConfig &input,
                                  const PhotonConfig &output,
                                  PermanentMethod method = PermanentMethod::kAuto);

struct OracleDetail {
    Complex raw_sum;  // before taking the real part; imaginary part ~ rounding
    double value = 0.0;
    bool clamped = false;
};

/// Brute-force double-permutation rate, the arbiter for every closed form:
///
///   c_out * c_in * sum_{sigma,rho in S_np}
///       prod_k U(x_k, xi_sigma(k)) conj(U(x_k, xi_rho(k)))
///       * exp(-(s^2/2) sum_k (tau_sigma(k) - tau_rho(k))^2)
///
/// with x the output modes and xi the input modes (delays indexed by input
/// photon). Cost grows as (np!)^2; guarded to np <= 7.
OracleDetail rate_oracle_detail(const ComplexMatrix &u, const PhotonConfig &input,
                                const PhotonConfig &output, const DelaySpec &delays);

double rate_oracle(const ComplexMatrix &u, const PhotonConfig &input, const PhotonConfig &output,
                   const DelaySpec &delays);

/// Dispatches to the cheapest exact formula for the delay pattern:
/// indistinguishable, two-photon, three-photon partial, or the oracle.
RateResult coincidence_rate(const ComplexMatrix &u, const PhotonConfig &input,
                            const PhotonConfig &output, const DelaySpec &delays,
                            PermanentMethod method = PermanentMethod::kAuto);

}  // namespace cosetsum

#endif
