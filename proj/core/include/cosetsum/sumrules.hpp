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

#ifndef COSETSUM_SUMRULES_HPP
#define COSETSUM_SUMRULES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cosetsum/coset.hpp"
#include "cosetsum/photon_config.hpp"
#include "cosetsum/rates.hpp"

namespace cosetsum {

/// Relative tolerance for declaring the full and coset sums equal:
/// |sum_full - sum_coset| <= tol * max(1, sum_full).
inline constexpr double kSumInvarianceTol = 1e-9;

enum class SumMethod {
    kAuto,   // determinant fast path on Hessenberg coset submatrices
    kRyser,  // permanents by Ryser everywhere
    kBoth,   // evaluate the coset sum both ways and report both
};

/// Describes one family of summed rates: which side varies, which mode is
/// always occupied, how many photons, and their delays.
struct SumSpec {
    Side side = Side::kOutput;
    int fixed_mode = 0;  // 0 means "use mode n"
    int photon_number = 0;
    DelaySpec delays;
    SumMethod method = SumMethod::kAuto;
    double tolerance = kSumInvarianceTol;
};

struct SumTerm {
    PhotonConfig config;  // the enumerated (varying-side) configuration
    double c_factor;      // multiplicity weight, already inside the rates
    double rate_full;
    double rate_coset;
    std::string method_full;
    std::string method_coset;
};

struct SumReport {
    Side side = Side::kOutput;
    double sum_full = 0.0;
    double sum_coset = 0.0;
    double discrepancy = 0.0;           // |sum_full - sum_coset|
    double max_term_discrepancy = 0.0;  // max_k |rate_full_k - rate_coset_k|
    bool invariance_ok = false;
    std::string method;  // "hessenberg_det" if any coset term took the determinant path
    std::vector<SumTerm> terms;
    // Populated by SumMethod::kBoth: the coset sum evaluated both ways.
    double sum_coset_ryser = 0.0;
    double sum_coset_hessenberg = 0.0;
    bool has_both_methods = false;
};

/// All detection patterns with photon_number photons of which one sits in
/// fixed_mode and the rest range over the remaining modes: non-decreasing
/// multisets of size photon_number-1 over {1..n} minus fixed_mode, each
/// appended with fixed_mode and sorted. Lexicographic order.
std::vector<PhotonConfig> enumerate_outputs(int n, int photon_number, int fixed_mode);

/// All multisets of photon_number modes out of 1..n (no fixed mode); used by
/// the total-probability cross-check.
std::vector<PhotonConfig> enumerate_all_configs(int n, int photon_number);

/// Weighted sum of rates from a fixed input into every enumerated output
/// family member, computed once with U and once with the output-side coset
/// matrix of U. Per-term rates generally differ between the two; the sums
/// must agree, and the report records both plus per-term data.
///
/// When every photon is indistinguishable, Hessenberg coset submatrices take
/// the determinant path (per term; not every submatrix of a Hessenberg
/// matrix is Hessenberg, so methods can mix within one sum).
///
/// A fixed_mode other than n is handled by conjugating with the mode swap
/// (fixed_mode <-> n) before factorizing; reported configurations keep the
/// caller's labels. Sums are accumulated in enumeration order with
/// compensated summation.
SumReport sum_over_outputs(const ComplexMatrix &u, const PhotonConfig &input, const SumSpec &spec);

/// Mirror image: fixed output, sum over input configurations, input-side
/// coset. Requires the delays of the varying photons (positions 1..np-1) to
/// be equal; the invariance genuinely fails otherwise, so unequal patterns
/// are rejected with an explanatory message.
SumReport sum_over_inputs(const ComplexMatrix &u, const PhotonConfig &output, const SumSpec &spec);

struct ScanSummary {
    int n = 0;
    int trials = 0;
    double max_output_discrepancy = 0.0;
    double max_input_discrepancy = 0.0;
    bool input_side_run = false;  // false when the delay pattern rules it out
    // Accumulated wall time spent on the coset permanents, both ways.
    std::int64_t ryser_ns = 0;
    std::int64_t hessenberg_ns = 0;
    bool timing_available = false;  // only meaningful for indistinguishable scans
    bool empty() const { return trials == 0; }
};

/// Batch verification: runs the output-side and (when the delay pattern
/// allows) input-side sum checks over `trials` Haar matrices seeded from
/// `seed`, with n-1 photons entering modes 2..n. Reports worst discrepancies
/// and, for indistinguishable delays, Ryser vs determinant timing totals.
ScanSummary invariance_scan(int n, int trials, std::uint64_t seed, const DelaySpec &delays);

}  // namespace cosetsum

#endif
