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

#include "cosetsum/sumrules.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cosetsum/random.hpp"

namespace cosetsum {

namespace {

// Compensated (Kahan) accumulator; the invariance thresholds sit at 1e-10,
// close enough to rounding that naive summation order would matter.
class KahanSum {
  public:
    void add(double x) {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

void append_multisets(int next_min, int remaining, const std::vector<int> &universe,
                      std::vector<int> &prefix, std::vector<std::vector<int>> &out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t k = static_cast<std::size_t>(next_min); k < universe.size(); ++k) {
        prefix.push_back(universe[k]);
        append_multisets(static_cast<int>(k), remaining - 1, universe, prefix, out);
        prefix.pop_back();
    }
}

int resolve_fixed_mode(int requested, int n) {
    const int fixed = requested == 0 ? n : requested;
    if (fixed < 1 || fixed > n) {
        throw std::out_of_range("sum rule: fixed mode " + std::to_string(fixed) +
                                " outside 1.." + std::to_string(n));
    }
    return fixed;
}

// Swapping mode labels f <-> n on one side reduces any fixed mode to the
// paper's "last channel" family. Rows move for output-side relabeling,
// columns for input-side.
ComplexMatrix swap_modes(const ComplexMatrix &u, int f, int n, Side side) {
    ComplexMatrix v = u;
    const std::size_t a = static_cast<std::size_t>(f) - 1;
    const std::size_t b = static_cast<std::size_t>(n) - 1;
    for (std::size_t k = 0; k < u.rows(); ++k) {
        if (side == Side::kOutput) {
            std::swap(v(a, k), v(b, k));
        } else {
            std::swap(v(k, a), v(k, b));
        }
    }
    return v;
}

PhotonConfig relabel_config(const PhotonConfig &config, int f, int n) {
    if (f == n) {
        return config;
    }
    std::vector<int> modes = config.modes();
    for (int &m : modes) {
        if (m == f) {
            m = n;
        } else if (m == n) {
            m = f;
        }
    }
    std::sort(modes.begin(), modes.end());
    return PhotonConfig(std::move(modes));
}

struct SumPass {
    double sum = 0.0;
    std::vector<RateResult> rates;
};

SumPass run_pass(const ComplexMatrix &matrix, const std::vector<PhotonConfig> &family,
                 const PhotonConfig &fixed_config, Side side, const DelaySpec &delays,
                 PermanentMethod method) {
    SumPass pass;
    KahanSum acc;
    pass.rates.reserve(family.size());
    for (const PhotonConfig &member : family) {
        const PhotonConfig &input = side == Side::kOutput ? fixed_config : member;
        const PhotonConfig &output = side == Side::kOutput ? member : fixed_config;
        RateResult r = coincidence_rate(matrix, input, output, delays, method);
        acc.add(r.value);
        pass.rates.push_back(std::move(r));
    }
    pass.sum = acc.value();
    return pass;
}

SumReport run_sum(const ComplexMatrix &u, const PhotonConfig &fixed_config, const SumSpec &spec,
                  Side side) {
    if (!u.is_square()) {
        throw std::invalid_argument("sum rule: scattering matrix must be square");
    }
    const int n = static_cast<int>(u.rows());
    const int np = spec.photon_number > 0 ? spec.photon_number : fixed_config.photon_count();
    if (np != fixed_config.photon_count()) {
        throw std::invalid_argument("sum rule: photon_number disagrees with the fixed configuration");
    }
    spec.delays.validate(np);
    if (side == Side::kInput && np >= 2) {
        // The input-side invariance needs the varying photons (positions
        // 1..np-1) to share one delay; with unequal delays the summed family
        // stops spanning an invariant subspace and the identity really fails.
        for (int k = 1; k + 1 < np; ++k) {
            if (spec.delays.taus[static_cast<std::size_t>(k)] != spec.delays.taus[0]) {
                throw std::invalid_argument(
                    "sum_over_inputs: delays of the varying input photons (all but the last) "
                    "must be equal; only the fixed-channel photon may be delayed");
            }
        }
    }

    const int fixed_mode = resolve_fixed_mode(spec.fixed_mode, n);
    const ComplexMatrix working =
        fixed_mode == n ? u : swap_modes(u, fixed_mode, n, side);
    // The swap relabels only the varying side (rows for output sums, columns
    // for input sums), so the fixed configuration keeps its original labels.
    const PhotonConfig &working_fixed = fixed_config;

    const std::vector<PhotonConfig> family = enumerate_outputs(n, np, n);
    const CosetFactorization factorization =
        side == Side::kOutput ? factor_output_coset(working) : factor_input_coset(working);

    const PermanentMethod coset_method = spec.method == SumMethod::kRyser
                                             ? PermanentMethod::kRyser
                                             : PermanentMethod::kAuto;

    const SumPass full = run_pass(working, family, working_fixed, side, spec.delays,
                                  PermanentMethod::kRyser);
    const SumPass coset =
        run_pass(factorization.coset, family, working_fixed, side, spec.delays, coset_method);

    SumReport report;
    report.side = side;
    report.sum_full = full.sum;
    report.sum_coset = coset.sum;
    report.discrepancy = std::abs(full.sum - coset.sum);
    report.invariance_ok = report.discrepancy <= spec.tolerance * std::max(1.0, full.sum);

    bool any_hessenberg = false;
    report.terms.reserve(family.size());
    for (std::size_t k = 0; k < family.size(); ++k) {
        const PhotonConfig reported = relabel_config(family[k], fixed_mode, n);
        SumTerm term{reported, reported.c_factor(), full.rates[k].value, coset.rates[k].value,
                     full.rates[k].method, coset.rates[k].method};
        report.max_term_discrepancy =
            std::max(report.max_term_discrepancy, std::abs(term.rate_full - term.rate_coset));
        any_hessenberg |= coset.rates[k].method == "indistinguishable_hessenberg";
        report.terms.push_back(std::move(term));
    }
    report.method = any_hessenberg ? "hessenberg_det" : "ryser";

    if (spec.method == SumMethod::kBoth) {
        const SumPass ryser_pass = run_pass(factorization.coset, family, working_fixed, side,
                                            spec.delays, PermanentMethod::kRyser);
        report.sum_coset_ryser = ryser_pass.sum;
        report.sum_coset_hessenberg = coset.sum;
        report.has_both_methods = true;
    }
    return report;
}

}  // namespace

std::vector<PhotonConfig> enumerate_outputs(int n, int photon_number, int fixed_mode) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_outputs: n must be at least 1");
    }
    if (photon_number < 1) {
        throw std::invalid_argument("enumerate_outputs: need at least one photon");
    }
    if (fixed_mode < 1 || fixed_mode > n) {
        throw std::out_of_range("enumerate_outputs: fixed mode " + std::to_string(fixed_mode) +
                                " outside 1.." + std::to_string(n));
    }
    std::vector<int> universe;
    for (int m = 1; m <= n; ++m) {
        if (m != fixed_mode) {
            universe.push_back(m);
        }
    }
    std::vector<std::vector<int>> multisets;
    std::vector<int> prefix;
    append_multisets(0, photon_number - 1, universe, prefix, multisets);

    std::vector<PhotonConfig> result;
    result.reserve(multisets.size());
    for (std::vector<int> &modes : multisets) {
        modes.push_back(fixed_mode);
        std::sort(modes.begin(), modes.end());
        result.emplace_back(std::move(modes));
    }
    return result;
}

std::vector<PhotonConfig> enumerate_all_configs(int n, int photon_number) {
    if (n < 1 || photon_number < 1) {
        throw std::invalid_argument("enumerate_all_configs: need n >= 1 and photons >= 1");
    }
    std::vector<int> universe(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        universe[static_cast<std::size_t>(m) - 1] = m;
    }
    std::vector<std::vector<int>> multisets;
    std::vector<int> prefix;
    append_multisets(0, photon_number, universe, prefix, multisets);

    std::vector<PhotonConfig> result;
    result.reserve(multisets.size());
    for (std::vector<int> &modes : multisets) {
        result.emplace_back(std::move(modes));
    }
    return result;
}

SumReport sum_over_outputs(const ComplexMatrix &u, const PhotonConfig &input,
                           const SumSpec &spec) {
    if (spec.side != Side::kOutput) {
        throw std::invalid_argument("sum_over_outputs: spec.side must be output");
    }
    return run_sum(u, input, spec, Side::kOutput);
}

SumReport sum_over_inputs(const ComplexMatrix &u, const PhotonConfig &output,
                          const SumSpec &spec) {
    if (spec.side != Side::kInput) {
        throw std::invalid_argument("sum_over_inputs: spec.side must be input");
    }
    return run_sum(u, output, spec, Side::kInput);
}

ScanSummary invariance_scan(int n, int trials, std::uint64_t seed, const DelaySpec &delays) {
    if (n < 3 || n > 6) {
        throw std::invalid_argument("invariance_scan: n must be in 3..6");
    }
    ScanSummary summary;
    summary.n = n;
    summary.trials = std::max(trials, 0);
    if (summary.trials == 0) {
        return summary;
    }

    const int np = n - 1;
    std::vector<int> input_modes;
    for (int m = 2; m <= n; ++m) {
        input_modes.push_back(m);
    }
    const PhotonConfig fixed_config(input_modes);
    delays.validate(np);

    bool input_side_ok = true;
    for (int k = 1; k + 1 < np; ++k) {
        input_side_ok &= delays.taus[static_cast<std::size_t>(k)] == delays.taus[0];
    }
    summary.timing_available = delays.all_equal();

    for (int t = 0; t < summary.trials; ++t) {
        const ComplexMatrix u = haar_unitary(static_cast<std::size_t>(n),
                                             seed + static_cast<std::uint64_t>(t));

        SumSpec out_spec{Side::kOutput, n, np, delays, SumMethod::kAuto};
        const SumReport out_report = sum_over_outputs(u, fixed_config, out_spec);
        summary.max_output_discrepancy =
            std::max(summary.max_output_discrepancy, out_report.discrepancy);

        if (input_side_ok) {
            SumSpec in_spec{Side::kInput, n, np, delays, SumMethod::kAuto};
            const SumReport in_report = sum_over_inputs(u, fixed_config, in_spec);
            summary.max_input_discrepancy =
                std::max(summary.max_input_discrepancy, in_report.discrepancy);
            summary.input_side_run = true;
        }

        if (summary.timing_available) {
            const CosetFactorization f = factor_output_coset(u);
            const auto family = enumerate_outputs(n, np, n);
            const auto t0 = std::chrono::steady_clock::now();
            for (const PhotonConfig &out : family) {
                rate_indistinguishable(f.coset, fixed_config, out, PermanentMethod::kRyser);
            }
            const auto t1 = std::chrono::steady_clock::now();
            for (const PhotonConfig &out : family) {
                rate_indistinguishable(f.coset, fixed_config, out, PermanentMethod::kAuto);
            }
            const auto t2 = std::chrono::steady_clock::now();
            summary.ryser_ns +=
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
            summary.hessenberg_ns +=
                std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
        }
    }
    return summary;
}

}  // namespace cosetsum
