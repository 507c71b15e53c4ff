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

#include "cosetsum/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <string_view>

#include "cosetsum/characters.hpp"
#include "cosetsum/coset.hpp"
#include "cosetsum/matrix_functions.hpp"
#include "cosetsum/random.hpp"
#include "cosetsum/rates.hpp"
#include "cosetsum/sumrules.hpp"

namespace cosetsum {

namespace {

using Clock = std::chrono::steady_clock;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

double pick(double override_value, double fallback) {
    return override_value > 0.0 ? override_value : fallback;
}

ComplexMatrix beamsplitter_50_50() {
    const double c = 1.0 / std::sqrt(2.0);
    return ComplexMatrix(2, 2, {Complex{c, 0}, Complex{c, 0}, Complex{c, 0}, Complex{-c, 0}});
}

template <typename F>
std::int64_t best_of_ns(int reps, F &&body) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        body();
        const auto t1 = Clock::now();
        best = std::min(best,
                        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    return best;
}

CheckResult check_hom_dip(double tol_override) {
    const double tol = pick(tol_override, 1e-12);
    const ComplexMatrix bs = beamsplitter_50_50();
    const PhotonConfig both({1, 2});

    const double overlapped = rate_two_photon(bs, both, both, DelaySpec{{0.0, 0.0}}).value;
    const double separated = rate_two_photon(bs, both, both, DelaySpec{{1e3, 0.0}}).value;

    CheckResult r;
    r.name = "hom_dip";
    r.pass = std::abs(overlapped) <= tol && std::abs(separated - 0.5) <= tol;
    r.detail = "rate(tau=0)=" + sci(overlapped) + ", rate(tau->inf)=" + sci(separated) +
               ", tol=" + sci(tol);
    return r;
}

CheckResult check_two_photon_closed_vs_oracle(double tol_override) {
    const double tol = pick(tol_override, 1e-10);
    const double widths[] = {0.5, 1.0, 2.0};
    const PhotonConfig input({2, 3});
    const auto outputs = enumerate_all_configs(3, 2);

    RandomStream rng(20260811);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const ComplexMatrix u = haar_unitary(3, 1000 + static_cast<std::uint64_t>(t));
        DelaySpec delays{{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)},
                         widths[t % 3]};
        const PhotonConfig &output = outputs[static_cast<std::size_t>(t) % outputs.size()];
        const double closed = rate_two_photon(u, input, output, delays).value;
        const double oracle = rate_oracle(u, input, output, delays);
        worst = std::max(worst, std::abs(closed - oracle));
    }

    CheckResult r;
    r.name = "two_photon_closed_vs_oracle";
    r.pass = worst < tol;
    r.detail = "max |closed - oracle| = " + sci(worst) + " over 200 draws, tol=" + sci(tol);
    return r;
}

CheckResult sum_rule_n3(const char *name, Side side, double tol_override) {
    const double tol = pick(tol_override, 1e-10);
    const PhotonConfig fixed_config({2, 3});

    RandomStream rng(777);
    double worst = 0.0;
    double worst_witness = 1e300;
    int witnessed = 0;
    for (int t = 0; t < 100; ++t) {
        const ComplexMatrix u = haar_unitary(3, 2000 + static_cast<std::uint64_t>(t));
        DelaySpec delays{{0.0, 0.0}};
        if (t % 2 == 1) {
            delays.taus = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        }
        SumSpec spec{side, 3, 2, delays};
        const SumReport report = side == Side::kOutput ? sum_over_outputs(u, fixed_config, spec)
                                                       : sum_over_inputs(u, fixed_config, spec);
        worst = std::max(worst, report.discrepancy);
        worst_witness = std::min(worst_witness, report.max_term_discrepancy);
        if (report.max_term_discrepancy > 1e-3) {
            ++witnessed;
        }
    }

    CheckResult r;
    r.name = name;
    r.pass = worst < tol && witnessed >= 90;
    r.detail = "max |sum_full - sum_coset| = " + sci(worst) + " (tol " + sci(tol) + "); " +
               std::to_string(witnessed) + "/100 draws had a per-term gap > 1e-3";
    return r;
}

CheckResult check_output_sum_rule_n3(double tol_override) {
    return sum_rule_n3("output_sum_rule_n3", Side::kOutput, tol_override);
}

CheckResult check_input_sum_rule_n3(double tol_override) {
    return sum_rule_n3("input_sum_rule_n3", Side::kInput, tol_override);
}

CheckResult check_coset_zero_pattern_n4(double tol_override) {
    const double zero_tol = pick(tol_override, 1e-11);
    const double recon_tol = pick(tol_override, 1e-10);

    double worst_zero = 0.0;
    double worst_recon = 0.0;
    for (int t = 0; t < 100; ++t) {
        const CosetFactorization f =
            factor_output_coset(haar_unitary(4, 3000 + static_cast<std::uint64_t>(t)));
        worst_zero = std::max({worst_zero, std::abs(f.coset(0, 2)), std::abs(f.coset(0, 3)),
                               std::abs(f.coset(1, 3))});
        worst_recon = std::max(worst_recon, f.reconstruction_error);
    }

    CheckResult r;
    r.name = "coset_zero_pattern_n4";
    r.pass = worst_zero < zero_tol && worst_recon < recon_tol;
    r.detail = "max eliminated entry " + sci(worst_zero) + " (tol " + sci(zero_tol) +
               "), max reconstruction error " + sci(worst_recon) + " (tol " + sci(recon_tol) + ")";
    return r;
}

CheckResult check_permanent_sum_as_determinant_sum(double tol_override) {
    const double tol = pick(tol_override, 1e-10);
    const PhotonConfig input({2, 3, 4});

    double worst = 0.0;
    bool det_path_used = false;
    for (int t = 0; t < 50; ++t) {
        const ComplexMatrix u = haar_unitary(4, 4000 + static_cast<std::uint64_t>(t));
        SumSpec spec{Side::kOutput, 4, 3, DelaySpec{{0.0, 0.0, 0.0}}, SumMethod::kBoth};
        const SumReport report = sum_over_outputs(u, input, spec);
        worst = std::max({worst, std::abs(report.sum_full - report.sum_coset_ryser),
                          std::abs(report.sum_full - report.sum_coset_hessenberg),
                          std::abs(report.sum_coset_ryser - report.sum_coset_hessenberg)});
        det_path_used |= report.method == "hessenberg_det";
    }

    CheckResult r;
    r.name = "permanent_sum_as_determinant_sum";
    r.pass = worst < tol && det_path_used;
    r.detail = "max pairwise gap between full-Ryser / coset-Ryser / coset-det sums = " +
               sci(worst) + " (tol " + sci(tol) + ")";
    return r;
}

CheckResult check_hessenberg_permanent_fast_path(double tol_override) {
    const double tol = pick(tol_override, 1e-10);

    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 6);
        const ComplexMatrix m = random_upper_hessenberg(n, 5000 + static_cast<std::uint64_t>(t));
        const Complex fast = permanent_hessenberg(m);
        const Complex ryser = permanent_ryser(m);
        const Complex naive = permanent_naive(m);
        ok &= approx_equal(fast, ryser, tol) && approx_equal(fast, naive, tol);
        const double scale = std::max({1.0, std::abs(fast), std::abs(ryser)});
        worst = std::max(worst, std::abs(fast - ryser) / scale);
    }

    CheckResult r;
    r.name = "hessenberg_permanent_fast_path";
    r.pass = ok;
    r.detail = "max relative |det-path - Ryser| = " + sci(worst) +
               " over 100 Hessenberg matrices, n in 3..8 (tol " + sci(tol) + ")";
    return r;
}

CheckResult check_three_photon_partial_rates(double tol_override) {
    const double tol = pick(tol_override, 1e-9);
    const double collapse_tol = pick(tol_override, 1e-11);
    const PhotonConfig input({2, 3, 4});
    const auto outputs = enumerate_outputs(4, 3, 4);

    RandomStream rng(424242);
    double worst = 0.0;
    double worst_collapse = 0.0;
    for (int t = 0; t < 100; ++t) {
        const ComplexMatrix u = haar_unitary(4, 6000 + static_cast<std::uint64_t>(t));
        const double shared = rng.uniform(-2.0, 2.0);
        const double late = rng.uniform(-2.0, 2.0);
        const DelaySpec delays{{shared, shared, late}};
        for (const PhotonConfig &output : outputs) {
            const RateResult closed = rate_three_photon_partial(u, input, output, delays);
            const double oracle = rate_oracle(u, input, output, delays);
            worst = std::max(worst, std::abs(closed.value - oracle));
        }
        const DelaySpec coincident{{shared, shared, shared}};
        for (const PhotonConfig &output : outputs) {
            const RateResult closed = rate_three_photon_partial(u, input, output, coincident);
            const Complex per = permanent_naive(scattering_submatrix(u, input, output));
            const double collapsed = output.c_factor() * std::norm(per);
            worst_collapse = std::max(worst_collapse, std::abs(closed.value - collapsed));
        }
    }

    CheckResult r;
    r.name = "three_photon_partial_rates";
    r.pass = worst < tol && worst_collapse < collapse_tol;
    r.detail = "max |closed - oracle| = " + sci(worst) + " (tol " + sci(tol) +
               "); max collapse deviation at zero delay = " + sci(worst_collapse) + " (tol " +
               sci(collapse_tol) + ")";
    return r;
}

CheckResult check_character_table(double) {
    const CharacterTable s3 = characters(3);
    const Partition sym({3});
    const Partition mixed({2, 1});
    const Partition anti({1, 1, 1});
    const Partition id_class({1, 1, 1});
    const Partition swap_class({2, 1});
    const Partition cycle_class({3});

    bool ok = true;
    ok &= s3.chi(sym, id_class) == 1 && s3.chi(sym, swap_class) == 1 && s3.chi(sym, cycle_class) == 1;
    ok &= s3.chi(mixed, id_class) == 2 && s3.chi(mixed, swap_class) == 0 &&
          s3.chi(mixed, cycle_class) == -1;
    ok &= s3.chi(anti, id_class) == 1 && s3.chi(anti, swap_class) == -1 &&
          s3.chi(anti, cycle_class) == 1;
    ok &= s3.class_size(id_class) == 1 && s3.class_size(swap_class) == 3 &&
          s3.class_size(cycle_class) == 2;
    ok &= s3.orthogonality_holds();

    const bool s4_ok = characters(4).orthogonality_holds();

    CheckResult r;
    r.name = "character_table";
    r.pass = ok && s4_ok;
    r.detail = std::string("S3 table ") + (ok ? "exact" : "WRONG") + "; S4 orthogonality " +
               (s4_ok ? "exact" : "VIOLATED");
    return r;
}

CheckResult check_immanant_identities(double tol_override) {
    const double tol = pick(tol_override, 1e-12);
    const Partition sym({3});
    const Partition mixed({2, 1});
    const Partition anti({1, 1, 1});

    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const ComplexMatrix m = gaussian_matrix(3, 3, 7000 + static_cast<std::uint64_t>(t));
        const Complex per = permanent_naive(m);
        const Complex det = determinant(m);
        const Complex imm_mixed = immanant(m, mixed);
        const Complex expansion = 2.0 * m(0, 0) * m(1, 1) * m(2, 2) -
                                  m(1, 0) * m(2, 1) * m(0, 2) - m(2, 0) * m(0, 1) * m(1, 2);
        ok &= approx_equal(immanant(m, sym), per, tol);
        ok &= approx_equal(immanant(m, anti), det, tol);
        ok &= approx_equal(imm_mixed, expansion, tol);
        worst = std::max(worst, std::abs(imm_mixed - expansion));
    }

    CheckResult r;
    r.name = "immanant_identities";
    r.pass = ok;
    r.detail = "permanent/determinant specializations and the (2,1) expansion agree; "
               "max expansion gap " +
               sci(worst) + " (tol " + sci(tol) + ")";
    return r;
}

CheckResult check_ryser_vs_naive(double tol_override) {
    const double tol = pick(tol_override, 1e-10);

    bool ok = true;
    double worst = 0.0;
    std::uint64_t seed = 8000;
    for (std::size_t n = 2; n <= 7; ++n) {
        for (int t = 0; t < 50; ++t) {
            const ComplexMatrix m = gaussian_matrix(n, n, seed++);
            const Complex a = permanent_ryser(m);
            const Complex b = permanent_naive(m);
            ok &= approx_equal(a, b, tol);
            worst = std::max(worst, std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
        }
    }

    CheckResult r;
    r.name = "ryser_vs_naive";
    r.pass = ok;
    r.detail = "max relative gap " + sci(worst) + " over 50 matrices each for n=2..7 (tol " +
               sci(tol) + ")";
    return r;
}

CheckResult check_performance_contrast(double tol_override) {
    const double value_tol = pick(tol_override, 1e-10);

    const ComplexMatrix h18 = factor_output_coset(haar_unitary(18, 42)).coset;
    Complex ryser_value;
    Complex det_value;
    const std::int64_t ryser_ns = best_of_ns(5, [&] { ryser_value = permanent_ryser(h18); });
    const std::int64_t det_ns = best_of_ns(200, [&] { det_value = permanent_hessenberg(h18); });
    const bool values_match = approx_equal(ryser_value, det_value, value_tol);
    const double speedup =
        det_ns > 0 ? static_cast<double>(ryser_ns) / static_cast<double>(det_ns) : 1e9;

    const ComplexMatrix h20 = factor_output_coset(haar_unitary(20, 43)).coset;
    const auto t0 = Clock::now();
    const Complex ryser20 = permanent_ryser(h20);
    const double ryser20_s = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ryser20_ok = ryser20_s < 60.0 && std::isfinite(std::abs(ryser20));

    CheckResult r;
    r.name = "performance_contrast";
    r.pass = values_match && speedup >= 100.0 && ryser20_ok;
    r.detail = "n=18: Ryser " + sci(static_cast<double>(ryser_ns)) + " ns vs det path " +
               sci(static_cast<double>(det_ns)) + " ns (x" + sci(speedup) +
               ", checksums match: " + (values_match ? "yes" : "NO") + "); Ryser n=20 took " +
               sci(ryser20_s) + " s";
    return r;
}

CheckResult check_total_probability(double tol_override) {
    const double tol = pick(tol_override, 1e-8);

    struct Case {
        int n;
        int np;
    };
    const Case cases[] = {{4, 2}, {4, 3}, {5, 2}, {5, 3}};

    double worst = 0.0;
    std::uint64_t seed = 9000;
    for (const Case &c : cases) {
        std::vector<int> input_modes;
        for (int m = 1; m <= c.np; ++m) {
            input_modes.push_back(m);
        }
        const PhotonConfig input(input_modes);
        const ComplexMatrix u = haar_unitary(static_cast<std::size_t>(c.n), seed++);
        double total = 0.0;
        double comp = 0.0;
        for (const PhotonConfig &output : enumerate_all_configs(c.n, c.np)) {
            const double y = rate_indistinguishable(u, input, output).value - comp;
            const double t = total + y;
            comp = (t - total) - y;
            total = t;
        }
        worst = std::max(worst, std::abs(total - 1.0));
    }

    CheckResult r;
    r.name = "total_probability";
    r.pass = worst < tol;
    r.detail = "max |sum over all outputs - 1| = " + sci(worst) +
               " for (n,photons) in {(4,2),(4,3),(5,2),(5,3)} (tol " + sci(tol) + ")";
    return r;
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const CheckOptions &options) {
    using CheckFn = std::function<CheckResult(double)>;
    const std::pair<const char *, CheckFn> checks[] = {
        {"hom_dip", check_hom_dip},
        {"two_photon_closed_vs_oracle", check_two_photon_closed_vs_oracle},
        {"output_sum_rule_n3", check_output_sum_rule_n3},
        {"input_sum_rule_n3", check_input_sum_rule_n3},
        {"coset_zero_pattern_n4", check_coset_zero_pattern_n4},
        {"permanent_sum_as_determinant_sum", check_permanent_sum_as_determinant_sum},
        {"hessenberg_permanent_fast_path", check_hessenberg_permanent_fast_path},
        {"three_photon_partial_rates", check_three_photon_partial_rates},
        {"character_table", check_character_table},
        {"immanant_identities", check_immanant_identities},
        {"ryser_vs_naive", check_ryser_vs_naive},
        {"performance_contrast", check_performance_contrast},
        {"total_probability", check_total_probability},
    };

    std::vector<CheckResult> results;
    for (const auto &[name, fn] : checks) {
        if (!options.filter.empty() &&
            std::string_view(name).find(options.filter) == std::string_view::npos) {
            continue;
        }
        const auto t0 = Clock::now();
        CheckResult result = fn(options.tolerance_override);
        result.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        results.push_back(std::move(result));
    }
    return results;
}

int report_acceptance_checks(const std::vector<CheckResult> &results, std::ostream &out) {
    int failures = 0;
    for (const CheckResult &r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << sci(r.elapsed_ms)
            << " ms]  " << r.detail << "\n";
        if (!r.pass) {
            ++failures;
        }
    }
    out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) FAILED")
        << " (" << results.size() << " run)\n";
    return failures;
}

}  // namespace cosetsum
