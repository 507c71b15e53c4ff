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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosetsum/coset.hpp"
#include "cosetsum/matrix_json.hpp"
#include "cosetsum/random.hpp"
#include "cosetsum/rates.hpp"
#include "cosetsum/selfcheck.hpp"
#include "cosetsum/sumrules.hpp"

namespace cosetsum::cli {

namespace {

using nlohmann::ordered_json;

struct SourceOptions {
    std::string matrix_path;
    int haar_n = 0;
    std::uint64_t seed = 0;
};

ComplexMatrix resolve_matrix(const SourceOptions &source) {
    if (!source.matrix_path.empty()) {
        return load_matrix(source.matrix_path);
    }
    if (source.haar_n < 1) {
        throw CliParseError("exactly one matrix source is required: --matrix FILE or --haar N");
    }
    return haar_unitary(static_cast<std::size_t>(source.haar_n), source.seed);
}

ordered_json source_json(const SourceOptions &source) {
    ordered_json j;
    if (!source.matrix_path.empty()) {
        j["file"] = source.matrix_path;
    } else {
        j["haar"] = source.haar_n;
        j["seed"] = source.seed;
    }
    return j;
}

ordered_json complex_json(const Complex &z) {
    return ordered_json::array({z.real(), z.imag()});
}

ordered_json matrix_json(const ComplexMatrix &m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto data = ordered_json::array();
    for (const Complex &z : m.data()) {
        data.push_back(complex_json(z));
    }
    j["data"] = std::move(data);
    return j;
}

ordered_json rotations_json(const std::vector<ModeRotation> &rotations) {
    auto list = ordered_json::array();
    for (const ModeRotation &rot : rotations) {
        ordered_json j;
        j["modes"] = ordered_json::array({rot.mode_i, rot.mode_j});
        j["alpha"] = rot.alpha;
        j["beta"] = rot.beta;
        j["gamma"] = rot.gamma;
        list.push_back(std::move(j));
    }
    return list;
}

ordered_json decomposition_json(const RateResult &rate) {
    ordered_json j = ordered_json::object();
    for (const auto &[partition, amplitudes] : rate.decomposition) {
        auto list = ordered_json::array();
        for (const Complex &z : amplitudes) {
            list.push_back(complex_json(z));
        }
        j[partition.to_string()] = std::move(list);
    }
    return j;
}

void emit(std::ostream &out, const ordered_json &doc) {
    out << doc.dump(2) << "\n";
}

std::string csv_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct FactorizeOptions {
    SourceOptions source;
    std::string side = "output";
    bool alternate_zero_row = false;
};

int cmd_factorize(const FactorizeOptions &opt, std::ostream &out) {
    const ComplexMatrix u = resolve_matrix(opt.source);
    const Side side = opt.side == "input" ? Side::kInput : Side::kOutput;
    const CosetFactorization f = side == Side::kOutput
                                     ? factor_output_coset(u, opt.alternate_zero_row)
                                     : factor_input_coset(u);
    const std::size_t n = u.rows();

    auto zero_positions = ordered_json::array();
    double max_structural = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const bool structural = side == Side::kOutput ? (c >= r + 2) : (r >= c + 2);
            if (structural && !opt.alternate_zero_row) {
                zero_positions.push_back(ordered_json::array({r + 1, c + 1}));
                max_structural = std::max(max_structural, std::abs(f.coset(r, c)));
            }
        }
    }

    ordered_json doc;
    doc["command"] = "factorize";
    doc["side"] = to_string(f.side);
    doc["n"] = n;
    doc["source"] = source_json(opt.source);
    doc["input_unitarity_defect"] = f.input_unitarity_defect;
    doc["nonunitary_warning"] = f.nonunitary_warning;
    doc["rotations"] = rotations_json(f.rotations);
    doc["coset"] = matrix_json(f.coset);
    if (!opt.alternate_zero_row) {
        ordered_json zp;
        zp["positions"] = std::move(zero_positions);
        zp["max_abs"] = max_structural;
        doc["zero_pattern"] = std::move(zp);
    }
    doc["removed_parameter_count"] = f.removed_parameter_count;
    doc["reconstruction_error"] = f.reconstruction_error;
    emit(out, doc);
    return kExitOk;
}

struct RateOptions {
    SourceOptions source;
    std::string input;
    std::string output;
    std::string tau;
    double spectral_width = 1.0;
    bool force_oracle = false;
};

int cmd_rate(const RateOptions &opt, std::ostream &out) {
    const ComplexMatrix u = resolve_matrix(opt.source);
    const PhotonConfig input(parse_index_list(opt.input));
    const PhotonConfig output(parse_index_list(opt.output));
    const DelaySpec delays{parse_double_list(opt.tau), opt.spectral_width};

    RateResult rate;
    if (opt.force_oracle) {
        rate.method = "oracle";
        rate.value = rate_oracle(u, input, output, delays);
    } else {
        rate = coincidence_rate(u, input, output, delays);
    }

    ordered_json doc;
    doc["command"] = "rate";
    doc["n"] = u.rows();
    doc["source"] = source_json(opt.source);
    doc["input"] = input.modes();
    doc["output"] = output.modes();
    doc["tau"] = delays.taus;
    doc["spectral_width"] = delays.spectral_width;
    doc["method"] = rate.method;
    doc["value"] = rate.value;
    doc["clamped"] = rate.clamped;
    doc["oracle_fallback"] = rate.oracle_fallback;
    doc["decomposition"] = decomposition_json(rate);
    if (!rate.group_amplitudes.empty()) {
        auto list = ordered_json::array();
        for (const Complex &z : rate.group_amplitudes) {
            list.push_back(complex_json(z));
        }
        doc["group_amplitudes"] = std::move(list);
    }
    emit(out, doc);
    return kExitOk;
}

struct SumcheckOptions {
    SourceOptions source;
    std::string side = "output";
    std::string input;
    std::string output;
    std::string tau;
    double spectral_width = 1.0;
    int fixed_mode = 0;
    std::string method = "auto";
    double tolerance = kSumInvarianceTol;
    std::string format = "json";
};

int cmd_sumcheck(const SumcheckOptions &opt, std::ostream &out) {
    const ComplexMatrix u = resolve_matrix(opt.source);
    const Side side = opt.side == "input" ? Side::kInput : Side::kOutput;
    const std::string &fixed_text = side == Side::kOutput ? opt.input : opt.output;
    if (fixed_text.empty()) {
        throw CliParseError(side == Side::kOutput
                                ? "sumcheck over outputs needs --input (the fixed input channels)"
                                : "sumcheck over inputs needs --output (the fixed output channels)");
    }
    const PhotonConfig fixed_config(parse_index_list(fixed_text));

    SumSpec spec;
    spec.side = side;
    spec.fixed_mode = opt.fixed_mode;
    spec.photon_number = fixed_config.photon_count();
    spec.delays = DelaySpec{parse_double_list(opt.tau), opt.spectral_width};
    spec.tolerance = opt.tolerance;
    if (opt.method == "ryser") {
        spec.method = SumMethod::kRyser;
    } else if (opt.method == "both") {
        spec.method = SumMethod::kBoth;
    } else if (opt.method == "auto") {
        spec.method = SumMethod::kAuto;
    } else {
        throw CliParseError("unknown --method '" + opt.method + "' (auto|ryser|both)");
    }

    const SumReport report = side == Side::kOutput ? sum_over_outputs(u, fixed_config, spec)
                                                   : sum_over_inputs(u, fixed_config, spec);

    if (opt.format == "csv") {
        out << "configuration,c_factor,rate_full,rate_coset,method_full,method_coset\n";
        for (const SumTerm &term : report.terms) {
            out << '"' << term.config.to_string() << '"' << ',' << csv_number(term.c_factor)
                << ',' << csv_number(term.rate_full) << ',' << csv_number(term.rate_coset) << ','
                << term.method_full << ',' << term.method_coset << "\n";
        }
    } else {
        ordered_json doc;
        doc["command"] = "sumcheck";
        doc["side"] = to_string(report.side);
        doc["n"] = u.rows();
        doc["source"] = source_json(opt.source);
        doc[side == Side::kOutput ? "input" : "output"] = fixed_config.modes();
        doc["tau"] = spec.delays.taus;
        doc["spectral_width"] = spec.delays.spectral_width;
        doc["fixed_mode"] = opt.fixed_mode == 0 ? static_cast<int>(u.rows()) : opt.fixed_mode;
        auto terms = ordered_json::array();
        for (const SumTerm &term : report.terms) {
            ordered_json t;
            t["configuration"] = term.config.modes();
            t["c_factor"] = term.c_factor;
            t["rate_full"] = term.rate_full;
            t["rate_coset"] = term.rate_coset;
            t["method_full"] = term.method_full;
            t["method_coset"] = term.method_coset;
            terms.push_back(std::move(t));
        }
        doc["terms"] = std::move(terms);
        doc["sum_full"] = report.sum_full;
        doc["sum_coset"] = report.sum_coset;
        doc["discrepancy"] = report.discrepancy;
        doc["max_term_discrepancy"] = report.max_term_discrepancy;
        doc["method"] = report.method;
        doc["tolerance"] = spec.tolerance;
        doc["invariance_ok"] = report.invariance_ok;
        if (report.has_both_methods) {
            doc["sum_coset_ryser"] = report.sum_coset_ryser;
            doc["sum_coset_hessenberg"] = report.sum_coset_hessenberg;
        }
        emit(out, doc);
    }
    return report.invariance_ok ? kExitOk : kExitInvariance;
}

struct BenchOptions {
    int min_n = 4;
    int max_n = 14;
    int reps = 5;
    std::uint64_t seed = 1;
};

int cmd_bench(const BenchOptions &opt, std::ostream &out) {
    if (opt.reps < 1) {
        throw CliParseError("--reps must be at least 1");
    }
    if (opt.max_n > 24) {
        throw CliParseError("--max-n capped at 24 (Ryser cost doubles per mode)");
    }
    if (opt.min_n <= opt.max_n && opt.min_n < 2) {
        throw CliParseError("bench sizes start at n=2");
    }
    out << "n,method,mean_ns,result_checksum\n";
    using Clock = std::chrono::steady_clock;
    for (int n = opt.min_n; n <= opt.max_n; ++n) {
        const ComplexMatrix hess =
            factor_output_coset(haar_unitary(static_cast<std::size_t>(n), opt.seed)).coset;

        struct Method {
            const char *name;
            Complex (*eval)(const ComplexMatrix &);
        };
        const Method methods[] = {
            {"ryser", [](const ComplexMatrix &m) { return permanent_ryser(m); }},
            {"hessenberg_det", [](const ComplexMatrix &m) { return permanent_hessenberg(m, kHessenbergTol); }},
        };
        for (const Method &method : methods) {
            Complex value{};
            const auto t0 = Clock::now();
            for (int r = 0; r < opt.reps; ++r) {
                value = method.eval(hess);
            }
            const auto t1 = Clock::now();
            const double mean_ns =
                std::chrono::duration<double, std::nano>(t1 - t0).count() / opt.reps;
            char checksum[40];
            std::snprintf(checksum, sizeof(checksum), "%.10e", std::abs(value));
            out << n << ',' << method.name << ',' << csv_number(mean_ns) << ',' << checksum
                << "\n";
        }
    }
    return kExitOk;
}

struct SelftestOptions {
    std::string filter;
    double tolerance = 0.0;
};

int cmd_selftest(const SelftestOptions &opt, std::ostream &out) {
    CheckOptions options;
    options.filter = opt.filter;
    options.tolerance_override = opt.tolerance;
    const auto results = run_acceptance_checks(options);
    const int failures = report_acceptance_checks(results, out);
    return failures == 0 ? kExitOk : kExitInvariance;
}

void add_source_flags(CLI::App *cmd, SourceOptions &source) {
    auto *matrix = cmd->add_option("--matrix", source.matrix_path, "Matrix JSON file");
    auto *haar = cmd->add_option("--haar", source.haar_n, "Sample a Haar-random n x n unitary")
                     ->check(CLI::Range(1, 24));
    cmd->add_option("--seed", source.seed, "Seed for --haar (default 0)");
    matrix->excludes(haar);
    haar->excludes(matrix);
}

}  // namespace

std::vector<int> parse_index_list(const std::string &text) {
    std::vector<int> out;
    std::size_t pos = 0;
    if (text.empty()) {
        throw CliParseError("empty channel list");
    }
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(value);
        } catch (const std::exception &) {
            throw CliParseError("cannot parse '" + item + "' in channel list '" + text + "'");
        }
        pos = comma + 1;
        if (comma == text.size()) {
            break;
        }
    }
    return out;
}

std::vector<double> parse_double_list(const std::string &text) {
    std::vector<double> out;
    std::size_t pos = 0;
    if (text.empty()) {
        throw CliParseError("empty delay list");
    }
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const double value = std::stod(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(value);
        } catch (const std::exception &) {
            throw CliParseError("cannot parse '" + item + "' in delay list '" + text + "'");
        }
        pos = comma + 1;
        if (comma == text.size()) {
            break;
        }
    }
    return out;
}

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"coincidence rates, coset factorizations and sum-rule checks "
                 "for linear interferometers"};
    app.require_subcommand(1);

    FactorizeOptions factorize_opt;
    auto *factorize = app.add_subcommand("factorize", "Strip an SU(n-1) factor off a matrix");
    add_source_flags(factorize, factorize_opt.source);
    factorize->add_option("--side", factorize_opt.side, "output (U = R*Ubar) or input (U = Utilde*R)")
        ->check(CLI::IsMember({"output", "input"}));
    factorize->add_flag("--alternate-zero-row", factorize_opt.alternate_zero_row,
                        "Place the last-column zero on row 2 instead of row 1 (output side)");

    RateOptions rate_opt;
    auto *rate = app.add_subcommand("rate", "Coincidence rate for one input/output pair");
    add_source_flags(rate, rate_opt.source);
    rate->add_option("--input", rate_opt.input, "Input channels, e.g. 2,3")->required();
    rate->add_option("--output", rate_opt.output, "Output channels, e.g. 1,3")->required();
    rate->add_option("--tau", rate_opt.tau, "Arrival times, one per input photon")->required();
    rate->add_option("--spectral-width", rate_opt.spectral_width, "Gaussian spectral width s");
    rate->add_flag("--oracle", rate_opt.force_oracle, "Force the brute-force evaluation");

    SumcheckOptions sumcheck_opt;
    auto *sumcheck = app.add_subcommand("sumcheck", "Verify a sum rule against the coset matrix");
    add_source_flags(sumcheck, sumcheck_opt.source);
    sumcheck->add_option("--side", sumcheck_opt.side, "Sum over outputs or over inputs")
        ->check(CLI::IsMember({"output", "input"}));
    sumcheck->add_option("--input", sumcheck_opt.input, "Fixed input channels (output-side sums)");
    sumcheck->add_option("--output", sumcheck_opt.output, "Fixed output channels (input-side sums)");
    sumcheck->add_option("--tau", sumcheck_opt.tau, "Arrival times, one per photon")->required();
    sumcheck->add_option("--spectral-width", sumcheck_opt.spectral_width, "Gaussian spectral width s");
    sumcheck->add_option("--fixed-mode", sumcheck_opt.fixed_mode,
                         "Mode that always holds one photon (default: n)");
    sumcheck->add_option("--method", sumcheck_opt.method, "auto | ryser | both");
    sumcheck->add_option("--tolerance", sumcheck_opt.tolerance, "Relative invariance tolerance")
        ->check(CLI::PositiveNumber);
    sumcheck->add_option("--format", sumcheck_opt.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    BenchOptions bench_opt;
    auto *bench = app.add_subcommand("bench", "Time Ryser vs determinant permanents (CSV)");
    bench->add_option("--min-n", bench_opt.min_n, "Smallest size");
    bench->add_option("--max-n", bench_opt.max_n, "Largest size");
    bench->add_option("--reps", bench_opt.reps, "Repetitions per timing");
    bench->add_option("--seed", bench_opt.seed, "Seed for the Haar inputs");

    SelftestOptions selftest_opt;
    auto *selftest = app.add_subcommand("selftest", "Run the acceptance checks");
    selftest->add_option("--filter", selftest_opt.filter, "Only checks containing this substring");
    selftest->add_option("--tolerance", selftest_opt.tolerance,
                         "Override the primary tolerance of every check")
        ->check(CLI::PositiveNumber);

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (app.got_subcommand(factorize)) {
            return cmd_factorize(factorize_opt, out);
        }
        if (app.got_subcommand(rate)) {
            return cmd_rate(rate_opt, out);
        }
        if (app.got_subcommand(sumcheck)) {
            return cmd_sumcheck(sumcheck_opt, out);
        }
        if (app.got_subcommand(bench)) {
            return cmd_bench(bench_opt, out);
        }
        if (app.got_subcommand(selftest)) {
            return cmd_selftest(selftest_opt, out);
        }
        err << "error: no command given\n";
        return kExitParse;
    } catch (const MatrixParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CliParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitDimension;
    }
}

}  // namespace cosetsum::cli
