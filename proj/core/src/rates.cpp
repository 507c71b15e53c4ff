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

#include "cosetsum/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cosetsum {

namespace {

constexpr double kNegativeClampTol = 1e-12;

void check_pair(const ComplexMatrix &u, const PhotonConfig &input, const PhotonConfig &output,
                const char *who) {
    if (!u.is_square()) {
        throw std::invalid_argument(std::string(who) + ": scattering matrix must be square");
    }
    if (input.photon_count() != output.photon_count()) {
        throw std::invalid_argument(std::string(who) + ": input has " +
                                    std::to_string(input.photon_count()) + " photons, output " +
                                    std::to_string(output.photon_count()));
    }
    const int n = static_cast<int>(u.rows());
    if (input.max_mode() > n || output.max_mode() > n) {
        throw std::out_of_range(std::string(who) + ": configuration references a mode beyond " +
                                std::to_string(n));
    }
}

double clamp_rate(double value, bool &clamped) {
    if (value >= 0.0) {
        return value;
    }
    if (value < -kNegativeClampTol) {
        throw std::runtime_error("rate evaluated to " + std::to_string(value) +
                                 ", far below zero; inputs are likely corrupt");
    }
    clamped = true;
    return 0.0;
}

// Pairwise indistinguishability exp(-s^2 (ta - tb)^2); exact 1 for equal delays.
double overlap_weight(double ta, double tb, double s) {
    if (ta == tb) {
        return 1.0;
    }
    const double x = s * (ta - tb);
    return std::exp(-x * x);
}

// Submatrix with explicitly reordered input columns: column l is taken from
// input mode input.modes[order[l]]. Used by the three-photon closed form,
// which needs the (2,1)-immanants of column permutations while keeping the
// delay-to-photon association intact.
ComplexMatrix submatrix_with_column_order(const ComplexMatrix &u, const PhotonConfig &input,
                                          const PhotonConfig &output,
                                          const std::vector<std::size_t> &order) {
    const std::size_t np = static_cast<std::size_t>(input.photon_count());
    ComplexMatrix s(np, np);
    for (std::size_t r = 0; r < np; ++r) {
        const std::size_t row = static_cast<std::size_t>(output.modes()[r]) - 1;
        for (std::size_t c = 0; c < np; ++c) {
            const std::size_t col = static_cast<std::size_t>(input.modes()[order[c]]) - 1;
            s(r, c) = u(row, col);
        }
    }
    return s;
}

const Partition &partition_2() {
    static const Partition p({2});
    return p;
}
const Partition &partition_11() {
    static const Partition p({1, 1});
    return p;
}
const Partition &partition_3() {
    static const Partition p({3});
    return p;
}
const Partition &partition_21() {
    static const Partition p({2, 1});
    return p;
}

}  // namespace

ComplexMatrix scattering_submatrix(const ComplexMatrix &u, const PhotonConfig &input,
                                   const PhotonConfig &output) {
    check_pair(u, input, output, "scattering_submatrix");
    const std::size_t np = static_cast<std::size_t>(input.photon_count());
    std::vector<std::size_t> identity_order(np);
    std::iota(identity_order.begin(), identity_order.end(), 0);
    return submatrix_with_column_order(u, input, output, identity_order);
}

RateResult rate_two_photon(const ComplexMatrix &u, const PhotonConfig &input,
                           const PhotonConfig &output, const DelaySpec &delays) {
    check_pair(u, input, output, "rate_two_photon");
    if (input.photon_count() != 2) {
        throw std::invalid_argument("rate_two_photon: needs exactly 2 photons");
    }
    if (!input.all_distinct()) {
        throw std::invalid_argument("rate_two_photon: input channels must be distinct");
    }
    delays.validate(2);

    const ComplexMatrix s = scattering_submatrix(u, input, output);
    const Complex per = s(0, 0) * s(1, 1) + s(0, 1) * s(1, 0);
    const Complex det = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
    const double e = overlap_weight(delays.taus[0], delays.taus[1], delays.spectral_width);

    RateResult result;
    result.method = "two_photon_closed";
    result.decomposition[partition_2()] = {per};
    result.decomposition[partition_11()] = {det};
    const double raw = output.c_factor() *
                       (0.5 * (1.0 + e) * std::norm(per) + 0.5 * (1.0 - e) * std::norm(det));
    result.value = clamp_rate(raw, result.clamped);
    return result;
}

RateResult rate_three_photon_partial(const ComplexMatrix &u, const PhotonConfig &input,
                                     const PhotonConfig &output, const DelaySpec &delays) {
    check_pair(u, input, output, "rate_three_photon_partial");
    if (input.photon_count() != 3) {
        throw std::invalid_argument("rate_three_photon_partial: needs exactly 3 photons");
    }
    if (!input.all_distinct()) {
        throw std::invalid_argument("rate_three_photon_partial: input channels must be distinct");
    }
    delays.validate(3);

    if (delays.taus[0] != delays.taus[1]) {
        // Unsupported delay pattern: answer with the oracle and say so.
        RateResult result;
        result.method = "oracle";
        result.oracle_fallback = true;
        result.value = rate_oracle(u, input, output, delays);
        return result;
    }

    const double g =
        overlap_weight(delays.taus[0], delays.taus[2], delays.spectral_width);
    const ComplexMatrix s = scattering_submatrix(u, input, output);
    const Complex per = permanent_naive(s);

    RateResult result;
    result.decomposition[partition_3()] = {per};

    const auto &modes = output.modes();
    const bool doubled_leading = modes[0] == modes[1] && modes[1] != modes[2];

    if (output.all_distinct() || !doubled_leading) {
        // Group the six permutation amplitudes by which detector slot
        // receives the delayed photon (the one at input position 3). Each
        // group amplitude is expressible through Per and (2,1)-immanants of
        // column reorderings of S:
        //   A_slot3 = (Per + I_123 + I_213) / 3
        //   A_slot2 = (Per + I_132 + I_231) / 3
        //   A_slot1 = (Per - I_123 - I_132 - I_213 - I_231) / 3
        // where I_abc is the (2,1)-immanant of S with columns in order a,b,c.
        // The rate is |A1|^2 + |A2|^2 + |A3|^2 plus g times the cross terms,
        // i.e. g|Per|^2 + (1-g) sum |A_k|^2; both forms are used below.
        const Complex i123 = immanant(s, partition_21());
        const Complex i132 =
            immanant(submatrix_with_column_order(u, input, output, {0, 2, 1}), partition_21());
        const Complex i213 =
            immanant(submatrix_with_column_order(u, input, output, {1, 0, 2}), partition_21());
        const Complex i231 =
            immanant(submatrix_with_column_order(u, input, output, {1, 2, 0}), partition_21());

        const Complex a_slot3 = (per + i123 + i213) / 3.0;
        const Complex a_slot2 = (per + i132 + i231) / 3.0;
        const Complex a_slot1 = (per - i123 - i132 - i213 - i231) / 3.0;
        result.group_amplitudes = {a_slot3, a_slot2, a_slot1};
        result.decomposition[partition_21()] = {i123, i132, i213, i231};

        const double diag =
            std::norm(a_slot3) + std::norm(a_slot2) + std::norm(a_slot1);
        const double cross =
            2.0 * (std::conj(a_slot3) * a_slot2 + std::conj(a_slot2) * a_slot1 +
                   std::conj(a_slot1) * a_slot3)
                      .real();
        result.method = output.all_distinct() ? "three_photon_distinct" : "three_photon_grouped";
        const double raw = output.c_factor() * (diag + g * cross);
        result.value = clamp_rate(raw, result.clamped);
        return result;
    }

    // Doubled detection (q,q,p): the submatrix has two equal leading rows and
    // the rate closes over the permanent and one (2,1)-immanant.
    const Complex imm = immanant(s, partition_21());
    result.decomposition[partition_21()] = {imm};
    result.method = "three_photon_doubled";
    const double raw = output.c_factor() * ((1.0 + 2.0 * g) / 3.0 * std::norm(per) +
                                            2.0 / 3.0 * (1.0 - g) * std::norm(imm));
    result.value = clamp_rate(raw, result.clamped);
    return result;
}

RateResult rate_indistinguishable(const ComplexMatrix &u, const PhotonConfig &input,
                                  const PhotonConfig &output, PermanentMethod method) {
    check_pair(u, input, output, "rate_indistinguishable");
    const ComplexMatrix s = scattering_submatrix(u, input, output);

    bool hessenberg_path = false;
    switch (method) {
        case PermanentMethod::kAuto:
            hessenberg_path = is_upper_hessenberg(s) || is_lower_hessenberg(s);
            break;
        case PermanentMethod::kRyser:
            hessenberg_path = false;
            break;
        case PermanentMethod::kHessenbergDet:
            hessenberg_path = true;  // permanent_hessenberg throws if it does not apply
            break;
    }

    const Complex per = hessenberg_path ? permanent_hessenberg(s) : permanent_ryser(s);

    RateResult result;
    result.method = hessenberg_path ? "indistinguishable_hessenberg" : "indistinguishable_ryser";
    result.decomposition[Partition(std::vector<int>{input.photon_count()})] = {per};
    result.value = output.c_factor() * input.c_factor() * std::norm(per);
    return result;
}

OracleDetail rate_oracle_detail(const ComplexMatrix &u, const PhotonConfig &input,
                                const PhotonConfig &output, const DelaySpec &delays) {
    check_pair(u, input, output, "rate_oracle");
    const int np = input.photon_count();
    if (np > 7) {
        throw std::invalid_argument("rate_oracle: photon number " + std::to_string(np) +
                                    " exceeds the double-factorial-sum guard (7)");
    }
    delays.validate(np);

    // Enumerate S_np once; amplitudes and permuted delay vectors per element.
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<std::size_t>(np));
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    const std::size_t count = perms.size();

    std::vector<Complex> amplitudes(count);
    std::vector<std::vector<double>> permuted_taus(count,
                                                   std::vector<double>(static_cast<std::size_t>(np)));
    for (std::size_t a = 0; a < count; ++a) {
        Complex amp{1.0, 0.0};
        for (int k = 0; k < np; ++k) {
            const std::size_t row = static_cast<std::size_t>(output.modes()[static_cast<std::size_t>(k)]) - 1;
            const std::size_t col =
                static_cast<std::size_t>(input.modes()[static_cast<std::size_t>(perms[a][static_cast<std::size_t>(k)])]) - 1;
            amp *= u(row, col);
            permuted_taus[a][static_cast<std::size_t>(k)] =
                delays.taus[static_cast<std::size_t>(perms[a][static_cast<std::size_t>(k)])];
        }
        amplitudes[a] = amp;
    }

    const double s2_half = 0.5 * delays.spectral_width * delays.spectral_width;
    Complex total{0.0, 0.0};
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            double sq = 0.0;
            for (int k = 0; k < np; ++k) {
                const double d = permuted_taus[a][static_cast<std::size_t>(k)] -
                                 permuted_taus[b][static_cast<std::size_t>(k)];
                sq += d * d;
            }
            const double weight = sq == 0.0 ? 1.0 : std::exp(-s2_half * sq);
            total += amplitudes[a] * std::conj(amplitudes[b]) * weight;
        }
    }

    OracleDetail detail;
    detail.raw_sum = output.c_factor() * input.c_factor() * total;
    detail.value = clamp_rate(detail.raw_sum.real(), detail.clamped);
    return detail;
}

double rate_oracle(const ComplexMatrix &u, const PhotonConfig &input, const PhotonConfig &output,
                   const DelaySpec &delays) {
    return rate_oracle_detail(u, input, output, delays).value;
}

RateResult coincidence_rate(const ComplexMatrix &u, const PhotonConfig &input,
                            const PhotonConfig &output, const DelaySpec &delays,
                            PermanentMethod method) {
    delays.validate(input.photon_count());
    if (delays.all_equal()) {
        return rate_indistinguishable(u, input, output, method);
    }
    const int np = input.photon_count();
    if (np == 2 && input.all_distinct()) {
        return rate_two_photon(u, input, output, delays);
    }
    if (np == 3 && input.all_distinct() && delays.taus[0] == delays.taus[1]) {
        return rate_three_photon_partial(u, input, output, delays);
    }
    RateResult result;
    result.method = "oracle";
    result.value = rate_oracle(u, input, output, delays);
    return result;
}

}  // namespace cosetsum
