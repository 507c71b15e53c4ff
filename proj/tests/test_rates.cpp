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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <doctest.h>

#include "cosetsum/coset.hpp"
#include "cosetsum/random.hpp"
#include "cosetsum/rates.hpp"

using namespace cosetsum;

namespace {

ComplexMatrix beamsplitter() {
    const double c = 1.0 / std::sqrt(2.0);
    return ComplexMatrix(2, 2, {Complex{c, 0}, Complex{c, 0}, Complex{c, 0}, Complex{-c, 0}});
}

// Classical limit: each photon takes a definite path, interference gone.
double classical_rate(const ComplexMatrix &u, const PhotonConfig &input,
                      const PhotonConfig &output) {
    const std::size_t np = static_cast<std::size_t>(input.photon_count());
    std::vector<int> perm(np);
    std::iota(perm.begin(), perm.end(), 0);
    double total = 0.0;
    do {
        double term = 1.0;
        for (std::size_t k = 0; k < np; ++k) {
            term *= std::norm(u(static_cast<std::size_t>(output.modes()[k]) - 1,
                                static_cast<std::size_t>(input.modes()[static_cast<std::size_t>(perm[k])]) - 1));
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return output.c_factor() * input.c_factor() * total;
}

}  // namespace

TEST_CASE("PhotonConfig multiplicity bookkeeping") {
    const PhotonConfig distinct({1, 2, 3});
    CHECK(distinct.all_distinct());
    CHECK(distinct.c_denominator() == 1);

    const PhotonConfig repeated({1, 1, 2, 2, 2});
    CHECK_FALSE(repeated.all_distinct());
    CHECK(repeated.c_denominator() == 12);  // 2! * 3!
    CHECK(repeated.c_factor() == doctest::Approx(1.0 / 12.0));

    CHECK_THROWS_AS(PhotonConfig({}), std::invalid_argument);
    CHECK_THROWS_AS(PhotonConfig({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PhotonConfig({0, 1}), std::invalid_argument);
}

TEST_CASE("DelaySpec validation") {
    DelaySpec d{{0.0, 1.0}};
    CHECK_NOTHROW(d.validate(2));
    CHECK_THROWS_AS(d.validate(3), std::invalid_argument);
    d.spectral_width = 0.0;
    CHECK_THROWS_AS(d.validate(2), std::invalid_argument);
    d.spectral_width = 1.0;
    d.taus = {0.0, std::nan("")};
    CHECK_THROWS_AS(d.validate(2), std::invalid_argument);
    CHECK(DelaySpec{{1.5, 1.5, 1.5}}.all_equal());
    CHECK_FALSE(DelaySpec{{1.5, 1.5, 1.0}}.all_equal());
}

TEST_CASE("scattering_submatrix keeps the stated rows and columns") {
    const ComplexMatrix u = gaussian_matrix(3, 3, 70);
    const ComplexMatrix s = scattering_submatrix(u, PhotonConfig({2, 3}), PhotonConfig({1, 3}));
    CHECK(s(0, 0) == u(0, 1));
    CHECK(s(0, 1) == u(0, 2));
    CHECK(s(1, 0) == u(2, 1));
    CHECK(s(1, 1) == u(2, 2));

    const ComplexMatrix v = gaussian_matrix(4, 4, 71);
    const ComplexMatrix dup =
        scattering_submatrix(v, PhotonConfig({2, 3, 4}), PhotonConfig({2, 2, 4}));
    for (std::size_t c = 0; c < 3; ++c) {
        CHECK(dup(0, c) == v(1, c + 1));
        CHECK(dup(1, c) == v(1, c + 1));  // duplicated detection row
        CHECK(dup(2, c) == v(3, c + 1));
    }

    CHECK(max_abs_difference(scattering_submatrix(ComplexMatrix::identity(3),
                                                  PhotonConfig({1, 2}), PhotonConfig({1, 2})),
                             ComplexMatrix::identity(2)) == 0.0);

    CHECK_THROWS_AS(scattering_submatrix(u, PhotonConfig({1, 2, 3}), PhotonConfig({1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(scattering_submatrix(u, PhotonConfig({1, 4}), PhotonConfig({1, 2})),
                    std::out_of_range);
}

TEST_CASE("two-photon rate: interference dip and classical plateau") {
    const ComplexMatrix bs = beamsplitter();
    const PhotonConfig both({1, 2});

    CHECK(rate_two_photon(bs, both, both, DelaySpec{{0.0, 0.0}}).value ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rate_two_photon(bs, both, both, DelaySpec{{1e4, 0.0}}).value ==
          doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(rate_two_photon(bs, both, both, DelaySpec{{0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(rate_two_photon(bs, PhotonConfig({1, 1}), both, DelaySpec{{0.0, 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("two-photon closed form matches the oracle, doubled outputs included") {
    RandomStream rng(72);
    const PhotonConfig input({2, 3});
    const auto outputs = {PhotonConfig({1, 3}), PhotonConfig({2, 2}), PhotonConfig({3, 3}),
                          PhotonConfig({1, 2})};
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexMatrix u = haar_unitary(3, 700 + s);
        const DelaySpec delays{{rng.uniform(-2, 2), rng.uniform(-2, 2)}, rng.uniform(0.5, 2.0)};
        for (const PhotonConfig &output : outputs) {
            const RateResult closed = rate_two_photon(u, input, output, delays);
            CHECK(closed.value ==
                  doctest::Approx(rate_oracle(u, input, output, delays)).epsilon(1e-10));
        }
    }
}

TEST_CASE("three-photon rate collapses to the permanent at zero relative delay") {
    const ComplexMatrix u = haar_unitary(4, 73);
    const PhotonConfig input({2, 3, 4});
    for (const PhotonConfig &output :
         {PhotonConfig({1, 2, 4}), PhotonConfig({1, 1, 4}), PhotonConfig({3, 3, 4})}) {
        const RateResult r = rate_three_photon_partial(u, input, output, DelaySpec{{.3, .3, .3}});
        const Complex per = permanent_naive(scattering_submatrix(u, input, output));
        CHECK(r.value == doctest::Approx(output.c_factor() * std::norm(per)).epsilon(1e-11));
    }
}

TEST_CASE("three-photon doubled output in the far-delay limit") {
    // exp(-s^2 tau13^2) underflows to 0, leaving the Per/Imm mixture.
    const ComplexMatrix u = haar_unitary(4, 735);
    const PhotonConfig input({2, 3, 4});
    const PhotonConfig output({2, 2, 4});
    const RateResult r = rate_three_photon_partial(u, input, output, DelaySpec{{0., 0., 1e4}});
    const ComplexMatrix s = scattering_submatrix(u, input, output);
    const Complex per = permanent_naive(s);
    const Complex imm = immanant(s, Partition({2, 1}));
    const double expected = 0.5 * (std::norm(per) / 3.0 + 2.0 / 3.0 * std::norm(imm));
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("three-photon rate matches the oracle on every output pattern") {
    RandomStream rng(74);
    const PhotonConfig input({2, 3, 4});
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexMatrix u = haar_unitary(4, 740 + s);
        const double shared = rng.uniform(-2, 2);
        const DelaySpec delays{{shared, shared, rng.uniform(-2, 2)}, rng.uniform(0.5, 2.0)};
        for (const PhotonConfig &output :
             {PhotonConfig({1, 2, 4}), PhotonConfig({2, 3, 4}), PhotonConfig({1, 1, 4}),
              PhotonConfig({2, 2, 4}), PhotonConfig({1, 4, 4}), PhotonConfig({2, 2, 2})}) {
            const RateResult closed = rate_three_photon_partial(u, input, output, delays);
            CHECK_FALSE(closed.oracle_fallback);
            CHECK(closed.value ==
                  doctest::Approx(rate_oracle(u, input, output, delays)).epsilon(1e-9));
        }
    }
}

TEST_CASE("three-photon distinct-output amplitudes add up to the permanent") {
    const ComplexMatrix u = haar_unitary(4, 75);
    const PhotonConfig input({2, 3, 4});
    const PhotonConfig output({1, 3, 4});
    const RateResult r = rate_three_photon_partial(u, input, output, DelaySpec{{.5, .5, -.4}});
    REQUIRE(r.group_amplitudes.size() == 3);
    const Complex per = permanent_naive(scattering_submatrix(u, input, output));
    const Complex total = r.group_amplitudes[0] + r.group_amplitudes[1] + r.group_amplitudes[2];
    CHECK(std::abs(total - per) < 1e-12);
}

TEST_CASE("three-photon unsupported delay pattern falls back to the oracle") {
    const ComplexMatrix u = haar_unitary(4, 76);
    const PhotonConfig input({2, 3, 4});
    const PhotonConfig output({1, 2, 4});
    const DelaySpec delays{{0.1, 0.7, -0.3}};  // tau1 != tau2
    const RateResult r = rate_three_photon_partial(u, input, output, delays);
    CHECK(r.oracle_fallback);
    CHECK(r.method == "oracle");
    CHECK(r.value == doctest::Approx(rate_oracle(u, input, output, delays)).epsilon(1e-12));
}

TEST_CASE("indistinguishable rate: identity, Hessenberg product, oracle cross-check") {
    const PhotonConfig basis({1, 2, 3});
    CHECK(rate_indistinguishable(ComplexMatrix::identity(3), basis, basis).value ==
          doctest::Approx(1.0));

    // Hessenberg coset: the (1,2,4) detection reduces to a triangular product.
    const ComplexMatrix ubar = factor_output_coset(haar_unitary(4, 77)).coset;
    const PhotonConfig input({2, 3, 4});
    const PhotonConfig tri_out({1, 2, 4});
    const RateResult tri = rate_indistinguishable(ubar, input, tri_out);
    CHECK(tri.method == "indistinguishable_hessenberg");
    const double expected = std::norm(ubar(0, 1) * ubar(1, 2) * ubar(3, 3));
    CHECK(tri.value == doctest::Approx(expected).epsilon(1e-12));

    // Doubled detection carries c = 1/2 and matches the oracle at equal delays.
    const ComplexMatrix u = haar_unitary(4, 78);
    const PhotonConfig doubled({1, 1, 4});
    const RateResult r = rate_indistinguishable(u, input, doubled);
    CHECK(r.value ==
          doctest::Approx(rate_oracle(u, input, doubled, DelaySpec{{1., 1., 1.}})).epsilon(1e-12));
    const Complex per = permanent_ryser(scattering_submatrix(u, input, doubled));
    CHECK(r.value == doctest::Approx(0.5 * std::norm(per)).epsilon(1e-12));

    // Method forcing.
    CHECK(rate_indistinguishable(u, input, doubled, PermanentMethod::kRyser).value ==
          doctest::Approx(r.value));
    CHECK_THROWS_AS(
        rate_indistinguishable(u, input, PhotonConfig({3, 3, 4}), PermanentMethod::kHessenbergDet),
        std::invalid_argument);
}

TEST_CASE("oracle: reality, positivity, and the two endpoint regimes") {
    RandomStream rng(79);
    const PhotonConfig input({1, 2, 3});
    for (std::uint64_t s = 0; s < 10; ++s) {
        const ComplexMatrix u = haar_unitary(4, 790 + s);
        const DelaySpec delays{
            {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}};
        for (const PhotonConfig &output : {PhotonConfig({1, 2, 3}), PhotonConfig({2, 2, 4})}) {
            const OracleDetail detail = rate_oracle_detail(u, input, output, delays);
            CHECK(std::abs(detail.raw_sum.imag()) < 1e-12);
            CHECK(detail.value >= 0.0);
        }
    }

    const ComplexMatrix u = haar_unitary(4, 80);
    const PhotonConfig output({1, 2, 4});
    // Coincident photons: |Per|^2 with the multiplicity weight.
    CHECK(rate_oracle(u, input, output, DelaySpec{{0, 0, 0}}) ==
          doctest::Approx(rate_indistinguishable(u, input, output).value).epsilon(1e-12));
    // Far-separated photons: the classical path sum.
    CHECK(rate_oracle(u, input, output, DelaySpec{{0.0, 1e4, 2e4}}) ==
          doctest::Approx(classical_rate(u, input, output)).epsilon(1e-12));

    CHECK_THROWS_AS(
        rate_oracle(haar_unitary(8, 81), PhotonConfig({1, 2, 3, 4, 5, 6, 7, 8}),
                    PhotonConfig({1, 2, 3, 4, 5, 6, 7, 8}),
                    DelaySpec{{1, 2, 3, 4, 5, 6, 7, 8}}),
        std::invalid_argument);
}

TEST_CASE("two-photon oracle reproduces the Gaussian-overlap closed form") {
    const ComplexMatrix u = haar_unitary(3, 82);
    const PhotonConfig input({1, 3});
    const PhotonConfig output({1, 3});
    const double tau = 0.8;
    const double s = 1.7;
    const ComplexMatrix sub = scattering_submatrix(u, input, output);
    const Complex per = sub(0, 0) * sub(1, 1) + sub(0, 1) * sub(1, 0);
    const Complex det = sub(0, 0) * sub(1, 1) - sub(0, 1) * sub(1, 0);
    const double e = std::exp(-s * s * tau * tau);
    const double expected = 0.5 * (1 + e) * std::norm(per) + 0.5 * (1 - e) * std::norm(det);
    CHECK(rate_oracle(u, input, output, DelaySpec{{tau, 0.0}, s}) ==
          doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("coincidence_rate dispatch") {
    const ComplexMatrix u = haar_unitary(4, 83);
    const PhotonConfig in2({2, 3});
    const PhotonConfig out2({1, 3});
    // A 2x2 submatrix is trivially Hessenberg, so equal delays take the
    // determinant route.
    CHECK(coincidence_rate(u, in2, out2, DelaySpec{{0.4, 0.4}}).method ==
          "indistinguishable_hessenberg");
    CHECK(coincidence_rate(u, in2, out2, DelaySpec{{0.4, 0.0}}).method == "two_photon_closed");

    const PhotonConfig in3({1, 2, 3});
    const PhotonConfig out3({1, 2, 4});
    CHECK(coincidence_rate(u, in3, out3, DelaySpec{{.2, .2, .9}}).method ==
          "three_photon_distinct");
    CHECK(coincidence_rate(u, in3, out3, DelaySpec{{.2, .9, .2}}).method == "oracle");

    const PhotonConfig in4({1, 2, 3, 4});
    const PhotonConfig out4({1, 2, 3, 4});
    const RateResult r4 = coincidence_rate(u, in4, out4, DelaySpec{{.1, .2, .3, .4}});
    CHECK(r4.method == "oracle");
    CHECK(r4.value == doctest::Approx(rate_oracle(u, in4, out4, DelaySpec{{.1, .2, .3, .4}})));
}
