// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 eese contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>

#include <catch2/catch_amalgamated.hpp>

#include "eese/channel.hpp"
#include "eese/rng.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using eese::ChannelMatrix;
using eese::ChannelRng;

namespace {

// Real-valued diagonal channel embedded in a complex matrix.
ChannelMatrix diagonal_channel(const std::vector<double>& entries) {
    ChannelMatrix h(entries.size(), entries.size(), arma::fill::zeros);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        h(i, i) = entries[i];
    }
    return h;
}

}  // namespace

TEST_CASE("same seed reproduces the same channel, different seeds differ") {
    ChannelRng a(42), b(42), c(43);
    const ChannelMatrix ha = eese::generate_channel(a, 4, 16);
    const ChannelMatrix hb = eese::generate_channel(b, 4, 16);
    const ChannelMatrix hc = eese::generate_channel(c, 4, 16);
    REQUIRE(ha.n_rows == 4);
    REQUIRE(ha.n_cols == 16);
    CHECK(arma::approx_equal(ha, hb, "absdiff", 0.0));
    CHECK_FALSE(arma::approx_equal(ha, hc, "absdiff", 1e-12));
}

TEST_CASE("channel entries have unit mean power and balanced components") {
    ChannelRng rng(7);
    const ChannelMatrix h = eese::generate_channel(rng, 1000, 1000);
    const arma::mat power = arma::square(arma::abs(h));
    CHECK_THAT(arma::accu(power) / 1.0e6, WithinAbs(1.0, 0.01));
    CHECK_THAT(arma::accu(arma::real(h)) / 1.0e6, WithinAbs(0.0, 0.01));
    CHECK_THAT(arma::accu(arma::imag(h)) / 1.0e6, WithinAbs(0.0, 0.01));
    CHECK_THAT(arma::accu(arma::square(arma::real(h))) / 1.0e6,
               WithinAbs(0.5, 0.01));
    CHECK_THAT(arma::accu(arma::square(arma::imag(h))) / 1.0e6,
               WithinAbs(0.5, 0.01));
}

TEST_CASE("generate_channel rejects empty shapes") {
    ChannelRng rng(1);
    CHECK_THROWS_AS(eese::generate_channel(rng, 0, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(eese::generate_channel(rng, 4, 0),
                    std::invalid_argument);
}

TEST_CASE("ZF precoder inverts a diagonal channel") {
    const ChannelMatrix h = diagonal_channel({2.0, 4.0});
    const eese::Precoder p = eese::zf_precoder(h);
    CHECK_THAT(std::abs(p.weights(0, 0)), WithinRel(0.5, 1e-12));
    CHECK_THAT(std::abs(p.weights(1, 1)), WithinRel(0.25, 1e-12));
    CHECK_THAT(std::abs(p.weights(0, 1)), WithinAbs(0.0, 1e-14));
    CHECK_THAT(std::abs(p.weights(1, 0)), WithinAbs(0.0, 1e-14));
    // ||V||_F^2 = 1/4 + 1/16 = 0.3125, F = 0.3125 / 2.
    CHECK_THAT(p.normalization, WithinRel(0.15625, 1e-12));
}

TEST_CASE("ZF precoder cancels inter-user interference on random channels") {
    ChannelRng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        const int users = 2 + trial % 7;
        const int antennas = users + 8 + trial % 40;
        const ChannelMatrix h =
            eese::generate_channel(rng, users, antennas);
        const eese::Precoder p = eese::zf_precoder(h);
        const arma::cx_mat identity_error =
            h * p.weights -
            arma::eye<arma::cx_mat>(h.n_rows, h.n_rows);
        CHECK(arma::abs(identity_error).max() < 1e-9);
        CHECK(p.normalization > 0.0);
    }
}

TEST_CASE("ZF precoder reports rank deficiency with the condition number") {
    ChannelMatrix h(2, 4);
    ChannelRng rng(5);
    h.row(0) = eese::generate_channel(rng, 1, 4);
    h.row(1) = h.row(0);  // duplicated user direction
    CHECK_THROWS_WITH(eese::zf_precoder(h),
                      Catch::Matchers::ContainsSubstring("condition"));
}

TEST_CASE("ZF precoder needs at least as many antennas as users") {
    ChannelRng rng(9);
    const ChannelMatrix h = eese::generate_channel(rng, 4, 3);
    CHECK_THROWS_AS(eese::zf_precoder(h), std::invalid_argument);
}

TEST_CASE("norm inverse bounds on an orthogonal channel") {
    const eese::NormInverseBounds b =
        eese::norm_inverse_bounds(diagonal_channel({1.0, 2.0}));
    CHECK_THAT(b.exact, WithinRel(0.8, 1e-12));
    CHECK_THAT(b.harmonic, WithinRel(0.8, 1e-12));
    CHECK_THAT(b.bound, WithinRel(1.25, 1e-12));
}

TEST_CASE("norm inverse bounds are ordered on random channels") {
    ChannelRng rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        const ChannelMatrix h = eese::generate_channel(rng, 4, 32);
        const eese::NormInverseBounds b = eese::norm_inverse_bounds(h);
        CHECK(b.exact > 0.0);
        CHECK(b.exact <= b.harmonic * (1.0 + 1e-12));
        CHECK(b.harmonic <= b.bound * (1.0 + 1e-12));
    }
}

TEST_CASE("antenna selection keeps the strongest columns, ties stay stable") {
    // Column gains 9, 1, 4, 4: the tie between columns 2 and 3 must resolve
    // to the lower index.
    ChannelMatrix h(1, 4, arma::fill::zeros);
    h(0, 0) = 3.0;
    h(0, 1) = 1.0;
    h(0, 2) = std::complex<double>(0.0, 2.0);
    h(0, 3) = 2.0;
    const eese::AntennaSelection sel = eese::select_antennas(h, 2);
    REQUIRE(sel.indices.n_elem == 2);
    CHECK(sel.indices(0) == 0);
    CHECK(sel.indices(1) == 2);
    CHECK_THAT(sel.gains(0), WithinRel(9.0, 1e-12));
    CHECK_THAT(sel.gains(1), WithinRel(4.0, 1e-12));
}

TEST_CASE("antenna selection maximizes the total gain over all subsets") {
    ChannelRng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const ChannelMatrix h = eese::generate_channel(rng, 3, 10);
        const arma::vec gains =
            arma::sum(arma::square(arma::abs(h)), 0).t();
        for (int count = 1; count <= 10; count += 3) {
            const eese::AntennaSelection sel =
                eese::select_antennas(h, count);
            const double selected_total = arma::accu(sel.gains);
            // Exhaustive scan over all C(10, count) subsets.
            double best = 0.0;
            for (unsigned mask = 0; mask < (1u << 10); ++mask) {
                if (__builtin_popcount(mask) != count) {
                    continue;
                }
                double total = 0.0;
                for (int j = 0; j < 10; ++j) {
                    if (mask & (1u << j)) {
                        total += gains(static_cast<arma::uword>(j));
                    }
                }
                best = std::max(best, total);
            }
            CHECK_THAT(selected_total, WithinRel(best, 1e-12));
        }
    }
}

TEST_CASE("antenna selection validates the requested count") {
    ChannelRng rng(8);
    const ChannelMatrix h = eese::generate_channel(rng, 2, 6);
    CHECK_THROWS_AS(eese::select_antennas(h, 0), std::invalid_argument);
    CHECK_THROWS_AS(eese::select_antennas(h, 7), std::invalid_argument);
}

TEST_CASE("instantaneous capacity of reference channels") {
    const ChannelMatrix identity = diagonal_channel({1.0, 1.0});
    CHECK_THAT(eese::instantaneous_capacity(identity, 3.0, 1.0, 1.0),
               WithinRel(2.643856189774725, 1e-12));
    CHECK_THAT(eese::instantaneous_capacity(diagonal_channel({2.0, 4.0}),
                                            1.0, 1.0, 1.0),
               WithinRel(4.140778655782796, 1e-12));
    // Bandwidth enters linearly.
    CHECK_THAT(eese::instantaneous_capacity(identity, 3.0, 2.0e7, 1.0),
               WithinRel(2.0e7 * 2.643856189774725, 1e-12));
}

TEST_CASE("instantaneous capacity validates its parameters") {
    const ChannelMatrix h = diagonal_channel({1.0, 1.0});
    CHECK_THROWS_AS(eese::instantaneous_capacity(h, -1.0, 1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(eese::instantaneous_capacity(h, 1.0, 0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(eese::instantaneous_capacity(h, 1.0, 1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("selected capacity uses the total selected gain") {
    ChannelMatrix h(1, 4, arma::fill::zeros);
    h(0, 0) = 3.0;
    h(0, 1) = 1.0;
    h(0, 2) = std::complex<double>(0.0, 2.0);
    h(0, 3) = 2.0;
    // Selected gains 9 + 4 = 13: capacity log2(1 + 13) = log2(14).
    CHECK_THAT(eese::selected_capacity(h, 2, 1.0, 1.0),
               WithinRel(3.807354922057604, 1e-12));
}

TEST_CASE("received signal reduces to scaled symbols plus noise") {
    ChannelRng rng(77);
    const ChannelMatrix h = eese::generate_channel(rng, 4, 16);
    arma::cx_vec symbols(4);
    arma::cx_vec noise(4);
    for (arma::uword k = 0; k < 4; ++k) {
        symbols(k) = rng.complex_gaussian();
        noise(k) = 0.1 * rng.complex_gaussian();
    }
    const double rho = 2.0;
    const arma::cx_vec received =
        eese::verify_received_signal(h, rho, symbols, noise);

    const eese::Precoder p = eese::zf_precoder(h);
    const double scale = std::sqrt(rho / (4.0 * p.normalization));
    for (arma::uword k = 0; k < 4; ++k) {
        CHECK_THAT(std::abs(received(k) - noise(k) - scale * symbols(k)),
                   WithinAbs(0.0, 1e-9));
    }
}

TEST_CASE("received signal with zero noise is exactly the scaled symbols") {
    ChannelRng rng(78);
    const ChannelMatrix h = eese::generate_channel(rng, 3, 12);
    arma::cx_vec symbols(3, arma::fill::ones);
    arma::cx_vec noise(3, arma::fill::zeros);
    const arma::cx_vec received =
        eese::verify_received_signal(h, 1.0, symbols, noise);
    const eese::Precoder p = eese::zf_precoder(h);
    const double scale = std::sqrt(1.0 / (3.0 * p.normalization));
    for (arma::uword k = 0; k < 3; ++k) {
        CHECK_THAT(std::abs(received(k) - scale * symbols(k)),
                   WithinAbs(0.0, 1e-9));
    }
}

TEST_CASE("received signal validates vector sizes") {
    ChannelRng rng(79);
    const ChannelMatrix h = eese::generate_channel(rng, 3, 12);
    const arma::cx_vec three(3, arma::fill::ones);
    const arma::cx_vec two(2, arma::fill::ones);
    CHECK_THROWS_AS(eese::verify_received_signal(h, 1.0, two, three),
                    std::invalid_argument);
    CHECK_THROWS_AS(eese::verify_received_signal(h, 1.0, three, two),
                    std::invalid_argument);
    CHECK_THROWS_AS(eese::verify_received_signal(h, -1.0, three, three),
                    std::invalid_argument);
}

TEST_CASE("column gains of random channels concentrate around the user "
          "count") {
    // gamma_j sums K unit-exponential powers, so its mean is K.
    ChannelRng rng(55);
    const int users = 8;
    double total = 0.0;
    const int draws = 2000;
    for (int i = 0; i < draws; ++i) {
        const ChannelMatrix h = eese::generate_channel(rng, users, 8);
        total += arma::accu(arma::square(arma::abs(h))) / 8.0;
    }
    CHECK_THAT(total / draws, WithinRel(static_cast<double>(users), 0.02));
}
