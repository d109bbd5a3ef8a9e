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
#include <cstdint>

#include <catch2/catch_amalgamated.hpp>

#include "eese/montecarlo.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using eese::Estimator;
using eese::SampleStats;
using eese::SystemConfig;
using eese::TrialPlan;

namespace {

TrialPlan make_plan(int users, int available, int selected,
                    std::int64_t trials, std::uint64_t seed) {
    TrialPlan plan;
    plan.system.users = users;
    plan.system.antennas_available = available;
    plan.system.antennas_selected = selected;
    plan.system.tx_power_w = 1.0;
    plan.system.bandwidth_hz = 1.0;
    plan.system.noise_power_w = 1.0;
    plan.trials = trials;
    plan.master_seed = seed;
    return plan;
}

// Expected sum of the n largest of m i.i.d. Exp(1) variables, from the
// order statistics identity E[i-th largest of m] = H_m - H_{i-1} with
// H_j the j-th harmonic number.
double exact_top_exponential_sum(int m, int n) {
    const auto harmonic = [](int j) {
        double h = 0.0;
        for (int i = 1; i <= j; ++i) {
            h += 1.0 / i;
        }
        return h;
    };
    double total = 0.0;
    for (int i = 1; i <= n; ++i) {
        total += harmonic(m) - harmonic(i - 1);
    }
    return total;
}

}  // namespace

TEST_CASE("trial seeds depend only on master seed and index") {
    CHECK(eese::trial_seed(1, 0) == eese::trial_seed(1, 0));
    CHECK(eese::trial_seed(1, 0) != eese::trial_seed(1, 1));
    CHECK(eese::trial_seed(1, 0) != eese::trial_seed(2, 0));
    // Reference sequence of the SplitMix64 generator for seed 0.
    CHECK(eese::trial_seed(0, 0) == 0xe220a8397b1dcdafULL);
    CHECK(eese::trial_seed(0, 1) == 0x6e789e6aa1b965f4ULL);
    CHECK(eese::trial_seed(0, 2) == 0x06c45d188009454fULL);
}

TEST_CASE("estimator names round-trip and unknown names are rejected") {
    for (const Estimator e :
         {Estimator::selected_gain_sum, Estimator::selected_capacity,
          Estimator::instantaneous_capacity}) {
        CHECK(eese::estimator_from_name(eese::estimator_name(e)) == e);
    }
    CHECK_THROWS_WITH(eese::estimator_from_name("selected_gains"),
                      Catch::Matchers::ContainsSubstring("selected_gains"));
}

TEST_CASE("results are bit-identical for every worker count") {
    const TrialPlan plan = make_plan(2, 8, 4, 1000, 77);
    for (const Estimator est :
         {Estimator::selected_gain_sum, Estimator::selected_capacity,
          Estimator::instantaneous_capacity}) {
        const SampleStats one = eese::run_trials(plan, est, 1);
        const SampleStats two = eese::run_trials(plan, est, 2);
        const SampleStats eight = eese::run_trials(plan, est, 8);
        const SampleStats myriad = eese::run_trials(plan, est, 3000);
        CHECK(one.mean == two.mean);
        CHECK(one.std_dev == two.std_dev);
        CHECK(one.ci95_half_width == two.ci95_half_width);
        CHECK(one.mean == eight.mean);
        CHECK(one.std_dev == eight.std_dev);
        CHECK(one.mean == myriad.mean);
        CHECK(one.std_dev == myriad.std_dev);
    }
}

TEST_CASE("a single trial has zero spread") {
    const TrialPlan plan = make_plan(2, 8, 4, 1, 5);
    const SampleStats stats =
        eese::run_trials(plan, Estimator::selected_gain_sum);
    CHECK(stats.trials == 1);
    CHECK(stats.std_dev == 0.0);
    CHECK(stats.ci95_half_width == 0.0);
    CHECK(stats.mean > 0.0);
}

TEST_CASE("trial plan validates the trial count") {
    TrialPlan plan = make_plan(2, 8, 4, 0, 5);
    CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
}

TEST_CASE("selected gain sum matches the closed form when nothing is "
          "discarded") {
    // With N = M_t the closed form K*N*(1 + ln(1)) = K*N is exact.
    const TrialPlan plan = make_plan(8, 20, 20, 20000, 1);
    const SampleStats stats =
        eese::run_trials(plan, Estimator::selected_gain_sum);
    CHECK_THAT(stats.mean, WithinRel(160.0, 0.01));
    CHECK(stats.ci95_half_width < 160.0 * 0.01);
}

TEST_CASE("single-user selection matches the order-statistics oracle") {
    // Top 2 of 4 unit exponentials: 2*H_4 - H_1 = 19/6.
    const double exact = exact_top_exponential_sum(4, 2);
    CHECK_THAT(exact, WithinRel(19.0 / 6.0, 1e-12));

    const TrialPlan plan = make_plan(1, 4, 2, 100000, 1);
    const SampleStats stats =
        eese::run_trials(plan, Estimator::selected_gain_sum);
    CHECK_THAT(stats.mean, WithinRel(exact, 0.01));

    // The closed-form approximation 2*(1 + ln 2) lands within a few percent
    // of the true mean for this geometry.
    const double approx = eese::antenna_gain_expectation(4, 2, 1);
    CHECK(std::abs(approx - stats.mean) / stats.mean < 0.08);
}

TEST_CASE("gain validation reports the approximation gap it measures") {
    TrialPlan plan = make_plan(8, 100, 20, 20000, 1);
    const eese::ValidationReport report =
        eese::validate_gain_expectation(plan);
    CHECK_THAT(report.analytic, WithinRel(417.51006598945605, 1e-12));
    CHECK_THAT(report.rel_error,
               WithinAbs(std::abs(report.analytic - report.empirical.mean) /
                             report.empirical.mean,
                         1e-15));
    // Selection over a shared subset concentrates less gain than the
    // single-user order statistics promise: the closed form overshoots by a
    // large, stable margin on this geometry.
    CHECK(report.rel_error > 0.6);
    CHECK(report.rel_error < 0.8);
}

TEST_CASE("capacity validation is tight where the gain formula is exact") {
    const TrialPlan plan = make_plan(8, 20, 20, 20000, 1);
    const eese::ValidationReport report =
        eese::validate_average_capacity(plan);
    // 8 * log2(1 + 20/8): the gain expectation K*M_t = 160 shared as
    // 160/K^2 = 2.5 of SINR.
    CHECK_THAT(report.analytic, WithinRel(14.458839376460833, 1e-12));
    CHECK(report.rel_error < 0.03);
    // Jensen: the capacity is concave in the gain sum, whose mean the
    // closed form reproduces exactly here, so the empirical mean sits below
    // the analytic value.
    CHECK(report.empirical.mean <= report.analytic);
}

TEST_CASE("confidence interval shrinks like one over sqrt(trials)") {
    const TrialPlan small = make_plan(4, 16, 8, 4000, 9);
    TrialPlan large = small;
    large.trials = 8000;
    const SampleStats s =
        eese::run_trials(small, Estimator::selected_gain_sum);
    const SampleStats l =
        eese::run_trials(large, Estimator::selected_gain_sum);
    const double ratio = l.ci95_half_width / s.ci95_half_width;
    const double expected = 1.0 / std::sqrt(2.0);
    CHECK(ratio > expected * 0.9);
    CHECK(ratio < expected * 1.1);
}

TEST_CASE("capacity estimators are consistent with each other") {
    // The exact ZF capacity on the selected columns is below the
    // selected-gain surrogate on average (the surrogate ignores the
    // inversion loss), and both are positive.
    const TrialPlan plan = make_plan(4, 32, 8, 4000, 3);
    const SampleStats surrogate =
        eese::run_trials(plan, Estimator::selected_capacity);
    const SampleStats exact =
        eese::run_trials(plan, Estimator::instantaneous_capacity);
    CHECK(surrogate.mean > 0.0);
    CHECK(exact.mean > 0.0);
    CHECK(exact.mean < surrogate.mean);
}
