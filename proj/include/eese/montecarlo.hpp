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

#ifndef EESE_MONTECARLO_HPP
#define EESE_MONTECARLO_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "eese/analytic.hpp"
#include "eese/channel.hpp"
#include "eese/rng.hpp"
#include "eese/system_config.hpp"

namespace eese {

// A reproducible batch of channel draws: trial i always uses the seed
// trial_seed(master_seed, i), independent of scheduling.
struct TrialPlan {
    SystemConfig system;
    std::int64_t trials = 100000;
    std::uint64_t master_seed = 1;

    void validate() const {
        system.validate();
        if (trials < 1) {
            throw std::invalid_argument(
                "TrialPlan: trials must be >= 1, got " +
                std::to_string(trials));
        }
    }
};

// Summary statistics of one estimator over a batch of trials.
struct SampleStats {
    double mean = 0.0;
    double std_dev = 0.0;          // sample standard deviation (n - 1)
    double ci95_half_width = 0.0;  // 1.96 * std_dev / sqrt(trials)
    std::int64_t trials = 0;
};

// Quantities measured per channel draw.
enum class Estimator {
    // Sum over users of the channel gains on the selected antennas.
    selected_gain_sum,
    // Capacity surrogate built from the selected total gain.
    selected_capacity,
    // Exact ZF sum capacity on the selected columns.
    instantaneous_capacity,
};

inline std::string_view estimator_name(Estimator e) {
    switch (e) {
        case Estimator::selected_gain_sum:
            return "selected_gain_sum";
        case Estimator::selected_capacity:
            return "selected_capacity";
        case Estimator::instantaneous_capacity:
            return "instantaneous_capacity";
    }
    return "unknown";
}

inline Estimator estimator_from_name(std::string_view name) {
    if (name == "selected_gain_sum") {
        return Estimator::selected_gain_sum;
    }
    if (name == "selected_capacity") {
        return Estimator::selected_capacity;
    }
    if (name == "instantaneous_capacity") {
        return Estimator::instantaneous_capacity;
    }
    throw std::invalid_argument("unknown estimator name: \"" +
                                std::string(name) + "\"");
}

namespace detail {

// Value of one estimator on the trial with index `index`.  A pure function
// of (plan, estimator, index) by construction.
inline double run_one_trial(const TrialPlan& plan, Estimator estimator,
                            std::int64_t index) {
    ChannelRng rng(trial_seed(plan.master_seed,
                              static_cast<std::uint64_t>(index)));
    const ChannelMatrix h = generate_channel(
        rng, plan.system.users, plan.system.antennas_available);
    switch (estimator) {
        case Estimator::selected_gain_sum:
            return arma::accu(
                select_antennas(h, plan.system.antennas_selected).gains);
        case Estimator::selected_capacity:
            return selected_capacity(h, plan.system.antennas_selected,
                                     plan.system.tx_power_w,
                                     plan.system.bandwidth_hz,
                                     plan.system.noise_power_w);
        case Estimator::instantaneous_capacity: {
            const AntennaSelection sel =
                select_antennas(h, plan.system.antennas_selected);
            return instantaneous_capacity(
                selected_columns(h, sel), plan.system.tx_power_w,
                plan.system.bandwidth_hz, plan.system.noise_power_w);
        }
    }
    throw std::invalid_argument("run_trials: invalid estimator");
}

}  // namespace detail

// Run every trial of the plan and reduce to summary statistics.
//
// `workers` = 0 picks the hardware concurrency.  Trials are split into
// contiguous index ranges, one per worker, each trial seeded independently
// of its schedule; the reduction then walks the results in trial-index order
// on one thread.  The statistics are therefore bit-identical for every
// worker count, so parallelism can never change a validation verdict.
inline SampleStats run_trials(const TrialPlan& plan, Estimator estimator,
                              unsigned workers = 0) {
    plan.validate();
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    const std::int64_t n = plan.trials;
    workers = static_cast<unsigned>(
        std::min<std::int64_t>(workers, n));

    std::vector<double> values(static_cast<std::size_t>(n));
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) {
            values[static_cast<std::size_t>(i)] =
                detail::run_one_trial(plan, estimator, i);
        }
    } else {
        const std::int64_t chunk = (n + workers - 1) / workers;
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::int64_t begin = static_cast<std::int64_t>(w) * chunk;
            const std::int64_t end = std::min(n, begin + chunk);
            pool.emplace_back([&, w, begin, end]() {
                try {
                    for (std::int64_t i = begin; i < end; ++i) {
                        values[static_cast<std::size_t>(i)] =
                            detail::run_one_trial(plan, estimator, i);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
        for (const std::exception_ptr& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    // Ordered, single-threaded reduction: the exact floating-point result is
    // a function of the trial values alone.
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    SampleStats stats;
    stats.trials = n;
    stats.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double sq = 0.0;
        for (double v : values) {
            const double d = v - stats.mean;
            sq += d * d;
        }
        stats.std_dev = std::sqrt(sq / static_cast<double>(n - 1));
        stats.ci95_half_width =
            1.96 * stats.std_dev / std::sqrt(static_cast<double>(n));
    }
    return stats;
}

// Outcome of checking one closed-form expression against simulation.
struct ValidationReport {
    double analytic = 0.0;
    SampleStats empirical;
    double rel_error = 0.0;  // |analytic - mean| / |mean|
};

namespace detail {

inline double relative_error(double analytic, double mean) {
    return std::abs(analytic - mean) / std::abs(mean);
}

}  // namespace detail

// Check the closed-form expected selected gain sum K*N*(1 + ln(M_t/N))
// against the sample mean of selected_gain_sum.
inline ValidationReport validate_gain_expectation(const TrialPlan& plan,
                                                  unsigned workers = 0) {
    plan.validate();
    ValidationReport report;
    report.analytic = antenna_gain_expectation(plan.system.antennas_available,
                                               plan.system.antennas_selected,
                                               plan.system.users);
    report.empirical =
        run_trials(plan, Estimator::selected_gain_sum, workers);
    report.rel_error =
        detail::relative_error(report.analytic, report.empirical.mean);
    return report;
}

// Check the closed-form average capacity against the sample mean of the
// selected-gain capacity surrogate.  The surrogate is concave in the
// selected gain, so where the gain expectation is exact (N = M_t) the
// sample mean sits at or below the closed form (Jensen).
inline ValidationReport validate_average_capacity(const TrialPlan& plan,
                                                  unsigned workers = 0) {
    plan.validate();
    ValidationReport report;
    report.analytic = average_capacity(plan.system);
    report.empirical =
        run_trials(plan, Estimator::selected_capacity, workers);
    report.rel_error =
        detail::relative_error(report.analytic, report.empirical.mean);
    return report;
}

}  // namespace eese

#endif  // EESE_MONTECARLO_HPP
