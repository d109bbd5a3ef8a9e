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

#ifndef EESE_COMMANDS_HPP
#define EESE_COMMANDS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "eese/analytic.hpp"
#include "eese/csv.hpp"
#include "eese/montecarlo.hpp"
#include "eese/optimize.hpp"
#include "eese/scenario.hpp"

namespace eese {

namespace detail {

// Provenance header shared by every command's output: all resolved scenario
// parameters plus the seed, so any table can be reproduced from its own
// file.  The output path and worker count are deliberately absent -- they
// must not influence the bytes that describe the result.
inline void append_scenario_comments(CsvBuilder& csv, const Scenario& s,
                                     const char* command) {
    csv.comment("command", command);
    csv.comment("K", std::to_string(s.system.users));
    csv.comment("M_t", std::to_string(s.system.antennas_available));
    csv.comment("N", std::to_string(s.system.antennas_selected));
    csv.comment("rho_d", format_double(s.system.tx_power_w));
    csv.comment("rho_d_max", format_double(s.system.tx_power_max_w));
    csv.comment("beta", format_double(s.system.bandwidth_hz));
    csv.comment("noise_power", format_double(s.system.noise_power_w));
    csv.comment("q_dac", format_double(s.power.dac_w));
    csv.comment("q_mix", format_double(s.power.mixer_w));
    csv.comment("q_filt_tx", format_double(s.power.tx_filter_w));
    csv.comment("q_syn", format_double(s.power.synth_w));
    csv.comment("q_lna", format_double(s.power.lna_w));
    csv.comment("q_ifa", format_double(s.power.if_amp_w));
    csv.comment("q_filt_rx", format_double(s.power.rx_filter_w));
    csv.comment("q_adc", format_double(s.power.adc_w));
    csv.comment("trials", std::to_string(s.trials));
    csv.comment("master_seed", std::to_string(s.master_seed));
}

inline void append_sweep_comment(CsvBuilder& csv, const SweepSpec& sweep) {
    csv.comment("sweep",
                std::string(sweep_variable_name(sweep.variable)) + " from " +
                    format_double(sweep.start) + " to " +
                    format_double(sweep.stop) + " in " +
                    std::to_string(sweep.steps) + " steps");
}

// The antenna grid a scenario asks for: its sweep when it has one (which
// must walk "n"), otherwise every feasible count.
inline SweepSpec antenna_sweep(const Scenario& s, const char* command) {
    if (s.sweep) {
        if (s.sweep->variable != SweepVariable::antennas) {
            throw std::invalid_argument(
                std::string(command) +
                ": scenario sweeps \"rho_d\" but this command walks the "
                "antenna count; use variable \"n\"");
        }
        return *s.sweep;
    }
    SweepSpec sweep;
    sweep.variable = SweepVariable::antennas;
    sweep.start = static_cast<double>(s.system.users);
    sweep.stop = static_cast<double>(s.system.antennas_available);
    sweep.steps = s.system.antennas_available - s.system.users + 1;
    return sweep;
}

// The power grid a scenario asks for (sweep must walk "rho_d"), defaulting
// to 200 steps across the whole budget.
inline SweepSpec power_sweep(const Scenario& s, const char* command) {
    if (s.sweep) {
        if (s.sweep->variable != SweepVariable::tx_power) {
            throw std::invalid_argument(
                std::string(command) +
                ": scenario sweeps \"n\" but this command walks the "
                "transmit power; use variable \"rho_d\"");
        }
        return *s.sweep;
    }
    SweepSpec sweep;
    sweep.variable = SweepVariable::tx_power;
    sweep.start = 0.0;
    sweep.stop = s.system.tx_power_max_w;
    sweep.steps = 200;
    return sweep;
}

}  // namespace detail

// Table of (N, SE, EE, Q_max) across an antenna-count grid at the
// scenario's fixed transmit power.
inline std::string run_sweep_antennas(const Scenario& s) {
    const SweepSpec sweep = detail::antenna_sweep(s, "sweep-antennas");
    CsvBuilder csv;
    detail::append_scenario_comments(csv, s, "sweep-antennas");
    detail::append_sweep_comment(csv, sweep);
    csv.header({"N", "SE", "EE", "Q_max"});
    for (int i = 0; i < sweep.steps; ++i) {
        const int n = static_cast<int>(std::lround(sweep.at(i)));
        const TradeoffPoint p =
            evaluate_point(s.system.with_antennas(n), s.power);
        csv.row({std::to_string(p.antennas), format_double(p.se),
                 format_double(p.ee), format_double(p.total_power_w)});
    }
    return csv.str();
}

// Table of (rho_d, SE, EE) across a transmit-power grid at the scenario's
// fixed antenna count.
inline std::string run_tradeoff_curve(const Scenario& s) {
    const SweepSpec sweep = detail::power_sweep(s, "tradeoff-curve");
    CsvBuilder csv;
    detail::append_scenario_comments(csv, s, "tradeoff-curve");
    detail::append_sweep_comment(csv, sweep);
    csv.header({"rho_d", "SE", "EE"});
    for (int i = 0; i < sweep.steps; ++i) {
        const double rho = sweep.at(i);
        const SystemConfig cfg = s.system.with_power(rho);
        const double se = spectral_efficiency(cfg);
        const double ee = energy_efficiency(cfg, s.power);
        csv.row({format_double(rho), format_double(se), format_double(ee)});
    }
    return csv.str();
}

// Jointly optimal operating point (reported in '#' comments) followed by
// the Pareto front of (SE, EE) over the full feasible box.
inline std::string run_optimize(const Scenario& s) {
    s.system.validate();
    const double tol = std::max(1.0e-12, 1.0e-9 * s.system.tx_power_max_w);
    const TradeoffPoint best = joint_optimize(s.system, s.power, tol);

    std::vector<int> antenna_values(
        static_cast<std::size_t>(s.system.antennas_available -
                                 s.system.users + 1));
    std::iota(antenna_values.begin(), antenna_values.end(), s.system.users);
    const ParetoFront front =
        pareto_front(s.system, s.power, 200, antenna_values);

    CsvBuilder csv;
    detail::append_scenario_comments(csv, s, "optimize");
    csv.comment("optimum_N", std::to_string(best.antennas));
    csv.comment("optimum_rho_d", format_double(best.tx_power_w));
    csv.comment("optimum_SE", format_double(best.se));
    csv.comment("optimum_EE", format_double(best.ee));
    csv.comment("optimum_Q_max", format_double(best.total_power_w));
    csv.header({"N", "rho_d", "SE", "EE", "Q_max"});
    for (const TradeoffPoint& p : front.points) {
        csv.row({std::to_string(p.antennas), format_double(p.tx_power_w),
                 format_double(p.se), format_double(p.ee),
                 format_double(p.total_power_w)});
    }
    return csv.str();
}

// Closed-form-versus-simulation checks: one row per validated expression.
// The worker count tunes speed only; the output bytes are identical for
// every value.
inline std::string run_validate(const Scenario& s, unsigned workers = 0) {
    TrialPlan plan;
    plan.system = s.system;
    plan.trials = s.trials;
    plan.master_seed = s.master_seed;

    const ValidationReport gain = validate_gain_expectation(plan, workers);
    const ValidationReport cap = validate_average_capacity(plan, workers);

    CsvBuilder csv;
    detail::append_scenario_comments(csv, s, "validate");
    csv.header({"check", "analytic", "mc_mean", "mc_std_dev",
                "mc_ci95_half_width", "rel_error", "trials"});
    const auto add_row = [&csv](const char* name,
                                const ValidationReport& r) {
        csv.row({name, format_double(r.analytic),
                 format_double(r.empirical.mean),
                 format_double(r.empirical.std_dev),
                 format_double(r.empirical.ci95_half_width),
                 format_double(r.rel_error),
                 std::to_string(r.empirical.trials)});
    };
    add_row("gain_expectation", gain);
    add_row("average_capacity", cap);
    return csv.str();
}

}  // namespace eese

#endif  // EESE_COMMANDS_HPP
