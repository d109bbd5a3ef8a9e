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

// Command-line front end: reads a JSON scenario, runs one of the four
// commands, and writes the resulting CSV to a file or stdout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "eese/eese.hpp"

namespace {

// Options shared by every subcommand.  --seed/--trials/--out override the
// scenario file; --threads tunes Monte Carlo parallelism without changing
// any output byte.
struct CommandOptions {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    unsigned threads = 0;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* trials_opt = nullptr;
    CLI::Option* out_opt = nullptr;
};

void add_common_options(CLI::App& cmd, CommandOptions& opts) {
    cmd.add_option("--config", opts.config_path,
                   "Path to the JSON scenario file")
        ->required();
    opts.seed_opt = cmd.add_option(
        "--seed", opts.seed, "Override the scenario's master_seed");
    opts.trials_opt =
        cmd.add_option("--trials", opts.trials,
                       "Override the scenario's Monte Carlo trial count")
            ->check(CLI::PositiveNumber);
    opts.out_opt = cmd.add_option(
        "--out", opts.out_path,
        "Write the CSV here instead of the scenario's output_path");
    cmd.add_option("--threads", opts.threads,
                   "Monte Carlo worker threads (0 = hardware concurrency)");
}

// Load the scenario and fold in the command-line overrides.
eese::Scenario resolve_scenario(const CommandOptions& opts) {
    eese::Scenario scenario = eese::load_scenario(opts.config_path);
    if (opts.seed_opt->count() > 0) {
        scenario.master_seed = opts.seed;
    }
    if (opts.trials_opt->count() > 0) {
        scenario.trials = opts.trials;
    }
    if (opts.out_opt->count() > 0) {
        scenario.output_path = opts.out_path;
    }
    return scenario;
}

void deliver(const eese::Scenario& scenario, const std::string& csv) {
    if (scenario.output_path.empty()) {
        std::cout << csv;
        return;
    }
    std::ofstream out(scenario.output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file \"" +
                                 scenario.output_path + "\"");
    }
    out << csv;
    if (!out) {
        throw std::runtime_error("failed writing output file \"" +
                                 scenario.output_path + "\"");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Energy-efficiency / spectral-efficiency trade-off explorer for a "
        "zero-forcing multi-antenna downlink with antenna selection"};
    app.require_subcommand(1);

    CommandOptions sweep_opts;
    CLI::App* sweep = app.add_subcommand(
        "sweep-antennas",
        "SE, EE and total power across an antenna-count grid");
    add_common_options(*sweep, sweep_opts);

    CommandOptions curve_opts;
    CLI::App* curve = app.add_subcommand(
        "tradeoff-curve", "SE and EE across a transmit-power grid");
    add_common_options(*curve, curve_opts);

    CommandOptions optimize_opts;
    CLI::App* optimize = app.add_subcommand(
        "optimize",
        "Jointly EE-optimal antenna count and power, plus the Pareto front");
    add_common_options(*optimize, optimize_opts);

    CommandOptions validate_opts;
    CLI::App* validate = app.add_subcommand(
        "validate",
        "Check the closed-form expressions against Monte Carlo simulation");
    add_common_options(*validate, validate_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            const eese::Scenario s = resolve_scenario(sweep_opts);
            deliver(s, eese::run_sweep_antennas(s));
        } else if (curve->parsed()) {
            const eese::Scenario s = resolve_scenario(curve_opts);
            deliver(s, eese::run_tradeoff_curve(s));
        } else if (optimize->parsed()) {
            const eese::Scenario s = resolve_scenario(optimize_opts);
            deliver(s, eese::run_optimize(s));
        } else if (validate->parsed()) {
            const eese::Scenario s = resolve_scenario(validate_opts);
            deliver(s, eese::run_validate(s, validate_opts.threads));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
