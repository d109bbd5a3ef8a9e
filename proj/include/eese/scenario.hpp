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

#ifndef EESE_SCENARIO_HPP
#define EESE_SCENARIO_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "eese/power_model.hpp"
#include "eese/system_config.hpp"

namespace eese {

inline double dbm_to_watts(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

inline double watts_to_dbm(double watts) {
    if (!(watts > 0.0)) {
        throw std::invalid_argument(
            "watts_to_dbm: power must be > 0, got " + std::to_string(watts));
    }
    return 10.0 * std::log10(watts) + 30.0;
}

// Which scenario quantity a sweep walks over.
enum class SweepVariable { antennas, tx_power };

inline const char* sweep_variable_name(SweepVariable v) {
    return v == SweepVariable::antennas ? "n" : "rho_d";
}

inline SweepVariable sweep_variable_from_name(const std::string& name) {
    if (name == "n") {
        return SweepVariable::antennas;
    }
    if (name == "rho_d") {
        return SweepVariable::tx_power;
    }
    throw std::invalid_argument(
        "scenario: key \"variable\" must be \"n\" or \"rho_d\", got \"" +
        name + "\"");
}

// A one-dimensional grid over the swept variable, endpoints included.
struct SweepSpec {
    SweepVariable variable = SweepVariable::antennas;
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    bool operator==(const SweepSpec&) const = default;

    // Grid value at index i (0-based).  The endpoints are returned exactly:
    // the affine form can overshoot `stop` by one ulp, which would push a
    // power sweep past the configured budget.
    double at(int i) const {
        if (steps == 1) {
            return start;
        }
        if (i == steps - 1) {
            return stop;
        }
        return start + (stop - start) * static_cast<double>(i) /
                           static_cast<double>(steps - 1);
    }
};

// Everything a CLI run needs: the system and hardware parameters, an
// optional sweep, and the Monte Carlo batch description.
struct Scenario {
    SystemConfig system;
    PowerModel power;
    std::optional<SweepSpec> sweep;
    std::int64_t trials = 100000;
    std::uint64_t master_seed = 1;
    std::string output_path;  // empty means stdout

    bool operator==(const Scenario&) const = default;
};

namespace detail {

inline const nlohmann::json* find_key(const nlohmann::json& j,
                                      const char* key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

inline double require_number(const nlohmann::json& v, const char* key) {
    if (!v.is_number()) {
        throw std::invalid_argument("scenario: key \"" + std::string(key) +
                                    "\" must be a number");
    }
    return v.get<double>();
}

inline std::int64_t require_integer(const nlohmann::json& v,
                                    const char* key) {
    if (!v.is_number_integer()) {
        throw std::invalid_argument("scenario: key \"" + std::string(key) +
                                    "\" must be an integer");
    }
    return v.get<std::int64_t>();
}

}  // namespace detail

// Parse a scenario from flat JSON text.  Unknown keys are rejected (a typo
// must not silently fall back to a default), transmit powers accept either
// watts (rho_d, rho_d_max) or dBm (rho_d_dbm, rho_d_max_dbm), and all
// omitted keys take the documented defaults.  Constraint violations throw
// std::invalid_argument naming the constraint.
inline Scenario parse_scenario(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument(
            "scenario: top-level JSON value must be an object");
    }

    static const std::set<std::string> known = {
        "K",          "M_t",         "N",         "rho_d",
        "rho_d_dbm",  "rho_d_max",   "rho_d_max_dbm", "beta",
        "noise_power", "q_dac",      "q_mix",     "q_filt_tx",
        "q_syn",      "q_lna",       "q_ifa",     "q_filt_rx",
        "q_adc",      "variable",    "start",     "stop",
        "steps",      "trials",      "master_seed", "output_path",
    };
    for (const auto& item : j.items()) {
        if (known.find(item.key()) == known.end()) {
            throw std::invalid_argument("scenario: unknown key \"" +
                                        item.key() + "\"");
        }
    }

    Scenario s;

    if (const auto* v = detail::find_key(j, "K")) {
        s.system.users = static_cast<int>(detail::require_integer(*v, "K"));
    }
    if (const auto* v = detail::find_key(j, "M_t")) {
        s.system.antennas_available =
            static_cast<int>(detail::require_integer(*v, "M_t"));
    }
    if (const auto* v = detail::find_key(j, "N")) {
        s.system.antennas_selected =
            static_cast<int>(detail::require_integer(*v, "N"));
    }

    const auto* rho_w = detail::find_key(j, "rho_d");
    const auto* rho_dbm = detail::find_key(j, "rho_d_dbm");
    if (rho_w && rho_dbm) {
        throw std::invalid_argument(
            "scenario: specify \"rho_d\" or \"rho_d_dbm\", not both");
    }
    if (rho_w) {
        s.system.tx_power_w = detail::require_number(*rho_w, "rho_d");
    } else if (rho_dbm) {
        s.system.tx_power_w =
            dbm_to_watts(detail::require_number(*rho_dbm, "rho_d_dbm"));
    }

    const auto* rho_max_w = detail::find_key(j, "rho_d_max");
    const auto* rho_max_dbm = detail::find_key(j, "rho_d_max_dbm");
    if (rho_max_w && rho_max_dbm) {
        throw std::invalid_argument(
            "scenario: specify \"rho_d_max\" or \"rho_d_max_dbm\", not "
            "both");
    }
    if (rho_max_w) {
        s.system.tx_power_max_w =
            detail::require_number(*rho_max_w, "rho_d_max");
    } else if (rho_max_dbm) {
        s.system.tx_power_max_w = dbm_to_watts(
            detail::require_number(*rho_max_dbm, "rho_d_max_dbm"));
    }

    if (const auto* v = detail::find_key(j, "beta")) {
        s.system.bandwidth_hz = detail::require_number(*v, "beta");
    }
    if (const auto* v = detail::find_key(j, "noise_power")) {
        s.system.noise_power_w = detail::require_number(*v, "noise_power");
    }

    const struct {
        const char* key;
        double PowerModel::* field;
    } power_keys[] = {
        {"q_dac", &PowerModel::dac_w},
        {"q_mix", &PowerModel::mixer_w},
        {"q_filt_tx", &PowerModel::tx_filter_w},
        {"q_syn", &PowerModel::synth_w},
        {"q_lna", &PowerModel::lna_w},
        {"q_ifa", &PowerModel::if_amp_w},
        {"q_filt_rx", &PowerModel::rx_filter_w},
        {"q_adc", &PowerModel::adc_w},
    };
    for (const auto& pk : power_keys) {
        if (const auto* v = detail::find_key(j, pk.key)) {
            s.power.*pk.field = detail::require_number(*v, pk.key);
        }
    }

    if (const auto* v = detail::find_key(j, "trials")) {
        s.trials = detail::require_integer(*v, "trials");
        if (s.trials < 1) {
            throw std::invalid_argument(
                "scenario: key \"trials\" must be >= 1, got " +
                std::to_string(s.trials));
        }
    }
    if (const auto* v = detail::find_key(j, "master_seed")) {
        if (!v->is_number_integer() ||
            (v->is_number_integer() && !v->is_number_unsigned() &&
             v->get<std::int64_t>() < 0)) {
            throw std::invalid_argument(
                "scenario: key \"master_seed\" must be a non-negative "
                "integer");
        }
        s.master_seed = v->get<std::uint64_t>();
    }
    if (const auto* v = detail::find_key(j, "output_path")) {
        if (!v->is_string()) {
            throw std::invalid_argument(
                "scenario: key \"output_path\" must be a string");
        }
        s.output_path = v->get<std::string>();
    }

    // Validate the fixed parameters before interpreting the sweep, whose
    // defaults depend on them.
    s.system.validate();
    s.power.validate();

    const auto* variable = detail::find_key(j, "variable");
    const auto* start = detail::find_key(j, "start");
    const auto* stop = detail::find_key(j, "stop");
    const auto* steps = detail::find_key(j, "steps");
    if (!variable && (start || stop || steps)) {
        throw std::invalid_argument(
            "scenario: sweep keys \"start\"/\"stop\"/\"steps\" require "
            "\"variable\"");
    }
    if (variable) {
        if (!variable->is_string()) {
            throw std::invalid_argument(
                "scenario: key \"variable\" must be a string");
        }
        SweepSpec sweep;
        sweep.variable =
            sweep_variable_from_name(variable->get<std::string>());
        if (sweep.variable == SweepVariable::antennas) {
            sweep.start = static_cast<double>(s.system.users);
            sweep.stop = static_cast<double>(s.system.antennas_available);
            sweep.steps = s.system.antennas_available - s.system.users + 1;
        } else {
            sweep.start = 0.0;
            sweep.stop = s.system.tx_power_max_w;
            sweep.steps = 200;
        }
        if (start) {
            sweep.start = detail::require_number(*start, "start");
        }
        if (stop) {
            sweep.stop = detail::require_number(*stop, "stop");
        }
        if (steps) {
            sweep.steps =
                static_cast<int>(detail::require_integer(*steps, "steps"));
        }

        if (!(sweep.start <= sweep.stop)) {
            throw std::invalid_argument(
                "scenario: sweep requires start <= stop, got start=" +
                std::to_string(sweep.start) +
                ", stop=" + std::to_string(sweep.stop));
        }
        if (sweep.steps < 2 &&
            !(sweep.steps == 1 && sweep.start == sweep.stop)) {
            throw std::invalid_argument(
                "scenario: sweep requires steps >= 2 (steps = 1 only for a "
                "degenerate start == stop grid), got steps=" +
                std::to_string(sweep.steps));
        }
        if (sweep.variable == SweepVariable::antennas) {
            if (sweep.start != std::floor(sweep.start) ||
                sweep.stop != std::floor(sweep.stop)) {
                throw std::invalid_argument(
                    "scenario: an antenna sweep needs integer start/stop");
            }
            if (sweep.start < s.system.users ||
                sweep.stop > s.system.antennas_available) {
                throw std::invalid_argument(
                    "scenario: antenna sweep range [" +
                    std::to_string(sweep.start) + ", " +
                    std::to_string(sweep.stop) +
                    "] outside the feasible range K <= n <= M_t");
            }
        } else {
            if (sweep.start < 0.0 ||
                sweep.stop > s.system.tx_power_max_w) {
                throw std::invalid_argument(
                    "scenario: power sweep range [" +
                    std::to_string(sweep.start) + ", " +
                    std::to_string(sweep.stop) +
                    "] outside the feasible range 0 <= rho_d <= rho_d_max");
            }
        }
        s.sweep = sweep;
    }

    return s;
}

// Read and parse a scenario file.
inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("scenario: cannot open file \"" + path +
                                    "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

// Serialize back to the flat JSON layout parse_scenario accepts, with every
// resolved value written out (powers in watts).  parse(serialize(s)) == s.
inline std::string serialize_scenario(const Scenario& s) {
    nlohmann::json j;
    j["K"] = s.system.users;
    j["M_t"] = s.system.antennas_available;
    j["N"] = s.system.antennas_selected;
    j["rho_d"] = s.system.tx_power_w;
    j["rho_d_max"] = s.system.tx_power_max_w;
    j["beta"] = s.system.bandwidth_hz;
    j["noise_power"] = s.system.noise_power_w;
    j["q_dac"] = s.power.dac_w;
    j["q_mix"] = s.power.mixer_w;
    j["q_filt_tx"] = s.power.tx_filter_w;
    j["q_syn"] = s.power.synth_w;
    j["q_lna"] = s.power.lna_w;
    j["q_ifa"] = s.power.if_amp_w;
    j["q_filt_rx"] = s.power.rx_filter_w;
    j["q_adc"] = s.power.adc_w;
    j["trials"] = s.trials;
    j["master_seed"] = s.master_seed;
    if (!s.output_path.empty()) {
        j["output_path"] = s.output_path;
    }
    if (s.sweep) {
        j["variable"] = sweep_variable_name(s.sweep->variable);
        j["start"] = s.sweep->start;
        j["stop"] = s.sweep->stop;
        j["steps"] = s.sweep->steps;
    }
    return j.dump(2) + "\n";
}

}  // namespace eese

#endif  // EESE_SCENARIO_HPP
