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

#ifndef EESE_SYSTEM_CONFIG_HPP
#define EESE_SYSTEM_CONFIG_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace eese {

// Parameters of the downlink: a base station with `antennas_available`
// antennas serves `users` single-antenna terminals over `antennas_selected`
// antennas chosen by instantaneous channel gain.  Power and bandwidth fields
// carry their unit in the name.
struct SystemConfig {
    int users = 8;                  // K: single-antenna terminals served
    int antennas_available = 64;    // M_t: antennas installed at the BS
    int antennas_selected = 16;     // N: antennas active after selection
    double tx_power_w = 1.0;        // rho_d: radiated downlink power
    double tx_power_max_w = 100.0;  // upper limit of the power budget
    double bandwidth_hz = 20.0e6;   // beta: system bandwidth
    double noise_power_w = 1.0;     // receiver noise power per terminal

    // Throws std::invalid_argument naming the violated constraint.  Every
    // operation on a SystemConfig requires these invariants, so violations
    // are reported where the configuration enters the system rather than
    // deep inside a formula.
    void validate() const {
        if (users < 1) {
            throw std::invalid_argument(
                "SystemConfig: constraint K >= 1 violated (K=" +
                std::to_string(users) + ")");
        }
        if (antennas_available < users) {
            throw std::invalid_argument(
                "SystemConfig: constraint K <= M_t violated (K=" +
                std::to_string(users) +
                ", M_t=" + std::to_string(antennas_available) + ")");
        }
        if (antennas_selected < users) {
            throw std::invalid_argument(
                "SystemConfig: constraint K <= N violated (K=" +
                std::to_string(users) +
                ", N=" + std::to_string(antennas_selected) + ")");
        }
        if (antennas_selected > antennas_available) {
            throw std::invalid_argument(
                "SystemConfig: constraint N <= M_t violated (N=" +
                std::to_string(antennas_selected) +
                ", M_t=" + std::to_string(antennas_available) + ")");
        }
        if (!std::isfinite(tx_power_max_w) || tx_power_max_w <= 0.0) {
            throw std::invalid_argument(
                "SystemConfig: constraint rho_d_max > 0 violated "
                "(rho_d_max=" +
                std::to_string(tx_power_max_w) + ")");
        }
        if (!std::isfinite(tx_power_w) || tx_power_w < 0.0 ||
            tx_power_w > tx_power_max_w) {
            throw std::invalid_argument(
                "SystemConfig: constraint 0 <= rho_d <= rho_d_max violated "
                "(rho_d=" +
                std::to_string(tx_power_w) +
                ", rho_d_max=" + std::to_string(tx_power_max_w) + ")");
        }
        if (!std::isfinite(bandwidth_hz) || bandwidth_hz <= 0.0) {
            throw std::invalid_argument(
                "SystemConfig: constraint beta > 0 violated (beta=" +
                std::to_string(bandwidth_hz) + ")");
        }
        if (!std::isfinite(noise_power_w) || noise_power_w <= 0.0) {
            throw std::invalid_argument(
                "SystemConfig: constraint noise_power > 0 violated "
                "(noise_power=" +
                std::to_string(noise_power_w) + ")");
        }
    }

    // Copy with a different number of selected antennas.
    SystemConfig with_antennas(int n) const {
        SystemConfig copy = *this;
        copy.antennas_selected = n;
        return copy;
    }

    // Copy with a different radiated transmit power.
    SystemConfig with_power(double rho_w) const {
        SystemConfig copy = *this;
        copy.tx_power_w = rho_w;
        return copy;
    }

    bool operator==(const SystemConfig&) const = default;
};

}  // namespace eese

#endif  // EESE_SYSTEM_CONFIG_HPP
