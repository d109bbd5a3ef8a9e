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

#ifndef EESE_POWER_MODEL_HPP
#define EESE_POWER_MODEL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace eese {

// Per-component circuit power consumption of the transceiver hardware, in
// watts.  The transmitter runs one DAC, mixer and filter chain per active
// antenna; the frequency synthesizer is shared by all chains; the receiver
// side (LNA, IF amplifier, filter, ADC) is counted once.
//
// The default values are representative figures for a low-power transceiver
// front end.
struct PowerModel {
    double dac_w = 15.6e-3;       // digital-to-analog converter
    double mixer_w = 30.3e-3;     // up/down-conversion mixer
    double tx_filter_w = 2.5e-3;  // transmit-side filter
    double synth_w = 50.0e-3;     // frequency synthesizer (shared)
    double lna_w = 20.0e-3;       // low-noise amplifier
    double if_amp_w = 3.0e-3;     // intermediate-frequency amplifier
    double rx_filter_w = 2.5e-3;  // receive-side filter
    double adc_w = 14.2e-3;       // analog-to-digital converter

    // A model with every component at zero, handy for isolating the effect
    // of transmit power.
    static constexpr PowerModel zero() {
        return PowerModel{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    }

    // Fixed part of the circuit power: two synthesizers (one per link
    // direction) plus the receiver chain, whose mixer, filter and amplifiers
    // are counted once.  Independent of the transmit antenna count.
    constexpr double static_power() const {
        return 2.0 * synth_w + lna_w + mixer_w + if_amp_w + rx_filter_w +
               adc_w;
    }

    // Circuit power consumed by one active transmit RF chain.
    constexpr double per_antenna_power() const {
        return dac_w + mixer_w + tx_filter_w;
    }

    // Every component must be a finite, non-negative power.
    void validate() const {
        const struct {
            const char* name;
            double value;
        } components[] = {
            {"q_dac", dac_w},     {"q_mix", mixer_w},
            {"q_filt_tx", tx_filter_w}, {"q_syn", synth_w},
            {"q_lna", lna_w},     {"q_ifa", if_amp_w},
            {"q_filt_rx", rx_filter_w}, {"q_adc", adc_w},
        };
        for (const auto& c : components) {
            if (!std::isfinite(c.value) || c.value < 0.0) {
                throw std::invalid_argument(
                    "PowerModel: component " + std::string(c.name) +
                    " must be finite and >= 0, got " + std::to_string(c.value));
            }
        }
    }

    bool operator==(const PowerModel&) const = default;
};

// Total circuit power Q_C drawn by the transceiver hardware when `antennas`
// transmit chains are active: the fixed receiver/synthesizer part plus one
// DAC/mixer/filter chain per antenna.
inline double circuit_power(const PowerModel& model, int antennas) {
    model.validate();
    if (antennas < 1) {
        throw std::invalid_argument(
            "circuit_power: antennas must be >= 1, got " +
            std::to_string(antennas));
    }
    return model.static_power() +
           static_cast<double>(antennas) * model.per_antenna_power();
}

// Total consumed power: radiated transmit power plus circuit power.
inline double total_power(const PowerModel& model, double tx_power_w,
                          int antennas) {
    if (!std::isfinite(tx_power_w) || tx_power_w < 0.0) {
        throw std::invalid_argument(
            "total_power: tx_power_w must be finite and >= 0, got " +
            std::to_string(tx_power_w));
    }
    return tx_power_w + circuit_power(model, antennas);
}

}  // namespace eese

#endif  // EESE_POWER_MODEL_HPP
