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

#ifndef EESE_ANALYTIC_HPP
#define EESE_ANALYTIC_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "eese/power_model.hpp"
#include "eese/system_config.hpp"

namespace eese {

// One operating point of the system: how much it spends and what it gets.
struct TradeoffPoint {
    int antennas = 0;            // N at this point
    double tx_power_w = 0.0;     // rho_d at this point
    double se = 0.0;             // spectral efficiency [bit/s/Hz]
    double ee = 0.0;             // energy efficiency [bit/J]
    double total_power_w = 0.0;  // radiated plus circuit power [W]
};

namespace detail {

// Effective array gain per unit transmit power divided by per-user noise:
// the coefficient c in SE = K*log2(1 + c*rho_d).  Collects the selection
// gain (1 + ln(M_t/N)), the equal power split across K users, and the
// noise normalization.
inline double sinr_slope(const SystemConfig& cfg) {
    const double ratio = static_cast<double>(cfg.antennas_available) /
                         static_cast<double>(cfg.antennas_selected);
    return (1.0 + std::log(ratio)) *
           static_cast<double>(cfg.antennas_selected) /
           (static_cast<double>(cfg.users) * cfg.noise_power_w);
}

}  // namespace detail

// Expected sum over users of the channel gains on the n strongest of m_t
// antennas, for i.i.d. unit-variance Rayleigh fading: k * n * (1 + ln(m_t/n)).
//
// The expression is exact when n = m_t (no selection: the mean of k*m_t unit
// exponentials) and is a large-m_t approximation otherwise, derived from the
// order statistics of a single user's exponential gains.  When several users
// share one selected subset the approximation overshoots; the Monte Carlo
// harness quantifies by how much.
inline double antenna_gain_expectation(int m_t, int n, int k) {
    if (k < 1) {
        throw std::invalid_argument(
            "antenna_gain_expectation: k must be >= 1, got " +
            std::to_string(k));
    }
    if (n < 1 || n > m_t) {
        throw std::invalid_argument(
            "antenna_gain_expectation: need 1 <= n <= m_t, got n=" +
            std::to_string(n) + ", m_t=" + std::to_string(m_t));
    }
    const double ratio = static_cast<double>(m_t) / static_cast<double>(n);
    return static_cast<double>(k) * static_cast<double>(n) *
           (1.0 + std::log(ratio));
}

// Spectral efficiency of the sum rate [bit/s/Hz]:
//
//   SE = K * log2(1 + (1 + ln(M_t/N)) * rho_d * N / (K * noise)).
//
// Monotonically increasing in rho_d; zero at rho_d = 0.
inline double spectral_efficiency(const SystemConfig& cfg) {
    cfg.validate();
    return static_cast<double>(cfg.users) *
           std::log2(1.0 + detail::sinr_slope(cfg) * cfg.tx_power_w);
}

// Spectral efficiency with the selected antenna count relaxed to a real
// number, used by gradient checks that probe N +/- h.  `antennas` may exceed
// cfg.antennas_available slightly; it must stay positive and keep the SINR
// argument positive.
inline double spectral_efficiency_relaxed(const SystemConfig& cfg,
                                          double antennas) {
    cfg.validate();
    if (!(antennas > 0.0)) {
        throw std::invalid_argument(
            "spectral_efficiency_relaxed: antennas must be > 0, got " +
            std::to_string(antennas));
    }
    const double ratio =
        static_cast<double>(cfg.antennas_available) / antennas;
    const double slope = (1.0 + std::log(ratio)) * antennas /
                         (static_cast<double>(cfg.users) * cfg.noise_power_w);
    const double arg = 1.0 + slope * cfg.tx_power_w;
    if (!(arg > 0.0)) {
        throw std::invalid_argument(
            "spectral_efficiency_relaxed: SINR argument is not positive at "
            "antennas=" +
            std::to_string(antennas));
    }
    return static_cast<double>(cfg.users) * std::log2(arg);
}

// Transmit power that achieves a target spectral efficiency, the inverse of
// spectral_efficiency() in rho_d:
//
//   rho_d = (2^(se/K) - 1) / sinr_slope.
//
// Not clamped to the power budget; callers decide whether the result is
// affordable.
inline double power_for_spectral_efficiency(const SystemConfig& cfg,
                                            double se) {
    cfg.validate();
    if (!std::isfinite(se) || se < 0.0) {
        throw std::invalid_argument(
            "power_for_spectral_efficiency: se must be finite and >= 0, "
            "got " +
            std::to_string(se));
    }
    const double per_user = se / static_cast<double>(cfg.users);
    return (std::exp2(per_user) - 1.0) / detail::sinr_slope(cfg);
}

// Average downlink capacity [bit/s]: bandwidth times spectral efficiency.
inline double average_capacity(const SystemConfig& cfg) {
    return cfg.bandwidth_hz * spectral_efficiency(cfg);
}

// Energy efficiency [bit/J]: delivered rate divided by total consumed power
//
//   EE = beta * SE / (rho_d + Q_C(N)).
//
// Throws when the total power is zero (rho_d = 0 with an all-zero power
// model), where the ratio is undefined.
inline double energy_efficiency(const SystemConfig& cfg,
                                const PowerModel& model) {
    cfg.validate();
    const double q_total =
        total_power(model, cfg.tx_power_w, cfg.antennas_selected);
    if (q_total <= 0.0) {
        throw std::invalid_argument(
            "energy_efficiency: total consumed power is zero; the ratio is "
            "undefined");
    }
    return average_capacity(cfg) / q_total;
}

// Evaluate the current operating point of `cfg` under `model`.
inline TradeoffPoint evaluate_point(const SystemConfig& cfg,
                                    const PowerModel& model) {
    TradeoffPoint p;
    p.antennas = cfg.antennas_selected;
    p.tx_power_w = cfg.tx_power_w;
    p.se = spectral_efficiency(cfg);
    p.ee = energy_efficiency(cfg, model);
    p.total_power_w =
        total_power(model, cfg.tx_power_w, cfg.antennas_selected);
    return p;
}

// Partial derivative of the spectral efficiency with respect to rho_d:
//
//   dSE/drho = K/ln2 * c / (1 + c*rho_d),  c = sinr_slope.
//
// Strictly positive: more power always buys more rate.
inline double se_grad_power(const SystemConfig& cfg) {
    cfg.validate();
    const double c = detail::sinr_slope(cfg);
    return static_cast<double>(cfg.users) / std::numbers::ln2 * c /
           (1.0 + c * cfg.tx_power_w);
}

// Partial derivative of the spectral efficiency with respect to the selected
// antenna count, at the real-valued relaxation of N:
//
//   dSE/dN = (rho_d/noise) * ln(M_t/N) / (ln2 * (1 + c*rho_d)).
//
// Non-negative on the feasible region (N <= M_t) and zero at N = M_t, where
// selection stops discarding antennas.
inline double se_grad_antennas(const SystemConfig& cfg) {
    cfg.validate();
    const double ratio = static_cast<double>(cfg.antennas_available) /
                         static_cast<double>(cfg.antennas_selected);
    const double omega = 1.0 + detail::sinr_slope(cfg) * cfg.tx_power_w;
    return cfg.tx_power_w / cfg.noise_power_w * std::log(ratio) /
           (std::numbers::ln2 * omega);
}

// Sign surrogate for the energy-efficiency gradient in rho_d.  EE is a ratio
// of a concave rate to an affine power, and
//
//   dEE/drho = beta*K / (ln2 * Q_max^2) * g(rho),
//   g(rho)   = c * (rho + Q_C) / (1 + c*rho) - ln(1 + c*rho),
//
// so g carries the gradient's sign with the positive factor stripped.  g is
// strictly decreasing in rho (its derivative is -c^2*(rho + Q_C) / (1 +
// c*rho)^2 < 0), hence EE is quasi-concave in rho with at most one interior
// maximum: g starts at c*Q_C >= 0 and crosses zero at most once.
inline double ee_grad_power_sign(const SystemConfig& cfg,
                                 const PowerModel& model) {
    cfg.validate();
    const double q_total =
        total_power(model, cfg.tx_power_w, cfg.antennas_selected);
    if (q_total <= 0.0) {
        throw std::invalid_argument(
            "ee_grad_power_sign: total consumed power is zero; the "
            "gradient is undefined");
    }
    const double c = detail::sinr_slope(cfg);
    const double omega = 1.0 + c * cfg.tx_power_w;
    return c * q_total / omega - std::log(omega);
}

}  // namespace eese

#endif  // EESE_ANALYTIC_HPP
