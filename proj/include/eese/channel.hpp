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

#ifndef EESE_CHANNEL_HPP
#define EESE_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <armadillo>

#include "eese/rng.hpp"

namespace eese {

// Flat-fading downlink channel: row k holds the coefficients from every
// base-station antenna to user k.
using ChannelMatrix = arma::cx_mat;

// Condition-number limit beyond which the Gram matrix H*H^H is treated as
// rank deficient and inverting it would only amplify noise.
inline constexpr double kMaxConditionNumber = 1.0e12;

namespace detail {

// Eigenvalues of the Gram matrix H*H^H, validated to be safely invertible.
// Throws std::runtime_error naming the condition number when the matrix is
// (numerically) rank deficient.
inline arma::vec gram_eigenvalues(const ChannelMatrix& h) {
    if (h.n_rows < 1 || h.n_cols < h.n_rows) {
        throw std::invalid_argument(
            "zf_precoder: need 1 <= users <= antennas, got users=" +
            std::to_string(h.n_rows) +
            ", antennas=" + std::to_string(h.n_cols));
    }
    const arma::cx_mat gram = h * h.t();  // .t() is the conjugate transpose
    arma::vec eigs;
    if (!arma::eig_sym(eigs, gram)) {
        throw std::runtime_error(
            "zf_precoder: eigenvalue decomposition of H*H^H failed");
    }
    const double largest = eigs.max();
    const double smallest = eigs.min();
    if (!(smallest > 0.0) ||
        largest / smallest > kMaxConditionNumber) {
        const double cond =
            smallest > 0.0 ? largest / smallest
                           : std::numeric_limits<double>::infinity();
        throw std::runtime_error(
            "zf_precoder: channel is rank deficient; condition number of "
            "H*H^H is " +
            std::to_string(cond) + " (limit " +
            std::to_string(kMaxConditionNumber) + ")");
    }
    return eigs;
}

}  // namespace detail

// Draw a users x antennas matrix of i.i.d. CN(0, 1) coefficients.  Entries
// are consumed from `rng` in column-major order, so a given seed always
// yields the same matrix.
inline ChannelMatrix generate_channel(ChannelRng& rng, int users,
                                      int antennas) {
    if (users < 1 || antennas < 1) {
        throw std::invalid_argument(
            "generate_channel: need users >= 1 and antennas >= 1, got "
            "users=" +
            std::to_string(users) + ", antennas=" + std::to_string(antennas));
    }
    ChannelMatrix h(users, antennas);
    for (arma::uword j = 0; j < h.n_cols; ++j) {
        for (arma::uword i = 0; i < h.n_rows; ++i) {
            h(i, j) = rng.complex_gaussian();
        }
    }
    return h;
}

// Zero-forcing precoder V = H^H (H*H^H)^{-1} together with its power
// normalization F = ||V||_F^2 / K.  Transmitting sqrt(rho_d/(K*F)) * V * x
// radiates exactly rho_d on average while H*V = I removes all inter-user
// interference.
struct Precoder {
    arma::cx_mat weights;        // antennas x users
    double normalization = 0.0;  // F = ||V||_F^2 / K
};

inline Precoder zf_precoder(const ChannelMatrix& h) {
    detail::gram_eigenvalues(h);  // validates shape and conditioning
    const arma::cx_mat gram = h * h.t();
    Precoder p;
    p.weights = h.t() * arma::inv_sympd(gram);
    p.normalization =
        arma::accu(arma::square(arma::abs(p.weights))) /
        static_cast<double>(h.n_rows);
    return p;
}

// The exact ZF normalization 1/||V||_F^2 = 1/tr((H*H^H)^{-1}) together with
// the two closed-form bounds that sandwich results about it:
//
//   exact <= harmonic = 1 / sum_k ||h_k||^{-2} <= bound = sum_k ||h_k||^2/K^2.
//
// `harmonic` drops the row cross-coupling, `bound` additionally applies the
// AM-HM inequality.
struct NormInverseBounds {
    double exact = 0.0;
    double harmonic = 0.0;
    double bound = 0.0;
};

inline NormInverseBounds norm_inverse_bounds(const ChannelMatrix& h) {
    const arma::vec eigs = detail::gram_eigenvalues(h);
    const arma::vec row_gains =
        arma::sum(arma::square(arma::abs(h)), 1);  // ||h_k||^2 per user
    const double k = static_cast<double>(h.n_rows);
    NormInverseBounds b;
    b.exact = 1.0 / arma::accu(1.0 / eigs);  // tr(G^{-1}) = sum 1/eig
    b.harmonic = 1.0 / arma::accu(1.0 / row_gains);
    b.bound = arma::accu(row_gains) / (k * k);
    return b;
}

// Result of transmit antenna selection: the chosen column indices (0-based)
// in order of decreasing gain, and the per-antenna gains aligned with them.
struct AntennaSelection {
    arma::uvec indices;
    arma::vec gains;
};

// Pick the `count` columns of `h` with the largest total gain over users,
// gamma_j = sum_k |h(k, j)|^2.  Ties go to the lower column index, so the
// result is deterministic for any input.
inline AntennaSelection select_antennas(const ChannelMatrix& h, int count) {
    if (h.n_rows < 1 || h.n_cols < 1) {
        throw std::invalid_argument("select_antennas: channel is empty");
    }
    if (count < 1 || static_cast<arma::uword>(count) > h.n_cols) {
        throw std::invalid_argument(
            "select_antennas: need 1 <= count <= antennas, got count=" +
            std::to_string(count) +
            ", antennas=" + std::to_string(h.n_cols));
    }
    const arma::vec gains =
        arma::sum(arma::square(arma::abs(h)), 0).t();  // per-column
    std::vector<arma::uword> order(h.n_cols);
    std::iota(order.begin(), order.end(), arma::uword{0});
    std::stable_sort(order.begin(), order.end(),
                     [&gains](arma::uword a, arma::uword b) {
                         return gains(a) > gains(b);
                     });
    AntennaSelection sel;
    sel.indices.set_size(count);
    sel.gains.set_size(count);
    for (int i = 0; i < count; ++i) {
        sel.indices(i) = order[static_cast<std::size_t>(i)];
        sel.gains(i) = gains(sel.indices(i));
    }
    return sel;
}

// Columns of `h` restricted to a selection, in the selection's order.
inline ChannelMatrix selected_columns(const ChannelMatrix& h,
                                      const AntennaSelection& sel) {
    return h.cols(sel.indices);
}

// Instantaneous sum capacity of the ZF downlink over channel `h` [bit/s]:
// every user sees SINR rho_d / (noise * ||V||_F^2), hence
//
//   C = K * beta * log2(1 + rho_d / (noise * tr((H*H^H)^{-1}))).
inline double instantaneous_capacity(const ChannelMatrix& h,
                                     double tx_power_w, double bandwidth_hz,
                                     double noise_power_w) {
    if (!std::isfinite(tx_power_w) || tx_power_w < 0.0) {
        throw std::invalid_argument(
            "instantaneous_capacity: tx_power_w must be finite and >= 0");
    }
    if (!(bandwidth_hz > 0.0) || !(noise_power_w > 0.0)) {
        throw std::invalid_argument(
            "instantaneous_capacity: bandwidth_hz and noise_power_w must be "
            "> 0");
    }
    const arma::vec eigs = detail::gram_eigenvalues(h);
    const double trace_inverse = arma::accu(1.0 / eigs);
    const double k = static_cast<double>(h.n_rows);
    return k * bandwidth_hz *
           std::log2(1.0 + tx_power_w / (noise_power_w * trace_inverse));
}

// Capacity surrogate after antenna selection [bit/s]: the selected total
// gain S = sum of the `count` largest column gains stands in for the array
// gain, with the transmit power split evenly over the K users and the gain
// likewise shared per user:
//
//   C = K * beta * log2(1 + rho_d * S / (K^2 * noise)).
//
// S/K^2 is exactly the upper bound on 1/tr((HH^H)^{-1}) from
// norm_inverse_bounds, so per realization this surrogate never falls below
// instantaneous_capacity on the same selected columns.
inline double selected_capacity(const ChannelMatrix& h, int count,
                                double tx_power_w, double bandwidth_hz,
                                double noise_power_w = 1.0) {
    if (!std::isfinite(tx_power_w) || tx_power_w < 0.0) {
        throw std::invalid_argument(
            "selected_capacity: tx_power_w must be finite and >= 0");
    }
    if (!(bandwidth_hz > 0.0) || !(noise_power_w > 0.0)) {
        throw std::invalid_argument(
            "selected_capacity: bandwidth_hz and noise_power_w must be > 0");
    }
    const AntennaSelection sel = select_antennas(h, count);
    const double total_gain = arma::accu(sel.gains);
    const double k = static_cast<double>(h.n_rows);
    return k * bandwidth_hz *
           std::log2(1.0 + tx_power_w * total_gain / (k * k * noise_power_w));
}

// Received signal of every user under ZF precoding:
//
//   y_k = sqrt(rho_d/(K*F)) * h_k v_k x_k
//       + sqrt(rho_d/(K*F)) * sum_{j != k} h_k v_j x_j + n_k.
//
// The inter-user term is computed explicitly and verified to vanish (ZF
// forces H*V = I); a residual above 1e-9 relative to the signal scale throws
// std::runtime_error instead of returning a silently interference-laden
// signal.
inline arma::cx_vec verify_received_signal(const ChannelMatrix& h,
                                           double tx_power_w,
                                           const arma::cx_vec& symbols,
                                           const arma::cx_vec& noise) {
    if (!std::isfinite(tx_power_w) || tx_power_w < 0.0) {
        throw std::invalid_argument(
            "verify_received_signal: tx_power_w must be finite and >= 0");
    }
    if (symbols.n_elem != h.n_rows || noise.n_elem != h.n_rows) {
        throw std::invalid_argument(
            "verify_received_signal: symbols and noise must have one entry "
            "per user, got " +
            std::to_string(symbols.n_elem) + " symbols and " +
            std::to_string(noise.n_elem) + " noise entries for " +
            std::to_string(h.n_rows) + " users");
    }
    const Precoder p = zf_precoder(h);
    const double k = static_cast<double>(h.n_rows);
    const double scale =
        std::sqrt(tx_power_w / (k * p.normalization));
    const arma::cx_mat effective = h * p.weights;  // should be the identity

    arma::cx_vec received(h.n_rows);
    const double symbol_scale =
        std::max(1.0, arma::abs(symbols).max() * scale);
    for (arma::uword k_idx = 0; k_idx < h.n_rows; ++k_idx) {
        std::complex<double> direct =
            effective(k_idx, k_idx) * symbols(k_idx);
        std::complex<double> interference{0.0, 0.0};
        for (arma::uword j = 0; j < h.n_rows; ++j) {
            if (j != k_idx) {
                interference += effective(k_idx, j) * symbols(j);
            }
        }
        if (std::abs(interference) * scale > 1.0e-9 * symbol_scale) {
            throw std::runtime_error(
                "verify_received_signal: residual inter-user interference " +
                std::to_string(std::abs(interference) * scale) +
                " exceeds tolerance for user " + std::to_string(k_idx));
        }
        received(k_idx) = scale * (direct + interference) + noise(k_idx);
    }
    return received;
}

}  // namespace eese

#endif  // EESE_CHANNEL_HPP
