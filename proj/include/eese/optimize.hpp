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

#ifndef EESE_OPTIMIZE_HPP
#define EESE_OPTIMIZE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eese/analytic.hpp"
#include "eese/power_model.hpp"
#include "eese/system_config.hpp"

namespace eese {

// Fraction of the power budget used as the smallest strictly positive grid
// or bracket point.  Exactly zero transmit power is avoided where energy
// efficiency degenerates (zero rate, and an undefined ratio when the circuit
// power is also zero).
inline constexpr double kPowerFloorFraction = 1.0e-9;

// Box the optimizers search over: selected antennas in [users,
// antennas_available], transmit power in [0, budget].
struct FeasibleRegion {
    int antennas_min = 0;
    int antennas_max = 0;
    double tx_power_min = 0.0;
    double tx_power_max = 0.0;
};

inline FeasibleRegion feasible_region(const SystemConfig& cfg) {
    cfg.validate();
    return FeasibleRegion{cfg.users, cfg.antennas_available, 0.0,
                          cfg.tx_power_max_w};
}

// Where the power optimum sits relative to the budget.
enum class PowerBound { interior, lower, upper };

inline const char* to_string(PowerBound b) {
    switch (b) {
        case PowerBound::interior:
            return "interior";
        case PowerBound::lower:
            return "lower";
        case PowerBound::upper:
            return "upper";
    }
    return "unknown";
}

struct PowerOptimum {
    double tx_power_w = 0.0;
    double ee = 0.0;
    PowerBound bound = PowerBound::interior;
};

// Energy-efficiency-optimal transmit power for a fixed antenna count, by
// bisection on the gradient-sign function g(rho) (see ee_grad_power_sign).
// g is strictly decreasing, so EE is quasi-concave in rho and the bisection
// brackets the unique stationary point:
//
//   - g > 0 over the whole budget: EE still rising at rho_max -> "upper";
//   - g < 0 from the start (only possible with zero circuit power, where
//     spending any power already hurts): -> "lower", pinned to a vanishing
//     fraction of the budget where the ratio is still defined;
//   - otherwise bisect until the bracket is narrower than `tol`.
inline PowerOptimum optimal_power(const SystemConfig& cfg,
                                  const PowerModel& model, int antennas,
                                  double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument(
            "optimal_power: tol must be finite and > 0, got " +
            std::to_string(tol));
    }
    const SystemConfig base = cfg.with_antennas(antennas);
    base.validate();
    const double budget = base.tx_power_max_w;
    const double circuit = circuit_power(model, antennas);
    const double floor_w = kPowerFloorFraction * budget;

    // With positive circuit power g(0) = c*Q_C > 0, so the lower bracket can
    // sit at zero; with zero circuit power both g and EE need rho > 0.
    double lo = circuit > 0.0 ? 0.0 : floor_w;
    double hi = budget;
    const auto gradient_sign = [&](double rho) {
        return ee_grad_power_sign(base.with_power(rho), model);
    };

    PowerOptimum opt;
    if (gradient_sign(lo) <= 0.0) {
        opt.tx_power_w = std::max(lo, floor_w);
        opt.bound = PowerBound::lower;
    } else if (gradient_sign(hi) >= 0.0) {
        opt.tx_power_w = hi;
        opt.bound = PowerBound::upper;
    } else {
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (gradient_sign(mid) > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        opt.tx_power_w = 0.5 * (lo + hi);
        opt.bound = PowerBound::interior;
    }
    opt.ee = energy_efficiency(base.with_power(opt.tx_power_w), model);
    return opt;
}

struct AntennaOptimum {
    int antennas = 0;
    double ee = 0.0;
};

// Energy-efficiency-optimal antenna count for a fixed transmit power, by
// exhaustive search over the feasible integers [K, M_t].  Ties resolve to
// the smaller count (fewer active RF chains for the same efficiency).
inline AntennaOptimum optimal_antennas(const SystemConfig& cfg,
                                       const PowerModel& model,
                                       double tx_power_w) {
    const FeasibleRegion region = feasible_region(cfg);
    AntennaOptimum best;
    for (int n = region.antennas_min; n <= region.antennas_max; ++n) {
        const double ee = energy_efficiency(
            cfg.with_antennas(n).with_power(tx_power_w), model);
        if (best.antennas == 0 || ee > best.ee) {
            best.antennas = n;
            best.ee = ee;
        }
    }
    return best;
}

// Jointly optimal (N, rho_d): for every feasible antenna count run the
// power bisection, then keep the best.  The scan goes through N in
// ascending order and only a strictly better EE replaces the incumbent, so
// ties resolve to the smaller antenna count deterministically regardless of
// how the per-N evaluations are scheduled.
inline TradeoffPoint joint_optimize(const SystemConfig& cfg,
                                    const PowerModel& model, double tol) {
    const FeasibleRegion region = feasible_region(cfg);
    TradeoffPoint best;
    bool have_best = false;
    for (int n = region.antennas_min; n <= region.antennas_max; ++n) {
        const PowerOptimum po = optimal_power(cfg, model, n, tol);
        if (!have_best || po.ee > best.ee) {
            best = evaluate_point(
                cfg.with_antennas(n).with_power(po.tx_power_w), model);
            have_best = true;
        }
    }
    return best;
}

// Drop every point that another point dominates: q dominates p when q is at
// least as good in both objectives (SE and EE) and strictly better in one.
// Exact duplicates do not dominate each other, so they survive together.
// The survivors are returned sorted by SE ascending (EE descends along the
// front), duplicates keeping their input order.
inline std::vector<TradeoffPoint> filter_dominated(
    const std::vector<TradeoffPoint>& points) {
    // Group by SE; within a group only the maximal-EE points can survive,
    // and they survive only if no strictly-higher-SE point has EE >= theirs.
    std::map<double, std::vector<const TradeoffPoint*>> groups;
    for (const TradeoffPoint& p : points) {
        groups[p.se].push_back(&p);
    }
    std::vector<TradeoffPoint> front;
    double best_ee_above = -std::numeric_limits<double>::infinity();
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        double group_max = -std::numeric_limits<double>::infinity();
        for (const TradeoffPoint* p : it->second) {
            group_max = std::max(group_max, p->ee);
        }
        if (group_max > best_ee_above) {
            for (const TradeoffPoint* p : it->second) {
                if (p->ee == group_max) {
                    front.push_back(*p);
                }
            }
        }
        best_ee_above = std::max(best_ee_above, group_max);
    }
    std::reverse(front.begin(), front.end());
    return front;
}

struct ParetoFront {
    std::vector<TradeoffPoint> points;
};

// Pareto front of (SE, EE) over a rectangular scan grid: `power_grid`
// equally spaced transmit powers from a vanishing fraction of the budget up
// to the budget, crossed with the given antenna counts.
inline ParetoFront pareto_front(const SystemConfig& cfg,
                                const PowerModel& model, int power_grid,
                                const std::vector<int>& antenna_values) {
    const FeasibleRegion region = feasible_region(cfg);
    if (power_grid < 2) {
        throw std::invalid_argument(
            "pareto_front: power_grid must be >= 2, got " +
            std::to_string(power_grid));
    }
    if (antenna_values.empty()) {
        throw std::invalid_argument(
            "pareto_front: antenna_values must not be empty");
    }
    for (int n : antenna_values) {
        if (n < region.antennas_min || n > region.antennas_max) {
            throw std::invalid_argument(
                "pareto_front: antenna count " + std::to_string(n) +
                " outside the feasible range [" +
                std::to_string(region.antennas_min) + ", " +
                std::to_string(region.antennas_max) + "]");
        }
    }
    const double lo = kPowerFloorFraction * region.tx_power_max;
    const double hi = region.tx_power_max;
    std::vector<TradeoffPoint> grid;
    grid.reserve(static_cast<std::size_t>(power_grid) *
                 antenna_values.size());
    for (int n : antenna_values) {
        for (int i = 0; i < power_grid; ++i) {
            // The last sample hits the budget exactly; the affine form can
            // overshoot it by one ulp, which the config would reject.
            const double rho =
                i == power_grid - 1
                    ? hi
                    : lo + (hi - lo) * static_cast<double>(i) /
                               static_cast<double>(power_grid - 1);
            grid.push_back(
                evaluate_point(cfg.with_antennas(n).with_power(rho), model));
        }
    }
    return ParetoFront{filter_dominated(grid)};
}

// One sample of the EE-versus-SE curve.
struct RegimePoint {
    double tx_power_w = 0.0;
    double se = 0.0;
    double ee = 0.0;
};

// The EE-vs-SE curve for a fixed antenna count, sampled uniformly in SE
// between the smallest positive power and the budget.
struct RegimeSweep {
    double se_min = 0.0;   // SE at the bottom of the power range
    double se_peak = 0.0;  // SE where EE is maximal
    double se_max = 0.0;   // SE at the full budget
    std::vector<RegimePoint> points;
};

// Sweep the achievable SE range on a uniform SE grid and record EE at every
// target; the curve must rise to a single peak and fall after it (EE is
// quasi-concave in rho_d and SE is monotone in rho_d), which is verified and
// any violation reported.  Left of the peak the system is power-limited
// (both objectives improve together); right of it every extra bit/s/Hz costs
// efficiency.
inline RegimeSweep ee_se_regimes(const SystemConfig& cfg,
                                 const PowerModel& model, int antennas,
                                 int se_grid) {
    if (se_grid < 2) {
        throw std::invalid_argument(
            "ee_se_regimes: se_grid must be >= 2, got " +
            std::to_string(se_grid));
    }
    const SystemConfig base = cfg.with_antennas(antennas);
    base.validate();
    const double budget = base.tx_power_max_w;
    const double floor_w = kPowerFloorFraction * budget;
    const double se_min =
        spectral_efficiency(base.with_power(floor_w));
    const double se_max = spectral_efficiency(base.with_power(budget));

    RegimeSweep sweep;
    sweep.se_min = se_min;
    sweep.se_max = se_max;
    sweep.points.reserve(static_cast<std::size_t>(se_grid));
    for (int i = 0; i < se_grid; ++i) {
        const double se =
            se_min + (se_max - se_min) * static_cast<double>(i) /
                         static_cast<double>(se_grid - 1);
        double rho = power_for_spectral_efficiency(base, se);
        rho = std::clamp(rho, floor_w, budget);
        RegimePoint p;
        p.tx_power_w = rho;
        p.se = se;
        p.ee = energy_efficiency(base.with_power(rho), model);
        sweep.points.push_back(p);
    }

    std::size_t peak = 0;
    for (std::size_t i = 1; i < sweep.points.size(); ++i) {
        if (sweep.points[i].ee > sweep.points[peak].ee) {
            peak = i;
        }
    }
    // Quasi-concavity check: non-decreasing up to the peak, non-increasing
    // after it, with a relative slack for floating-point noise.
    constexpr double slack = 1.0e-12;
    for (std::size_t i = 0; i + 1 < sweep.points.size(); ++i) {
        const double a = sweep.points[i].ee;
        const double b = sweep.points[i + 1].ee;
        const bool ok = i < peak ? b >= a * (1.0 - slack)
                                 : b <= a * (1.0 + slack);
        if (!ok) {
            throw std::runtime_error(
                "ee_se_regimes: energy efficiency is not unimodal over the "
                "sweep (violation between grid points " +
                std::to_string(i) + " and " + std::to_string(i + 1) + ")");
        }
    }
    sweep.se_peak = sweep.points[peak].se;
    return sweep;
}

}  // namespace eese

#endif  // EESE_OPTIMIZE_HPP
