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

// Walks the antenna count across its feasible range for the default
// downlink scenario, prints the energy efficiency of each choice, and then
// lets the joint optimizer pick the best (antenna count, transmit power)
// pair under the same power budget.

#include <cstdio>

#include "eese/eese.hpp"

int main() {
    const eese::SystemConfig cfg;  // 8 users, 64 antennas, 20 MHz
    const eese::PowerModel pm;

    std::printf("antenna sweep at rho_d = %.2f W\n", cfg.tx_power_w);
    std::printf("%4s %12s %16s %12s\n", "N", "SE [b/s/Hz]", "EE [bit/J]",
                "Q_max [W]");
    for (int n = cfg.users; n <= cfg.antennas_available; n += 4) {
        const eese::TradeoffPoint p =
            eese::evaluate_point(cfg.with_antennas(n), pm);
        std::printf("%4d %12.4f %16.4e %12.4f\n", n, p.se, p.ee,
                    p.total_power_w);
    }

    const eese::TradeoffPoint best = eese::joint_optimize(cfg, pm, 1e-9);
    std::printf("\njoint optimum: N = %d, rho_d = %.6f W, "
                "SE = %.4f b/s/Hz, EE = %.6e bit/J\n",
                best.antennas, best.tx_power_w, best.se, best.ee);
    return 0;
}
