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

// Umbrella header: the whole library in one include.

#ifndef EESE_EESE_HPP
#define EESE_EESE_HPP

#include "eese/analytic.hpp"     // closed-form SE/EE expressions
#include "eese/channel.hpp"      // Rayleigh channels, ZF precoding, selection
#include "eese/commands.hpp"     // CSV-producing command entry points
#include "eese/csv.hpp"          // round-trip-safe CSV formatting
#include "eese/montecarlo.hpp"   // reproducible trial batches
#include "eese/optimize.hpp"     // power/antenna optimization, Pareto front
#include "eese/power_model.hpp"  // circuit power consumption
#include "eese/rng.hpp"          // seeded random streams
#include "eese/scenario.hpp"     // JSON scenario files
#include "eese/system_config.hpp"

#endif  // EESE_EESE_HPP
