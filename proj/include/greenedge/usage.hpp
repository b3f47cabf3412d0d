// Copyright 2026 The GreenEdge Authors
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

#pragma once

namespace greenedge::usage {

// Device power states. Invariant: 0 <= sleep <= idle <= active.
struct PowerProfile {
  double active_w = 0.0;
  double idle_w = 0.0;
  double sleep_w = 0.0;
};

// Time apportionment of a deployment. activity_ratio is the fraction of
// wall time spent computing; sleep_ratio is the fraction of the remaining
// time spent in the sleep state (the rest idles).
struct UsageScenario {
  double activity_ratio = 1.0;  // (0, 1]
  double sleep_ratio = 0.0;     // [0, 1]
};

// Default idle/sleep powers as fractions of active power, used when a
// workload record does not override them. Non-volatile spintronic devices
// hold state without refresh, hence the flat low floor.
inline constexpr double kCmosIdleFraction = 0.25;
inline constexpr double kCmosSleepFraction = 0.05;
inline constexpr double kNonVolatileIdleFraction = 0.02;
inline constexpr double kNonVolatileSleepFraction = 0.02;

// Throws ValidationError on a violated invariant.
void validate_profile(const PowerProfile& profile);
void validate_scenario(const UsageScenario& scenario);

// Time-averaged power:
//   a * P_active + (1 - a) * (s * P_sleep + (1 - s) * P_idle)
// Affine in a for fixed s; bounded by [P_sleep, P_active].
double average_power_w(const PowerProfile& profile, const UsageScenario& scenario);

// Activity fraction needed to serve `demand` on a device rated `capability`
// (same unit). Throws InfeasibleDemandError when demand exceeds capability.
double derive_activity_from_demand(double demand, double capability);

}  // namespace greenedge::usage
