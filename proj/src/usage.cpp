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

#include "greenedge/usage.hpp"

#include <sstream>

#include "greenedge/errors.hpp"

namespace greenedge::usage {

void validate_profile(const PowerProfile& profile) {
  if (!(0.0 <= profile.sleep_w && profile.sleep_w <= profile.idle_w &&
        profile.idle_w <= profile.active_w)) {
    std::ostringstream msg;
    msg << "power profile violates 0 <= sleep <= idle <= active: sleep=" << profile.sleep_w
        << " idle=" << profile.idle_w << " active=" << profile.active_w;
    throw ValidationError(msg.str());
  }
}

void validate_scenario(const UsageScenario& scenario) {
  if (!(scenario.activity_ratio > 0.0 && scenario.activity_ratio <= 1.0)) {
    std::ostringstream msg;
    msg << "activity ratio " << scenario.activity_ratio << " outside (0, 1]";
    throw ValidationError(msg.str());
  }
  if (!(scenario.sleep_ratio >= 0.0 && scenario.sleep_ratio <= 1.0)) {
    std::ostringstream msg;
    msg << "sleep ratio " << scenario.sleep_ratio << " outside [0, 1]";
    throw ValidationError(msg.str());
  }
}

double average_power_w(const PowerProfile& profile, const UsageScenario& scenario) {
  const double a = scenario.activity_ratio;
  const double s = scenario.sleep_ratio;
  const double inactive_w = s * profile.sleep_w + (1.0 - s) * profile.idle_w;
  return a * profile.active_w + (1.0 - a) * inactive_w;
}

double derive_activity_from_demand(double demand, double capability) {
  if (capability <= 0.0) {
    std::ostringstream msg;
    msg << "capability must be positive, got " << capability;
    throw ValidationError(msg.str());
  }
  if (demand < 0.0 || demand > capability) {
    std::ostringstream msg;
    msg << "demand " << demand << " infeasible against capability " << capability;
    throw InfeasibleDemandError(msg.str());
  }
  return demand / capability;
}

}  // namespace greenedge::usage
