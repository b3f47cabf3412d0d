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

#include "greenedge/operational.hpp"

#include <algorithm>
#include <sstream>

#include "greenedge/errors.hpp"

namespace greenedge::operational {

namespace {

constexpr double kJoulesPerKwh = 3.6e6;

// Work-per-gram scale factors relative to the record's native unit:
// frames -> mega-frames, GFLOP -> TFLOP.
double per_carbon_unit_scale(ThroughputUnit unit) {
  switch (unit) {
    case ThroughputUnit::fps:
      return 1e-6;
    case ThroughputUnit::gflops:
      return 1e-3;
  }
  return 1.0;
}

}  // namespace

const char* to_string(Phase phase) {
  return phase == Phase::inference ? "inference" : "training";
}

const char* to_string(ThroughputUnit unit) {
  return unit == ThroughputUnit::fps ? "fps" : "gflops";
}

void validate_record(const WorkloadRecord& record) {
  std::ostringstream msg;
  msg << "workload record '" << record.benchmark << "' / '" << record.device << "': ";
  if (record.throughput <= 0.0) {
    msg << "throughput must be positive";
    throw ValidationError(msg.str());
  }
  if (record.power_w <= 0.0) {
    msg << "power must be positive";
    throw ValidationError(msg.str());
  }
  // Unit convention follows the phase: FPS for inference, GFLOPS for training.
  if (record.phase == Phase::inference && record.unit != ThroughputUnit::fps) {
    msg << "inference rows carry FPS throughput";
    throw ValidationError(msg.str());
  }
  if (record.phase == Phase::training && record.unit != ThroughputUnit::gflops) {
    msg << "training rows carry GFLOPS throughput";
    throw ValidationError(msg.str());
  }
}

double efficiency_per_watt(const WorkloadRecord& record) {
  return record.throughput / record.power_w;
}

EfficiencyReport efficiency_per_carbon(const WorkloadRecord& record,
                                       std::span<const grid::CarbonIntensity> mixes) {
  if (mixes.empty()) {
    throw ValidationError("efficiency_per_carbon needs at least one grid mix");
  }
  double mix_min = mixes.front().g_per_kwh;
  double mix_max = mixes.front().g_per_kwh;
  for (const auto& mix : mixes) {
    if (mix.g_per_kwh <= 0.0) {
      std::ostringstream msg;
      msg << "grid mix '" << mix.region << "' must be positive, got " << mix.g_per_kwh;
      throw ValidationError(msg.str());
    }
    mix_min = std::min(mix_min, mix.g_per_kwh);
    mix_max = std::max(mix_max, mix.g_per_kwh);
  }
  const double per_watt = efficiency_per_watt(record);
  const double scale = per_carbon_unit_scale(record.unit);
  const double work_per_kwh = per_watt * kJoulesPerKwh * scale;
  EfficiencyReport report;
  report.per_watt = per_watt;
  report.per_carbon_min = work_per_kwh / mix_max;  // dirtiest grid
  report.per_carbon_max = work_per_kwh / mix_min;  // cleanest grid
  report.mix_min_g_per_kwh = mix_min;
  report.mix_max_g_per_kwh = mix_max;
  report.unit = record.unit;
  return report;
}

double operational_energy_j(const usage::PowerProfile& profile,
                            const usage::UsageScenario& scenario, double duration_s) {
  if (duration_s < 0.0) {
    std::ostringstream msg;
    msg << "duration must be nonnegative, got " << duration_s;
    throw ValidationError(msg.str());
  }
  return usage::average_power_w(profile, scenario) * duration_s;
}

usage::PowerProfile resolve_power_profile(const WorkloadRecord& record, bool spintronics_device) {
  const double idle_frac =
      spintronics_device ? usage::kNonVolatileIdleFraction : usage::kCmosIdleFraction;
  const double sleep_frac =
      spintronics_device ? usage::kNonVolatileSleepFraction : usage::kCmosSleepFraction;
  usage::PowerProfile profile;
  profile.active_w = record.power_w;
  profile.idle_w = record.idle_w.value_or(idle_frac * record.power_w);
  profile.sleep_w = record.sleep_w.value_or(sleep_frac * record.power_w);
  usage::validate_profile(profile);
  return profile;
}

}  // namespace greenedge::operational
