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

#include <optional>
#include <span>
#include <string>

#include "greenedge/grid.hpp"
#include "greenedge/usage.hpp"

namespace greenedge::operational {

enum class Phase { inference, training };

// The throughput unit set is closed; adding one requires a conversion rule
// to work items so per-carbon math stays dimensionally honest.
enum class ThroughputUnit { fps, gflops };

const char* to_string(Phase phase);
const char* to_string(ThroughputUnit unit);

// Per-carbon range as printed in the source table, kept for cross-checking
// regenerated output against it.
struct PublishedRange {
  double min = 0.0;
  double max = 0.0;
};

// One published (device, benchmark) measurement: throughput at active power.
// Inference rows carry FPS, training rows GFLOPS. idle_w/sleep_w override the
// class defaults from the usage module when present.
struct WorkloadRecord {
  std::string benchmark;
  std::string device;
  Phase phase = Phase::inference;
  ThroughputUnit unit = ThroughputUnit::fps;
  double throughput = 0.0;
  double power_w = 0.0;
  std::string precision_note;
  std::optional<double> idle_w;
  std::optional<double> sleep_w;
  std::optional<PublishedRange> published_per_carbon;
};

// Throughput-per-carbon range over a set of grid mixes. The minimum is hit
// at the dirtiest mix, the maximum at the cleanest. Units: mega-frames per
// gCO2eq for FPS records, TFLOP per gCO2eq for GFLOPS records.
struct EfficiencyReport {
  double per_watt = 0.0;
  double per_carbon_min = 0.0;
  double per_carbon_max = 0.0;
  double mix_min_g_per_kwh = 0.0;
  double mix_max_g_per_kwh = 0.0;
  ThroughputUnit unit = ThroughputUnit::fps;
};

void validate_record(const WorkloadRecord& record);

// throughput / power.
double efficiency_per_watt(const WorkloadRecord& record);

// (throughput/power) * 3.6e6 J/kWh / mix, rescaled to MF/g (FPS records) or
// TFLOP/g (GFLOPS records). Throws ValidationError on empty or nonpositive
// mixes.
EfficiencyReport efficiency_per_carbon(const WorkloadRecord& record,
                                       std::span<const grid::CarbonIntensity> mixes);

// average_power(profile, scenario) * duration.
double operational_energy_j(const usage::PowerProfile& profile,
                            const usage::UsageScenario& scenario, double duration_s);

// Resolves the record's power states against the class defaults:
// spintronic (non-volatile) devices idle and sleep at 2% of active power,
// CMOS devices at 25% / 5%. Explicit idle_w/sleep_w win.
usage::PowerProfile resolve_power_profile(const WorkloadRecord& record, bool spintronics_device);

}  // namespace greenedge::operational
