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

#include <string>
#include <vector>

#include "greenedge/fab.hpp"
#include "greenedge/operational.hpp"
#include "greenedge/usage.hpp"

namespace greenedge::tradeoff {

inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kDaysPerYear = 365.25;

// Embodied joules (M) and time-averaged operational watts (P) of an
// incumbent (index 0) and a candidate (index 1).
struct ComparisonInput {
  double m0_j = 0.0;
  double m1_j = 0.0;
  double p0_w = 0.0;
  double p1_w = 0.0;
  std::string label0;
  std::string label1;
};

enum class TimeKind {
  finite,                  // positive indifference/break-even time
  dominated_by_candidate,  // candidate at least as good on both axes
  dominated_by_incumbent,  // equal embodied, candidate burns more power
  never,                   // candidate's extra embodied can never amortize
};

struct TimeResult {
  TimeKind kind = TimeKind::never;
  double seconds = 0.0;    // valid only when kind == finite
  bool equivalent = false;  // all four inputs equal
};

const char* to_string(TimeKind kind);

// t_I = (M1 - M0) / (P0 - P1) when the quadrant admits a positive time;
// otherwise a dominance verdict. A zero time (M1 == M0 with a power win)
// classifies as dominated_by_candidate, and P0 == P1 with M1 > M0 as never.
TimeResult indifference_time(const ComparisonInput& input);

// Same with M0 treated as sunk: t_B = M1 / (P0 - P1).
TimeResult breakeven_time(const ComparisonInput& input);

// Binds one side of a comparison: the die, its power states, the published
// workload record, and the usage scenario.
struct SystemConfig {
  fab::DeviceSpec device;
  usage::PowerProfile profile;
  operational::WorkloadRecord workload;
  usage::UsageScenario scenario;
};

enum class SweepMode { breakeven, indifference };
enum class ComparisonScheme {
  iso_power,  // both systems share the cell's activity fraction at rated power
  iso_work,   // a shared demand rate sets each system's activity fraction
};
enum class EmbodiedBasis { die, module };

const char* to_string(SweepMode mode);
const char* to_string(ComparisonScheme scheme);
const char* to_string(EmbodiedBasis basis);

// Inclusive linear axis with `steps` points. from < to requires steps >= 2.
struct AxisSpec {
  double from = 0.0;
  double to = 1.0;
  int steps = 1;

  std::vector<double> values() const;
};

struct SweepSpec {
  AxisSpec activity;
  AxisSpec sleep;
  SweepMode mode = SweepMode::breakeven;
  ComparisonScheme scheme = ComparisonScheme::iso_power;
  // Offered load at full activity for iso_work; scaled by the cell's
  // activity value. Unit must match both workload records.
  double demand = 0.0;
  EmbodiedBasis basis = EmbodiedBasis::die;
  bool allow_cross_study = false;
  int threads = 1;
};

// Row-major surface: cell(i, j) pairs activity_axis[i] with sleep_axis[j].
struct SweepSurface {
  std::vector<double> activity_axis;
  std::vector<double> sleep_axis;
  std::vector<TimeResult> cells;
  SweepMode mode = SweepMode::breakeven;
  std::string label0;
  std::string label1;
  std::string scheme;
  std::string basis;

  const TimeResult& cell(std::size_t activity_idx, std::size_t sleep_idx) const {
    return cells[activity_idx * sleep_axis.size() + sleep_idx];
  }
};

// Embodied joules of one side under the chosen basis.
double embodied_joules(const fab::DeviceSpec& device, EmbodiedBasis basis);

// Evaluates the selected time analysis over the scenario grid. Cells are
// independent and may be computed on spec.threads workers; results land in
// position-addressed slots so the surface is identical at any parallelism
// level.
// Throws IncompatibilityError for a cross-study pair without the override
// and InfeasibleDemandError when an iso_work cell exceeds a capability.
SweepSurface sweep(const SystemConfig& incumbent, const SystemConfig& candidate,
                   const SweepSpec& spec);

// Header row carries the sleep axis, first column the activity axis. Finite
// cells render as days with one decimal; others as "dominated", "never" or
// "equivalent". Byte-stable for identical inputs.
std::string render_surface_csv(const SweepSurface& surface);

}  // namespace greenedge::tradeoff
