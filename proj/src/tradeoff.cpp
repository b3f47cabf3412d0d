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

#include "greenedge/tradeoff.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <thread>

#include "greenedge/errors.hpp"

namespace greenedge::tradeoff {

const char* to_string(TimeKind kind) {
  switch (kind) {
    case TimeKind::finite:
      return "finite";
    case TimeKind::dominated_by_candidate:
      return "dominated-by-candidate";
    case TimeKind::dominated_by_incumbent:
      return "dominated-by-incumbent";
    case TimeKind::never:
      return "never";
  }
  return "?";
}

const char* to_string(SweepMode mode) {
  return mode == SweepMode::breakeven ? "breakeven" : "indifference";
}

const char* to_string(ComparisonScheme scheme) {
  return scheme == ComparisonScheme::iso_power ? "iso_power" : "iso_work";
}

const char* to_string(EmbodiedBasis basis) {
  return basis == EmbodiedBasis::die ? "die" : "module";
}

TimeResult indifference_time(const ComparisonInput& input) {
  if (input.m0_j < 0.0 || input.m1_j < 0.0 || input.p0_w < 0.0 || input.p1_w < 0.0) {
    std::ostringstream msg;
    msg << "comparison inputs must be nonnegative: M0=" << input.m0_j << " M1=" << input.m1_j
        << " P0=" << input.p0_w << " P1=" << input.p1_w;
    throw ValidationError(msg.str());
  }
  const double m0 = input.m0_j;
  const double m1 = input.m1_j;
  const double p0 = input.p0_w;
  const double p1 = input.p1_w;

  if (m1 == m0 && p1 == p0) {
    return TimeResult{TimeKind::dominated_by_candidate, 0.0, true};
  }
  if (m1 <= m0 && p1 <= p0) {
    return TimeResult{TimeKind::dominated_by_candidate, 0.0, false};
  }
  // Extra embodied with no operational savings never amortizes; the division
  // by P0 - P1 == 0 is guarded here rather than raised.
  if (m1 > m0 && p1 >= p0) {
    return TimeResult{TimeKind::never, 0.0, false};
  }
  if (m1 >= m0 && p1 >= p0) {
    return TimeResult{TimeKind::dominated_by_incumbent, 0.0, false};
  }
  // Opposite-sign quadrants: the ratio is positive in both.
  return TimeResult{TimeKind::finite, (m1 - m0) / (p0 - p1), false};
}

TimeResult breakeven_time(const ComparisonInput& input) {
  ComparisonInput sunk = input;
  sunk.m0_j = 0.0;
  return indifference_time(sunk);
}

std::vector<double> AxisSpec::values() const {
  if (steps < 1) {
    throw ValidationError("axis needs at least one step");
  }
  if (steps == 1) {
    return {from};
  }
  if (!(to > from)) {
    throw ValidationError("axis range must be increasing");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out.push_back(from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return out;
}

double embodied_joules(const fab::DeviceSpec& device, EmbodiedBasis basis) {
  const double per_die = fab::embodied_energy_per_die_mj(device) * 1e6;
  return basis == EmbodiedBasis::module ? per_die * device.dies_per_module : per_die;
}

namespace {

// Average power of one side at a sweep cell.
double cell_power_w(const SystemConfig& system, const SweepSpec& spec, double activity,
                    double sleep, std::size_t ai, std::size_t si) {
  usage::UsageScenario scenario;
  scenario.sleep_ratio = sleep;
  if (spec.scheme == ComparisonScheme::iso_work) {
    const double cell_demand = activity * spec.demand;
    double fraction = 0.0;
    try {
      fraction = usage::derive_activity_from_demand(cell_demand, system.workload.throughput);
    } catch (const InfeasibleDemandError& e) {
      std::ostringstream msg;
      msg << "cell (activity=" << activity << ", sleep=" << sleep << ") [" << ai << "," << si
          << "] for '" << system.device.name << "': " << e.what();
      throw InfeasibleDemandError(msg.str());
    }
    scenario.activity_ratio = fraction;
  } else {
    scenario.activity_ratio = activity;
  }
  return usage::average_power_w(system.profile, scenario);
}

}  // namespace

SweepSurface sweep(const SystemConfig& incumbent, const SystemConfig& candidate,
                   const SweepSpec& spec) {
  const auto verdict = fab::check_study_compatibility(incumbent.device, candidate.device);
  if (!verdict.comparable && !spec.allow_cross_study) {
    throw IncompatibilityError("devices '" + incumbent.device.name + "' (study '" +
                               verdict.study_a + "') and '" + candidate.device.name +
                               "' (study '" + verdict.study_b +
                               "') come from different LCA studies");
  }
  if (spec.scheme == ComparisonScheme::iso_work) {
    if (spec.demand <= 0.0) {
      throw ValidationError("iso_work comparison needs a positive demand rate");
    }
    if (incumbent.workload.unit != candidate.workload.unit) {
      throw ValidationError("iso_work comparison needs matching throughput units, got " +
                            std::string(operational::to_string(incumbent.workload.unit)) +
                            " vs " + operational::to_string(candidate.workload.unit));
    }
  }

  SweepSurface surface;
  surface.activity_axis = spec.activity.values();
  surface.sleep_axis = spec.sleep.values();
  for (double a : surface.activity_axis) {
    if (!(a > 0.0 && a <= 1.0)) {
      std::ostringstream msg;
      msg << "activity axis value " << a << " outside (0, 1]";
      throw ValidationError(msg.str());
    }
  }
  for (double s : surface.sleep_axis) {
    if (!(s >= 0.0 && s <= 1.0)) {
      std::ostringstream msg;
      msg << "sleep axis value " << s << " outside [0, 1]";
      throw ValidationError(msg.str());
    }
  }
  surface.mode = spec.mode;
  surface.label0 = incumbent.device.name;
  surface.label1 = candidate.device.name;
  surface.scheme = to_string(spec.scheme);
  surface.basis = to_string(spec.basis);

  const double m0 = embodied_joules(incumbent.device, spec.basis);
  const double m1 = embodied_joules(candidate.device, spec.basis);
  const std::size_t rows = surface.activity_axis.size();
  const std::size_t cols = surface.sleep_axis.size();
  surface.cells.resize(rows * cols);

  auto evaluate_cell = [&](std::size_t ai, std::size_t si) {
    const double a = surface.activity_axis[ai];
    const double s = surface.sleep_axis[si];
    ComparisonInput input;
    input.m0_j = m0;
    input.m1_j = m1;
    input.p0_w = cell_power_w(incumbent, spec, a, s, ai, si);
    input.p1_w = cell_power_w(candidate, spec, a, s, ai, si);
    input.label0 = surface.label0;
    input.label1 = surface.label1;
    surface.cells[ai * cols + si] =
        spec.mode == SweepMode::breakeven ? breakeven_time(input) : indifference_time(input);
  };

  const int threads = std::max(1, spec.threads);
  if (threads == 1 || rows * cols < 2) {
    for (std::size_t ai = 0; ai < rows; ++ai) {
      for (std::size_t si = 0; si < cols; ++si) {
        evaluate_cell(ai, si);
      }
    }
  } else {
    // Static row interleave; each cell writes only its own slot.
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&, w]() {
        try {
          for (std::size_t ai = static_cast<std::size_t>(w); ai < rows;
               ai += static_cast<std::size_t>(threads)) {
            for (std::size_t si = 0; si < cols; ++si) {
              evaluate_cell(ai, si);
            }
          }
        } catch (...) {
          failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) {
      worker.join();
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }
  return surface;
}

namespace {

std::string format_axis_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_surface_csv(const SweepSurface& surface) {
  std::ostringstream out;
  out << "activity/sleep";
  for (double s : surface.sleep_axis) {
    out << ',' << format_axis_value(s);
  }
  out << '\n';
  for (std::size_t ai = 0; ai < surface.activity_axis.size(); ++ai) {
    out << format_axis_value(surface.activity_axis[ai]);
    for (std::size_t si = 0; si < surface.sleep_axis.size(); ++si) {
      const TimeResult& cell = surface.cell(ai, si);
      out << ',';
      switch (cell.kind) {
        case TimeKind::finite: {
          char buf[32];
          std::snprintf(buf, sizeof(buf), "%.1f", cell.seconds / kSecondsPerDay);
          out << buf;
          break;
        }
        case TimeKind::dominated_by_candidate:
          out << (cell.equivalent ? "equivalent" : "dominated");
          break;
        case TimeKind::dominated_by_incumbent:
          out << "dominated";
          break;
        case TimeKind::never:
          out << "never";
          break;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace greenedge::tradeoff
