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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "greenedge/grid.hpp"

namespace greenedge::fab {

// One process-LCA study and the node range it covers. Devices may only be
// compared when they reference the same study.
struct LcaStudy {
  std::string id;
  int node_min_nm = 0;
  int node_max_nm = 0;
};

// One accelerator or memory die, wafer-level LCA figures included.
// dies_per_wafer and pe_kwh_per_wafer are published inputs of record; the
// gross estimator below exists only as a cross-check.
struct DeviceSpec {
  std::string name;
  int tech_node_nm = 0;
  std::string study;
  double die_area_mm2 = 0.0;
  int dies_per_wafer = 0;
  double pe_kwh_per_wafer = 0.0;  // process energy per wafer
  bool spintronics_extra_steps = false;  // extra mask layers, provenance only
  int dies_per_module = 1;
};

inline constexpr double kMjPerKwh = 3.6;
inline constexpr double kWaferDiameterMm = 300.0;
// Usable area of a 300 mm wafer used by the die-count invariant.
inline constexpr double kWaferAreaMm2 = 70686.0;

struct EmbodiedFootprint {
  double energy_per_die_mj = 0.0;
  double energy_per_module_mj = 0.0;
  std::vector<std::pair<std::string, double>> carbon_per_die_g;     // keyed by region
  std::vector<std::pair<std::string, double>> carbon_per_module_g;  // keyed by region
};

struct CompatibilityVerdict {
  bool comparable = false;
  std::string study_a;
  std::string study_b;
};

// Throws ValidationError when a field violates its range, the node falls
// outside the referenced study, or the dies cannot fit a 300 mm wafer.
void validate_device(const DeviceSpec& device, std::span<const LcaStudy> studies);

// Wafer energy split across dies, kWh converted to MJ. Full precision;
// rounding to the 2-decimal presentation happens at rendering.
double embodied_energy_per_die_mj(const DeviceSpec& device);

// kWh per die times the region's gCO2eq per kWh.
double embodied_carbon_per_die_g(const DeviceSpec& device, const grid::CarbonIntensity& mix);

// Gross floor(wafer area / die area) count, no edge loss. Cross-check only.
int estimate_dies_per_wafer(double die_area_mm2, double wafer_diameter_mm = kWaferDiameterMm);

// Assembles per-die and per-module energy and carbon for every supplied mix.
// Throws ValidationError when mixes is empty.
EmbodiedFootprint embodied_footprint(const DeviceSpec& device,
                                     std::span<const grid::CarbonIntensity> mixes);

// Comparable iff both devices reference the same study.
CompatibilityVerdict check_study_compatibility(const DeviceSpec& a, const DeviceSpec& b);

}  // namespace greenedge::fab
