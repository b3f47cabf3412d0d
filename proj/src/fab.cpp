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

#include "greenedge/fab.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "greenedge/errors.hpp"

namespace greenedge::fab {

void validate_device(const DeviceSpec& device, std::span<const LcaStudy> studies) {
  std::ostringstream msg;
  msg << "device '" << device.name << "': ";
  if (device.tech_node_nm <= 0) {
    msg << "tech node must be positive";
    throw ValidationError(msg.str());
  }
  if (device.die_area_mm2 <= 0.0) {
    msg << "die area must be positive";
    throw ValidationError(msg.str());
  }
  if (device.dies_per_wafer < 1) {
    msg << "dies per wafer must be at least 1";
    throw ValidationError(msg.str());
  }
  if (device.pe_kwh_per_wafer <= 0.0) {
    msg << "wafer energy must be positive";
    throw ValidationError(msg.str());
  }
  if (device.dies_per_module < 1) {
    msg << "dies per module must be at least 1";
    throw ValidationError(msg.str());
  }
  if (device.die_area_mm2 * device.dies_per_wafer > kWaferAreaMm2) {
    msg << device.dies_per_wafer << " dies of " << device.die_area_mm2
        << " mm2 exceed the " << kWaferAreaMm2 << " mm2 wafer area";
    throw ValidationError(msg.str());
  }
  const LcaStudy* study = nullptr;
  for (const auto& s : studies) {
    if (s.id == device.study) {
      study = &s;
      break;
    }
  }
  if (study == nullptr) {
    throw ResolutionError("device '" + device.name + "' references unknown study '" +
                          device.study + "'");
  }
  if (device.tech_node_nm < study->node_min_nm || device.tech_node_nm > study->node_max_nm) {
    msg << "tech node " << device.tech_node_nm << " nm outside study '" << study->id
        << "' range [" << study->node_min_nm << ", " << study->node_max_nm << "] nm";
    throw ValidationError(msg.str());
  }
}

double embodied_energy_per_die_mj(const DeviceSpec& device) {
  return device.pe_kwh_per_wafer / device.dies_per_wafer * kMjPerKwh;
}

double embodied_carbon_per_die_g(const DeviceSpec& device, const grid::CarbonIntensity& mix) {
  return device.pe_kwh_per_wafer / device.dies_per_wafer * mix.g_per_kwh;
}

int estimate_dies_per_wafer(double die_area_mm2, double wafer_diameter_mm) {
  if (die_area_mm2 <= 0.0 || wafer_diameter_mm <= 0.0) {
    std::ostringstream msg;
    msg << "die area (" << die_area_mm2 << ") and wafer diameter (" << wafer_diameter_mm
        << ") must be positive";
    throw ValidationError(msg.str());
  }
  const double radius = wafer_diameter_mm / 2.0;
  const double wafer_area = std::numbers::pi * radius * radius;
  return static_cast<int>(std::floor(wafer_area / die_area_mm2));
}

EmbodiedFootprint embodied_footprint(const DeviceSpec& device,
                                     std::span<const grid::CarbonIntensity> mixes) {
  if (mixes.empty()) {
    throw ValidationError("device '" + device.name + "': footprint needs at least one grid mix");
  }
  EmbodiedFootprint fp;
  fp.energy_per_die_mj = embodied_energy_per_die_mj(device);
  fp.energy_per_module_mj = fp.energy_per_die_mj * device.dies_per_module;
  fp.carbon_per_die_g.reserve(mixes.size());
  fp.carbon_per_module_g.reserve(mixes.size());
  for (const auto& mix : mixes) {
    const double per_die = embodied_carbon_per_die_g(device, mix);
    fp.carbon_per_die_g.emplace_back(mix.region, per_die);
    fp.carbon_per_module_g.emplace_back(mix.region, per_die * device.dies_per_module);
  }
  return fp;
}

CompatibilityVerdict check_study_compatibility(const DeviceSpec& a, const DeviceSpec& b) {
  return CompatibilityVerdict{a.study == b.study, a.study, b.study};
}

}  // namespace greenedge::fab
