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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "greenedge/fab.hpp"
#include "greenedge/grid.hpp"
#include "greenedge/operational.hpp"
#include "greenedge/tradeoff.hpp"
#include "greenedge/workload.hpp"

namespace greenedge::io {

struct GridDatabase {
  grid::EmissionFactorTable factors;
  std::vector<grid::RegionProfile> regions;

  const grid::RegionProfile* find_region(std::string_view name) const;
};

struct DeviceDatabase {
  std::vector<fab::LcaStudy> studies;
  std::vector<fab::DeviceSpec> devices;

  const fab::DeviceSpec* find_device(std::string_view name) const;
};

struct WorkloadDatabase {
  std::vector<operational::WorkloadRecord> records;

  const operational::WorkloadRecord* find_record(std::string_view device,
                                                 std::string_view benchmark) const;
};

// A saved two-system comparison: who replaces whom, on which benchmark,
// under which time analysis and scenario grid. `network` optionally names a
// network spec whose FLOP model is attached to the output sidecar.
struct ScenarioConfig {
  std::string name;
  std::string incumbent;
  std::string candidate;
  std::string benchmark;
  std::string network;
  tradeoff::SweepMode mode = tradeoff::SweepMode::breakeven;
  tradeoff::EmbodiedBasis basis = tradeoff::EmbodiedBasis::die;
  tradeoff::ComparisonScheme scheme = tradeoff::ComparisonScheme::iso_power;
  double demand = 0.0;
  operational::ThroughputUnit demand_unit = operational::ThroughputUnit::fps;
  tradeoff::AxisSpec activity;
  tradeoff::AxisSpec sleep;
};

// Loaders throw LoadError for unreadable files or malformed JSON and
// ValidationError (from the owning module) for data that parses but
// violates an invariant.
GridDatabase load_grid_database(const std::filesystem::path& path);
DeviceDatabase load_device_database(const std::filesystem::path& path);
WorkloadDatabase load_workload_database(const std::filesystem::path& path);
workload::NetworkSpec load_network(const std::filesystem::path& path,
                                   std::vector<std::string>* warnings = nullptr);
ScenarioConfig load_scenario(const std::filesystem::path& path);

// FNV-1a 64-bit over the file bytes, as a 16-hex-digit string. Used for
// provenance comments in emitted artifacts.
std::string file_fingerprint(const std::filesystem::path& path);

// Whole-file atomic write: temp file in the target directory, then rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace greenedge::io
