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

#include "greenedge/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "greenedge/errors.hpp"

namespace greenedge::io {

namespace {

using json = nlohmann::ordered_json;

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LoadError("cannot open '" + path.string() + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw LoadError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

const json& require(const json& node, const char* key, const std::filesystem::path& path) {
  auto it = node.find(key);
  if (it == node.end()) {
    throw LoadError("'" + path.string() + "': missing key '" + key + "'");
  }
  return *it;
}

operational::Phase parse_phase(const std::string& s, const std::filesystem::path& path) {
  if (s == "inference") return operational::Phase::inference;
  if (s == "training") return operational::Phase::training;
  throw LoadError("'" + path.string() + "': unknown phase '" + s + "'");
}

operational::ThroughputUnit parse_unit(const std::string& s, const std::filesystem::path& path) {
  if (lowercase(s) == "fps") return operational::ThroughputUnit::fps;
  if (lowercase(s) == "gflops") return operational::ThroughputUnit::gflops;
  throw LoadError("'" + path.string() + "': unknown throughput unit '" + s + "'");
}

}  // namespace

const grid::RegionProfile* GridDatabase::find_region(std::string_view name) const {
  const std::string key = lowercase(name);
  for (const auto& region : regions) {
    if (lowercase(region.region) == key) return &region;
  }
  return nullptr;
}

const fab::DeviceSpec* DeviceDatabase::find_device(std::string_view name) const {
  const std::string key = lowercase(name);
  for (const auto& device : devices) {
    if (lowercase(device.name) == key) return &device;
  }
  return nullptr;
}

const operational::WorkloadRecord* WorkloadDatabase::find_record(
    std::string_view device, std::string_view benchmark) const {
  const std::string device_key = lowercase(device);
  const std::string benchmark_key = lowercase(benchmark);
  for (const auto& record : records) {
    if (lowercase(record.device) == device_key && lowercase(record.benchmark) == benchmark_key) {
      return &record;
    }
  }
  return nullptr;
}

GridDatabase load_grid_database(const std::filesystem::path& path) {
  const json doc = parse_file(path);
  GridDatabase db;
  std::vector<std::pair<std::string, double>> entries;
  for (const auto& [name, factor] : require(doc, "factors", path).items()) {
    entries.emplace_back(name, factor.get<double>());
  }
  db.factors = grid::EmissionFactorTable::make(std::move(entries));
  for (const auto& region_node : require(doc, "regions", path)) {
    grid::RegionProfile profile;
    profile.region = require(region_node, "region", path).get<std::string>();
    for (const auto& [source, share] : require(region_node, "shares", path).items()) {
      profile.shares.emplace_back(source, share.get<double>());
    }
    // Reject profiles whose findings reach error grade (unknown sources,
    // shares outside [0, 1], share sum outside the hard band).
    for (const auto& finding : grid::validate_profile(profile, db.factors)) {
      if (finding.severity == grid::FindingSeverity::error) {
        throw ValidationError(finding.message);
      }
    }
    db.regions.push_back(std::move(profile));
  }
  return db;
}

DeviceDatabase load_device_database(const std::filesystem::path& path) {
  const json doc = parse_file(path);
  DeviceDatabase db;
  for (const auto& node : require(doc, "studies", path)) {
    fab::LcaStudy study;
    study.id = require(node, "id", path).get<std::string>();
    study.node_min_nm = require(node, "node_min_nm", path).get<int>();
    study.node_max_nm = require(node, "node_max_nm", path).get<int>();
    if (study.node_min_nm > study.node_max_nm) {
      throw ValidationError("study '" + study.id + "': node range is inverted");
    }
    for (const auto& existing : db.studies) {
      if (existing.id == study.id) {
        throw ValidationError("duplicate study id '" + study.id + "'");
      }
    }
    db.studies.push_back(std::move(study));
  }
  for (const auto& node : require(doc, "devices", path)) {
    fab::DeviceSpec device;
    device.name = require(node, "name", path).get<std::string>();
    device.tech_node_nm = require(node, "node_nm", path).get<int>();
    device.study = require(node, "study", path).get<std::string>();
    device.die_area_mm2 = require(node, "die_mm2", path).get<double>();
    device.dies_per_wafer = require(node, "dies_per_wafer", path).get<int>();
    device.pe_kwh_per_wafer = require(node, "pe_kwh_per_wafer", path).get<double>();
    device.spintronics_extra_steps = node.value("spintronics", false);
    device.dies_per_module = node.value("dies_per_module", 1);
    fab::validate_device(device, db.studies);
    if (db.find_device(device.name) != nullptr) {
      throw ValidationError("duplicate device name '" + device.name + "'");
    }
    db.devices.push_back(std::move(device));
  }
  return db;
}

WorkloadDatabase load_workload_database(const std::filesystem::path& path) {
  const json doc = parse_file(path);
  WorkloadDatabase db;
  for (const auto& node : require(doc, "workloads", path)) {
    operational::WorkloadRecord record;
    record.benchmark = require(node, "benchmark", path).get<std::string>();
    record.device = require(node, "device", path).get<std::string>();
    record.phase = parse_phase(require(node, "phase", path).get<std::string>(), path);
    const json& throughput = require(node, "throughput", path);
    record.unit = parse_unit(require(throughput, "unit", path).get<std::string>(), path);
    record.throughput = require(throughput, "value", path).get<double>();
    record.power_w = require(node, "power_w", path).get<double>();
    record.precision_note = node.value("precision_note", "");
    if (node.contains("idle_w")) record.idle_w = node["idle_w"].get<double>();
    if (node.contains("sleep_w")) record.sleep_w = node["sleep_w"].get<double>();
    if (node.contains("published_per_carbon")) {
      const json& published = node["published_per_carbon"];
      operational::PublishedRange range;
      range.min = require(published, "min", path).get<double>();
      range.max = require(published, "max", path).get<double>();
      record.published_per_carbon = range;
    }
    operational::validate_record(record);
    db.records.push_back(std::move(record));
  }
  return db;
}

workload::NetworkSpec load_network(const std::filesystem::path& path,
                                   std::vector<std::string>* warnings) {
  const json doc = parse_file(path);
  workload::NetworkSpec net;
  net.name = require(doc, "name", path).get<std::string>();
  net.batch = doc.value("batch", 1);
  const json& input = require(doc, "input", path);
  net.in_channels = require(input, "channels", path).get<int>();
  net.rows_in = require(input, "rows", path).get<int>();
  net.cols_in = require(input, "cols", path).get<int>();
  for (const auto& node : require(doc, "layers", path)) {
    const std::string type = require(node, "type", path).get<std::string>();
    if (type == "conv") {
      workload::ConvLayerSpec layer;
      layer.in_channels = require(node, "n", path).get<int>();
      layer.out_channels = require(node, "m", path).get<int>();
      layer.kernel = require(node, "k", path).get<int>();
      layer.rows_in = require(node, "r_in", path).get<int>();
      layer.cols_in = require(node, "c_in", path).get<int>();
      layer.stride = node.value("stride", 1);
      layer.padding = node.value("pad", 0);
      net.layers.emplace_back(layer);
    } else {
      workload::OpaqueLayerSpec layer;
      layer.name = node.value("name", type);
      layer.out_channels = require(node, "m", path).get<int>();
      layer.rows_out = require(node, "r_out", path).get<int>();
      layer.cols_out = require(node, "c_out", path).get<int>();
      layer.flops = node.value("flops", 0ULL);
      if (!node.contains("flops") && warnings != nullptr) {
        warnings->push_back("network '" + net.name + "': layer '" + layer.name +
                            "' carries no FLOP count, counted as 0");
      }
      net.layers.emplace_back(layer);
    }
  }
  return net;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  const json doc = parse_file(path);
  ScenarioConfig config;
  config.name = doc.value("name", path.stem().string());
  config.incumbent = require(doc, "incumbent", path).get<std::string>();
  config.candidate = require(doc, "candidate", path).get<std::string>();
  config.benchmark = require(doc, "benchmark", path).get<std::string>();
  config.network = doc.value("network", "");
  const std::string mode = require(doc, "mode", path).get<std::string>();
  if (mode == "breakeven") {
    config.mode = tradeoff::SweepMode::breakeven;
  } else if (mode == "indifference") {
    config.mode = tradeoff::SweepMode::indifference;
  } else {
    throw LoadError("'" + path.string() + "': unknown mode '" + mode + "'");
  }
  const std::string basis = doc.value("embodied_basis", "die");
  if (basis == "die") {
    config.basis = tradeoff::EmbodiedBasis::die;
  } else if (basis == "module") {
    config.basis = tradeoff::EmbodiedBasis::module;
  } else {
    throw LoadError("'" + path.string() + "': unknown embodied basis '" + basis + "'");
  }
  const std::string scheme = doc.value("comparison", "iso_power");
  if (scheme == "iso_power") {
    config.scheme = tradeoff::ComparisonScheme::iso_power;
  } else if (scheme == "iso_work") {
    config.scheme = tradeoff::ComparisonScheme::iso_work;
  } else {
    throw LoadError("'" + path.string() + "': unknown comparison scheme '" + scheme + "'");
  }
  if (config.scheme == tradeoff::ComparisonScheme::iso_work) {
    const json& demand = require(doc, "demand", path);
    config.demand = require(demand, "value", path).get<double>();
    config.demand_unit = parse_unit(require(demand, "unit", path).get<std::string>(), path);
  }
  if (doc.contains("grid")) {
    const json& grid_node = doc["grid"];
    auto parse_axis = [&](const char* key) {
      const json& axis_node = require(grid_node, key, path);
      tradeoff::AxisSpec axis;
      axis.from = require(axis_node, "from", path).get<double>();
      axis.to = require(axis_node, "to", path).get<double>();
      axis.steps = require(axis_node, "steps", path).get<int>();
      return axis;
    };
    config.activity = parse_axis("activity");
    config.sleep = parse_axis("sleep");
  } else {
    // Fixed-point scenario: a single usage point instead of a sweep grid.
    const double activity = require(doc, "activity_ratio", path).get<double>();
    const double sleep = require(doc, "sleep_ratio", path).get<double>();
    config.activity = tradeoff::AxisSpec{activity, activity, 1};
    config.sleep = tradeoff::AxisSpec{sleep, sleep, 1};
  }
  return config;
}

std::string file_fingerprint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LoadError("cannot open '" + path.string() + "' for fingerprinting");
  }
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buffer[4096];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw LoadError("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw LoadError("short write to '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace greenedge::io
