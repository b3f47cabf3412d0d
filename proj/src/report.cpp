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

#include "greenedge/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "greenedge/errors.hpp"
#include "greenedge/version.hpp"

namespace greenedge::report {

namespace {

// Disagreement thresholds against published per-carbon ranges, matched to
// the published rendering precision: whole units for TFLOP rows, tenths for
// MF rows.
constexpr double kPublishedTolGflops = 0.5;
constexpr double kPublishedTolFps = 0.05;

std::string format_compact(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += names[i];
  }
  return out;
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

long long round_to_int(double value) {
  return std::llround(value);
}

std::vector<grid::CarbonIntensity> computed_mixes(const io::GridDatabase& db) {
  std::vector<grid::CarbonIntensity> mixes;
  mixes.reserve(db.regions.size());
  for (const auto& region : db.regions) {
    mixes.push_back(grid::compute_mix(region, db.factors));
  }
  return mixes;
}

std::vector<grid::CarbonIntensity> presentation_mixes(const io::GridDatabase& db) {
  std::vector<grid::CarbonIntensity> mixes = computed_mixes(db);
  for (auto& mix : mixes) {
    mix.g_per_kwh = static_cast<double>(round_to_int(mix.g_per_kwh));
  }
  return mixes;
}

TableArtifact grid_mixes_table(const io::GridDatabase& db, const std::string& region_filter) {
  std::vector<const grid::RegionProfile*> regions;
  if (region_filter.empty()) {
    for (const auto& region : db.regions) regions.push_back(&region);
  } else {
    const grid::RegionProfile* region = db.find_region(region_filter);
    if (region == nullptr) {
      std::vector<std::string> known;
      for (const auto& r : db.regions) known.push_back(r.region);
      throw ResolutionError("unknown region '" + region_filter + "'; known regions: {" +
                            join_names(known) + "}");
    }
    regions.push_back(region);
  }

  TableArtifact table;
  table.id = TableId::grid_mixes;
  std::vector<std::string> header = {"source", "g_co2eq_per_kwh"};
  for (const auto* region : regions) header.push_back(region->region);
  table.rows.push_back(std::move(header));

  auto share_of = [](const grid::RegionProfile& profile, const std::string& source) {
    for (const auto& [name, share] : profile.shares) {
      if (name == source) return std::optional<double>(share);
    }
    return std::optional<double>();
  };

  for (const auto& [source, factor] : db.factors.entries) {
    std::vector<std::string> row = {source, format_compact(factor)};
    for (const auto* region : regions) {
      auto share = share_of(*region, source);
      row.push_back(share ? format_fixed(*share, 2) : "");
    }
    table.rows.push_back(std::move(row));
  }

  std::vector<std::string> mix_row = {"mix_g_co2eq_per_kwh", ""};
  for (const auto* region : regions) {
    const auto mix = grid::compute_mix(*region, db.factors);
    mix_row.push_back(std::to_string(round_to_int(mix.g_per_kwh)));
    for (const auto& finding : grid::validate_profile(*region, db.factors)) {
      if (finding.severity == grid::FindingSeverity::warning) {
        table.annotations.push_back(finding.message);
      }
    }
  }
  table.rows.push_back(std::move(mix_row));
  return table;
}

TableArtifact embodied_table(const io::DeviceDatabase& devices, const io::GridDatabase& grids,
                             tradeoff::EmbodiedBasis basis, const std::string& device_filter) {
  std::vector<const fab::DeviceSpec*> selected;
  if (device_filter.empty()) {
    for (const auto& device : devices.devices) selected.push_back(&device);
  } else {
    const fab::DeviceSpec* device = devices.find_device(device_filter);
    if (device == nullptr) {
      std::vector<std::string> known;
      for (const auto& d : devices.devices) known.push_back(d.name);
      throw ResolutionError("unknown device '" + device_filter + "'; known devices: {" +
                            join_names(known) + "}");
    }
    selected.push_back(device);
  }

  const auto mixes = presentation_mixes(grids);
  const bool module = basis == tradeoff::EmbodiedBasis::module;
  const char* suffix = module ? "module" : "die";

  TableArtifact table;
  table.id = TableId::embodied;
  std::vector<std::string> header = {"attribute"};
  for (const auto* device : selected) header.push_back(device->name);
  table.rows.push_back(std::move(header));

  auto add_row = [&](const std::string& label, auto value_of) {
    std::vector<std::string> row = {label};
    for (const auto* device : selected) row.push_back(value_of(*device));
    table.rows.push_back(std::move(row));
  };

  add_row("tech_node_nm",
          [](const fab::DeviceSpec& d) { return std::to_string(d.tech_node_nm); });
  add_row("study", [](const fab::DeviceSpec& d) { return d.study; });
  add_row("die_mm2", [](const fab::DeviceSpec& d) { return format_compact(d.die_area_mm2); });
  add_row("dies_per_wafer",
          [](const fab::DeviceSpec& d) { return std::to_string(d.dies_per_wafer); });
  add_row("pe_kwh_per_wafer",
          [](const fab::DeviceSpec& d) { return format_compact(d.pe_kwh_per_wafer); });
  add_row("spintronics_extra_steps",
          [](const fab::DeviceSpec& d) { return std::string(d.spintronics_extra_steps ? "yes" : "no"); });
  if (module) {
    add_row("dies_per_module",
            [](const fab::DeviceSpec& d) { return std::to_string(d.dies_per_module); });
  }
  add_row(std::string("energy_mj_per_") + suffix, [&](const fab::DeviceSpec& d) {
    const auto fp = fab::embodied_footprint(d, mixes);
    return format_fixed(module ? fp.energy_per_module_mj : fp.energy_per_die_mj, 2);
  });
  for (std::size_t i = 0; i < mixes.size(); ++i) {
    add_row("carbon_g_per_" + std::string(suffix) + "_" + mixes[i].region,
            [&, i](const fab::DeviceSpec& d) {
              const auto fp = fab::embodied_footprint(d, mixes);
              const auto& cells = module ? fp.carbon_per_module_g : fp.carbon_per_die_g;
              return std::to_string(round_to_int(cells[i].second));
            });
  }
  return table;
}

TableArtifact efficiency_table(const io::WorkloadDatabase& workloads, const io::GridDatabase& grids) {
  const auto mixes = presentation_mixes(grids);
  TableArtifact table;
  table.id = TableId::efficiency;
  table.rows.push_back({"benchmark", "device", "phase", "throughput", "unit", "power_w",
                        "per_watt", "per_carbon_min", "per_carbon_max", "per_carbon_unit"});
  if (workloads.records.empty()) {
    table.annotations.push_back("workload database is empty");
    return table;
  }
  for (const auto& record : workloads.records) {
    const auto report = operational::efficiency_per_carbon(record, mixes);
    const bool gflops = record.unit == operational::ThroughputUnit::gflops;
    const int decimals = gflops ? 0 : 2;
    const std::string lo = format_fixed(report.per_carbon_min, decimals);
    const std::string hi = format_fixed(report.per_carbon_max, decimals);
    table.rows.push_back({record.benchmark, record.device, operational::to_string(record.phase),
                          format_compact(record.throughput), operational::to_string(record.unit),
                          format_compact(record.power_w), format_fixed(report.per_watt, 2), lo,
                          hi, gflops ? "TFLOP/gCO2eq" : "MF/gCO2eq"});
    if (record.published_per_carbon) {
      const double tol = gflops ? kPublishedTolGflops : kPublishedTolFps;
      const auto& published = *record.published_per_carbon;
      if (std::abs(report.per_carbon_min - published.min) > tol ||
          std::abs(report.per_carbon_max - published.max) > tol) {
        std::ostringstream note;
        note << "erratum: " << record.device << "/" << record.benchmark
             << " per-carbon range computed as " << lo << "--" << hi
             << " but published as " << format_compact(published.min) << "--"
             << format_compact(published.max) << "; emitting the computed values";
        table.annotations.push_back(note.str());
      }
    }
  }
  return table;
}

std::string render_delimited(const TableArtifact& table, char delimiter,
                             const std::string& provenance) {
  std::ostringstream out;
  if (!provenance.empty()) out << provenance << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << delimiter;
      out << row[i];
    }
    out << '\n';
  }
  for (const auto& note : table.annotations) {
    out << "# " << note << '\n';
  }
  return out.str();
}

std::string render_pretty(const TableArtifact& table, const std::string& provenance) {
  std::vector<std::size_t> widths;
  for (const auto& row : table.rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::ostringstream out;
  if (!provenance.empty()) out << provenance << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << row[i];
      if (i + 1 < row.size()) {
        out << std::string(widths[i] - row[i].size(), ' ');
      }
    }
    out << '\n';
  }
  for (const auto& note : table.annotations) {
    out << "# " << note << '\n';
  }
  return out.str();
}

std::string provenance_comment(
    const std::vector<std::pair<std::string, std::filesystem::path>>& inputs) {
  std::ostringstream out;
  out << "# " << kToolName << " " << kVersion;
  if (!inputs.empty()) {
    out << " inputs:";
    for (const auto& [label, path] : inputs) {
      out << ' ' << label << '=' << io::file_fingerprint(path);
    }
  }
  return out.str();
}

}  // namespace greenedge::report
