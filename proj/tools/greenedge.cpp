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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "greenedge/errors.hpp"
#include "greenedge/io.hpp"
#include "greenedge/report.hpp"
#include "greenedge/tradeoff.hpp"
#include "greenedge/version.hpp"
#include "greenedge/workload.hpp"

namespace fs = std::filesystem;
using namespace greenedge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitLoad = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIncompatible = 4;

struct RunConfig {
  fs::path grids;
  fs::path devices;
  fs::path workloads;
  fs::path networks;
  fs::path out_dir = "out";
  std::string format = "csv";
};

fs::path default_data_dir() {
  if (const char* env = std::getenv("GREENEDGE_DATA")) {
    return fs::path(env);
  }
  return fs::path("data");
}

char delimiter_for(const std::string& format) {
  return format == "tsv" ? '\t' : ',';
}

void print_table(const report::TableArtifact& table, const RunConfig& config,
                 const std::string& provenance) {
  if (config.format == "pretty") {
    std::cout << report::render_pretty(table, provenance);
  } else {
    std::cout << report::render_delimited(table, delimiter_for(config.format), provenance);
  }
}

int cmd_grid(const RunConfig& config, const std::string& region) {
  const auto grids = io::load_grid_database(config.grids);
  const auto table = report::grid_mixes_table(grids, region);
  print_table(table, config, report::provenance_comment({{"grids", config.grids}}));
  return kExitOk;
}

int cmd_embodied(const RunConfig& config, const std::string& device, const std::string& basis) {
  const auto grids = io::load_grid_database(config.grids);
  const auto devices = io::load_device_database(config.devices);
  const auto table = report::embodied_table(
      devices, grids,
      basis == "module" ? tradeoff::EmbodiedBasis::module : tradeoff::EmbodiedBasis::die, device);
  print_table(table, config,
              report::provenance_comment({{"devices", config.devices}, {"grids", config.grids}}));
  return kExitOk;
}

int cmd_efficiency(const RunConfig& config) {
  const auto grids = io::load_grid_database(config.grids);
  const auto workloads = io::load_workload_database(config.workloads);
  const auto table = report::efficiency_table(workloads, grids);
  for (const auto& note : table.annotations) {
    std::cerr << "warning: " << note << '\n';
  }
  print_table(table, config,
              report::provenance_comment(
                  {{"workloads", config.workloads}, {"grids", config.grids}}));
  return kExitOk;
}

tradeoff::SystemConfig resolve_system(const io::DeviceDatabase& devices,
                                      const io::WorkloadDatabase& workloads,
                                      const std::string& device_name,
                                      const std::string& benchmark) {
  const fab::DeviceSpec* device = devices.find_device(device_name);
  if (device == nullptr) {
    throw ResolutionError("unknown device '" + device_name + "'");
  }
  const operational::WorkloadRecord* record = workloads.find_record(device->name, benchmark);
  if (record == nullptr) {
    throw ResolutionError("no workload record for device '" + device->name +
                          "' and benchmark '" + benchmark + "'");
  }
  tradeoff::SystemConfig system;
  system.device = *device;
  system.workload = *record;
  system.profile = operational::resolve_power_profile(*record, device->spintronics_extra_steps);
  system.scenario = usage::UsageScenario{1.0, 0.0};
  return system;
}

int cmd_compare(const RunConfig& config, const fs::path& scenario_path,
                const std::string& mode_override, const std::string& basis_override,
                bool allow_cross_study, int threads) {
  auto scenario = io::load_scenario(scenario_path);
  if (mode_override == "breakeven") scenario.mode = tradeoff::SweepMode::breakeven;
  if (mode_override == "indifference") scenario.mode = tradeoff::SweepMode::indifference;
  if (basis_override == "die") scenario.basis = tradeoff::EmbodiedBasis::die;
  if (basis_override == "module") scenario.basis = tradeoff::EmbodiedBasis::module;

  const auto devices = io::load_device_database(config.devices);
  const auto workloads = io::load_workload_database(config.workloads);
  const auto incumbent = resolve_system(devices, workloads, scenario.incumbent, scenario.benchmark);
  const auto candidate = resolve_system(devices, workloads, scenario.candidate, scenario.benchmark);

  tradeoff::SweepSpec spec;
  spec.activity = scenario.activity;
  spec.sleep = scenario.sleep;
  spec.mode = scenario.mode;
  spec.scheme = scenario.scheme;
  spec.basis = scenario.basis;
  spec.allow_cross_study = allow_cross_study;
  spec.threads = threads;
  if (scenario.scheme == tradeoff::ComparisonScheme::iso_work) {
    if (scenario.demand_unit != incumbent.workload.unit ||
        scenario.demand_unit != candidate.workload.unit) {
      throw ValidationError("scenario demand unit does not match the workload records");
    }
    spec.demand = scenario.demand;
  }

  const auto surface = tradeoff::sweep(incumbent, candidate, spec);

  const std::string provenance = report::provenance_comment(
      {{"scenario", scenario_path}, {"devices", config.devices}, {"workloads", config.workloads}});
  fs::create_directories(config.out_dir);
  const fs::path surface_path = config.out_dir / (scenario.name + ".csv");
  io::write_file_atomic(surface_path, provenance + "\n" + tradeoff::render_surface_csv(surface));

  // Sidecar with every assumption that went into the surface.
  nlohmann::ordered_json sidecar;
  sidecar["tool"] = std::string(kToolName) + " " + kVersion;
  sidecar["scenario"] = scenario.name;
  sidecar["mode"] = tradeoff::to_string(scenario.mode);
  sidecar["comparison"] = tradeoff::to_string(scenario.scheme);
  sidecar["embodied_basis"] = tradeoff::to_string(scenario.basis);
  if (scenario.scheme == tradeoff::ComparisonScheme::iso_work) {
    sidecar["demand"] = {{"unit", operational::to_string(scenario.demand_unit)},
                         {"value", scenario.demand}};
  }
  auto side_json = [&](const tradeoff::SystemConfig& system) {
    nlohmann::ordered_json side;
    side["device"] = system.device.name;
    side["benchmark"] = system.workload.benchmark;
    side["embodied_j"] = tradeoff::embodied_joules(system.device, scenario.basis);
    side["power_w"] = {{"active", system.profile.active_w},
                       {"idle", system.profile.idle_w},
                       {"sleep", system.profile.sleep_w}};
    side["throughput"] = {{"unit", operational::to_string(system.workload.unit)},
                          {"value", system.workload.throughput}};
    return side;
  };
  sidecar["incumbent"] = side_json(incumbent);
  sidecar["candidate"] = side_json(candidate);
  sidecar["grid"] = {{"activity", {{"from", scenario.activity.from},
                                   {"to", scenario.activity.to},
                                   {"steps", scenario.activity.steps}}},
                     {"sleep", {{"from", scenario.sleep.from},
                                {"to", scenario.sleep.to},
                                {"steps", scenario.sleep.steps}}}};

  if (!scenario.network.empty()) {
    const auto net = io::load_network(config.networks / (scenario.network + ".json"));
    const auto work = workload::network_flops(net);
    nlohmann::ordered_json model;
    model["network"] = net.name;
    model["flop_convention"] = "multiply and accumulate counted separately";
    model["forward_flops_per_item"] = work.forward_flops;
    model["training_flops_per_item"] = work.training_flops;
    auto per_item = [&](const tradeoff::SystemConfig& system) -> nlohmann::ordered_json {
      if (system.workload.unit != operational::ThroughputUnit::gflops) {
        return "n/a (record is per-item already)";
      }
      const auto [seconds, joules] =
          workload::time_and_energy_per_item(net, system.workload, system.workload.phase);
      return {{"seconds", seconds}, {"joules", joules}};
    };
    model["incumbent_per_item"] = per_item(incumbent);
    model["candidate_per_item"] = per_item(candidate);
    sidecar["work_model"] = model;
  }

  const auto& corner = surface.cell(surface.activity_axis.size() - 1, 0);
  char corner_text[128];
  if (corner.kind == tradeoff::TimeKind::finite) {
    const double days = corner.seconds / tradeoff::kSecondsPerDay;
    std::snprintf(corner_text, sizeof(corner_text), "%.1f days (%.2f years)", days,
                  days / tradeoff::kDaysPerYear);
  } else {
    std::snprintf(corner_text, sizeof(corner_text), "%s",
                  corner.equivalent ? "equivalent" : tradeoff::to_string(corner.kind));
  }
  sidecar["full_activity_corner"] = corner_text;

  const fs::path sidecar_path = config.out_dir / (scenario.name + ".json");
  io::write_file_atomic(sidecar_path, sidecar.dump(2) + "\n");

  std::cout << surface.label0 << " -> " << surface.label1 << " "
            << tradeoff::to_string(surface.mode)
            << ", full-activity corner (activity=" << surface.activity_axis.back()
            << ", sleep=" << surface.sleep_axis.front() << "): " << corner_text << '\n';
  std::cout << "surface: " << surface_path.string() << '\n';
  std::cout << "sidecar: " << sidecar_path.string() << '\n';
  return kExitOk;
}

int cmd_report(const RunConfig& config) {
  if (config.format != "csv" && config.format != "tsv") {
    throw ValidationError("report emits csv or tsv, not '" + config.format + "'");
  }
  const auto grids = io::load_grid_database(config.grids);
  const auto devices = io::load_device_database(config.devices);
  const auto workloads = io::load_workload_database(config.workloads);
  const char delim = delimiter_for(config.format);
  const std::string ext = config.format == "tsv" ? ".tsv" : ".csv";
  fs::create_directories(config.out_dir);

  const auto write = [&](const std::string& stem, const report::TableArtifact& table,
                         const std::string& provenance) {
    io::write_file_atomic(config.out_dir / (stem + ext),
                          report::render_delimited(table, delim, provenance));
  };
  write("grid-mixes", report::grid_mixes_table(grids),
        report::provenance_comment({{"grids", config.grids}}));
  write("embodied", report::embodied_table(devices, grids, tradeoff::EmbodiedBasis::die),
        report::provenance_comment({{"devices", config.devices}, {"grids", config.grids}}));
  write("efficiency", report::efficiency_table(workloads, grids),
        report::provenance_comment({{"workloads", config.workloads}, {"grids", config.grids}}));
  std::cout << "wrote grid-mixes" << ext << ", embodied" << ext << ", efficiency" << ext
            << " to " << config.out_dir.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  const fs::path data_dir = default_data_dir();
  config.grids = data_dir / "grids.json";
  config.devices = data_dir / "devices.json";
  config.workloads = data_dir / "workloads.json";
  config.networks = data_dir / "networks";

  CLI::App app{std::string(kToolName) + " " + kVersion +
               " - embodied/operational energy and carbon analysis for edge accelerators"};
  app.footer(
      "Exit codes: 0 success, 2 load error, 3 validation error, 4 cross-study"
      " incompatibility.\nGREENEDGE_DATA overrides the default data directory.");
  app.require_subcommand(1);

  app.add_option("--grids", config.grids, "grid mix database")->capture_default_str();
  app.add_option("--devices", config.devices, "device database")->capture_default_str();
  app.add_option("--workloads", config.workloads, "workload database")->capture_default_str();
  app.add_option("--networks", config.networks, "network spec directory")->capture_default_str();
  app.add_option("--out", config.out_dir, "output directory")->capture_default_str();
  app.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"csv", "tsv", "pretty"}))
      ->capture_default_str();

  std::string region;
  auto* grid_cmd = app.add_subcommand("grid", "regional grid carbon intensities");
  grid_cmd->fallthrough();
  grid_cmd->add_option("--region", region, "restrict to one region");

  std::string device;
  std::string basis = "die";
  auto* embodied_cmd = app.add_subcommand("embodied", "embodied energy and carbon per device");
  embodied_cmd->fallthrough();
  embodied_cmd->add_option("--device", device, "restrict to one device");
  embodied_cmd->add_option("--basis", basis, "embodied basis")
      ->check(CLI::IsMember({"die", "module"}));

  auto* efficiency_cmd =
      app.add_subcommand("efficiency", "throughput per watt and per gram CO2eq");
  efficiency_cmd->fallthrough();

  fs::path scenario_path;
  std::string mode_override;
  std::string basis_override;
  bool allow_cross_study = false;
  int threads = 1;
  auto* compare_cmd = app.add_subcommand("compare", "break-even / indifference sweep");
  compare_cmd->fallthrough();
  compare_cmd->add_option("--scenario", scenario_path, "comparison scenario file")->required();
  compare_cmd->add_option("--mode", mode_override, "override scenario mode")
      ->check(CLI::IsMember({"breakeven", "indifference"}));
  compare_cmd->add_option("--basis", basis_override, "override embodied basis")
      ->check(CLI::IsMember({"die", "module"}));
  compare_cmd->add_flag("--allow-cross-study", allow_cross_study,
                        "permit comparing devices from different LCA studies");
  compare_cmd->add_option("--threads", threads, "sweep worker threads")
      ->check(CLI::PositiveNumber);

  auto* report_cmd = app.add_subcommand("report", "write all tables to the output directory");
  report_cmd->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (grid_cmd->parsed()) return cmd_grid(config, region);
    if (embodied_cmd->parsed()) return cmd_embodied(config, device, basis);
    if (efficiency_cmd->parsed()) return cmd_efficiency(config);
    if (compare_cmd->parsed()) {
      return cmd_compare(config, scenario_path, mode_override, basis_override, allow_cross_study,
                         threads);
    }
    if (report_cmd->parsed()) return cmd_report(config);
  } catch (const LoadError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLoad;
  } catch (const IncompatibilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIncompatible;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitOther;
}
