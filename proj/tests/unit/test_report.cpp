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

#include <cstdlib>
#include <filesystem>

#include <doctest.h>

#include "greenedge/errors.hpp"
#include "greenedge/report.hpp"

using namespace greenedge;
namespace fs = std::filesystem;

namespace {

fs::path data_dir() {
  if (const char* env = std::getenv("GREENEDGE_REPO")) return fs::path(env) / "data";
  return fs::current_path() / "data";
}

io::GridDatabase grids() { return io::load_grid_database(data_dir() / "grids.json"); }
io::DeviceDatabase devices() { return io::load_device_database(data_dir() / "devices.json"); }
io::WorkloadDatabase workloads() {
  return io::load_workload_database(data_dir() / "workloads.json");
}

const std::vector<std::string>& row_named(const report::TableArtifact& table,
                                          const std::string& label) {
  for (const auto& row : table.rows) {
    if (!row.empty() && row[0] == label) return row;
  }
  FAIL("no row named " << label);
  return table.rows.front();
}

}  // namespace

TEST_CASE("presentation mixes round the computed mixes to whole grams") {
  const auto db = grids();
  const auto exact = report::computed_mixes(db);
  REQUIRE(exact.size() == 4);
  CHECK(exact[0].g_per_kwh == doctest::Approx(395.31));
  CHECK(exact[1].g_per_kwh == doctest::Approx(233.70));
  CHECK(exact[2].g_per_kwh == doctest::Approx(438.25));
  CHECK(exact[3].g_per_kwh == doctest::Approx(187.98));
  const auto rounded = report::presentation_mixes(db);
  CHECK(rounded[0].g_per_kwh == 395.0);
  CHECK(rounded[1].g_per_kwh == 234.0);
  CHECK(rounded[2].g_per_kwh == 438.0);
  CHECK(rounded[3].g_per_kwh == 188.0);
}

TEST_CASE("grid mixes table carries shares, mixes and share-sum warnings") {
  const auto table = report::grid_mixes_table(grids());
  CHECK(table.rows.front() ==
        std::vector<std::string>{"source", "g_co2eq_per_kwh", "AZ", "CA", "TX", "NY"});
  CHECK(row_named(table, "mix_g_co2eq_per_kwh") ==
        std::vector<std::string>{"mix_g_co2eq_per_kwh", "", "395", "234", "438", "188"});
  const auto& coal = row_named(table, "coal");
  CHECK(coal[2] == "0.20");
  CHECK(coal[5] == "");  // no coal share in NY

  // CA sums to 1.02 and NY to 0.98: one warning each.
  REQUIRE(table.annotations.size() == 2);
  CHECK(table.annotations[0].find("CA") != std::string::npos);
  CHECK(table.annotations[1].find("NY") != std::string::npos);

  const auto filtered = report::grid_mixes_table(grids(), "NY");
  CHECK((filtered.rows.front() == std::vector<std::string>{"source", "g_co2eq_per_kwh", "NY"}));
  CHECK(row_named(filtered, "mix_g_co2eq_per_kwh")[2] == "188");

  CHECK_THROWS_WITH_AS(report::grid_mixes_table(grids(), "XX"), doctest::Contains("TX"),
                       ResolutionError);
}

TEST_CASE("embodied table reproduces the published energy and carbon cells") {
  const auto table = report::embodied_table(devices(), grids(), tradeoff::EmbodiedBasis::die);
  CHECK(table.rows.front() ==
        std::vector<std::string>{"attribute", "rm-32-boyd", "ddr3", "rm-32-lca2009",
                                 "rm-32-bardon", "versal-vm1802", "jetson-nx"});
  CHECK(row_named(table, "energy_mj_per_die") ==
        std::vector<std::string>{"energy_mj_per_die", "3.17", "4.47", "2.44", "1.62", "24.59",
                                 "15.80"});
  CHECK(row_named(table, "carbon_g_per_die_AZ") ==
        std::vector<std::string>{"carbon_g_per_die_AZ", "348", "490", "268", "178", "2698",
                                 "1733"});
  CHECK(row_named(table, "carbon_g_per_die_NY") ==
        std::vector<std::string>{"carbon_g_per_die_NY", "166", "233", "128", "85", "1284",
                                 "825"});

  const auto module_table =
      report::embodied_table(devices(), grids(), tradeoff::EmbodiedBasis::module, "ddr3");
  CHECK(row_named(module_table, "dies_per_module")[1] == "16");
  CHECK(row_named(module_table, "energy_mj_per_module")[1] == "71.48");

  CHECK_THROWS_AS(report::embodied_table(devices(), grids(), tradeoff::EmbodiedBasis::die, "nope"),
                  ResolutionError);
}

TEST_CASE("efficiency table renders per-watt and per-carbon columns") {
  const auto table = report::efficiency_table(workloads(), grids());
  REQUIRE(table.rows.size() == 9);  // header + eight records

  // per_watt, per_carbon_min, per_carbon_max for the first and third rows.
  CHECK(table.rows[1][6] == "42.40");
  CHECK(table.rows[1][7] == "0.35");
  CHECK(table.rows[1][8] == "0.81");
  CHECK(table.rows[1][9] == "MF/gCO2eq");
  CHECK(table.rows[3][6] == "63.42");
  CHECK(table.rows[3][7] == "521");
  CHECK(table.rows[3][8] == "1214");
  CHECK(table.rows[3][9] == "TFLOP/gCO2eq");

  // The RM inference row deviates from its published range and is the only
  // annotated one.
  CHECK(table.rows[2][7] == "4.33");
  CHECK(table.rows[2][8] == "10.09");
  REQUIRE(table.annotations.size() == 1);
  CHECK(table.annotations[0].find("rm-32-boyd") != std::string::npos);
  CHECK(table.annotations[0].find("4.6") != std::string::npos);
  CHECK(table.annotations[0].find("10.8") != std::string::npos);

  const auto empty = report::efficiency_table(io::WorkloadDatabase{}, grids());
  CHECK(empty.rows.size() == 1);
  REQUIRE(empty.annotations.size() == 1);
  CHECK(empty.annotations[0].find("empty") != std::string::npos);
}

TEST_CASE("per-carbon endpoints track an added cleaner region") {
  auto db = grids();
  grid::RegionProfile clean{"XR", {{"wind", 0.5}, {"nuclear", 0.5}}};  // mix 19
  db.regions.push_back(clean);
  const auto table = report::efficiency_table(workloads(), db);
  // GPU AlexNet upper endpoint now rides the mix-19 region:
  // 1335/21.05 * 3600 / 19 = 12016.5 -> 12017.
  CHECK(table.rows[3][8] == "12017");
  CHECK(table.rows[3][7] == "521");  // lower endpoint still at TX
}

TEST_CASE("delimited and pretty rendering are byte-stable") {
  const auto table = report::grid_mixes_table(grids());
  const auto csv = report::render_delimited(table, ',', "# prov");
  CHECK(csv == report::render_delimited(table, ',', "# prov"));
  CHECK(csv.rfind("# prov\n", 0) == 0);
  CHECK(csv.find("mix_g_co2eq_per_kwh,,395,234,438,188\n") != std::string::npos);
  CHECK(csv.find("# region 'CA' share sum 1.02") != std::string::npos);

  const auto tsv = report::render_delimited(table, '\t', "");
  CHECK(tsv.find("395\t234\t438\t188") != std::string::npos);

  const auto pretty = report::render_pretty(table, "# prov");
  CHECK(pretty.find("395") != std::string::npos);

  const auto provenance = report::provenance_comment({{"grids", data_dir() / "grids.json"}});
  CHECK(provenance.rfind("# greenedge", 0) == 0);
  CHECK(provenance.find("grids=") != std::string::npos);
  CHECK(provenance == report::provenance_comment({{"grids", data_dir() / "grids.json"}}));
}

TEST_CASE("rendering helpers are locale independent") {
  CHECK(report::format_fixed(3.16925, 2) == "3.17");
  CHECK(report::format_fixed(0.3485, 2) == "0.35");
  CHECK(report::round_to_int(347.74) == 348);
  CHECK(report::round_to_int(165.505) == 166);
}
