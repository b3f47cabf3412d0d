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

// End-to-end checks against the built binary: exit codes, stdout content,
// emitted files, determinism and the golden table snapshots.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path repo_root() {
  const char* env = std::getenv("GREENEDGE_REPO");
  REQUIRE_MESSAGE(env != nullptr, "GREENEDGE_REPO must point at the repo root");
  return fs::path(env);
}

std::string binary() {
  const char* env = std::getenv("GREENEDGE_BIN");
  REQUIRE_MESSAGE(env != nullptr, "GREENEDGE_BIN must point at the greenedge binary");
  return env;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir =
      fs::temp_directory_path() / ("greenedge-cli-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

// Runs the binary with the shipped data directory preconfigured.
RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path out_file = scratch_dir() / ("stdout-" + std::to_string(counter));
  const fs::path err_file = scratch_dir() / ("stderr-" + std::to_string(counter));
  ++counter;
  const std::string command = "GREENEDGE_DATA='" + (repo_root() / "data").string() + "' '" +
                              binary() + "' " + args + " >'" + out_file.string() + "' 2>'" +
                              err_file.string() + "'";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  return result;
}

std::string write_file(const std::string& name, const std::string& body) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << body;
  return path.string();
}

const char* kTinyGrid = R"({
  "activity": {"from": 0.5, "to": 1.0, "steps": 2},
  "sleep": {"from": 0.0, "to": 1.0, "steps": 2}
})";

}  // namespace

TEST_CASE("grid command emits the four regional mixes") {
  const auto result = run("grid");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("mix_g_co2eq_per_kwh,,395,234,438,188") != std::string::npos);

  const auto single = run("grid --region NY");
  CHECK(single.exit_code == 0);
  CHECK(single.out.find("source,g_co2eq_per_kwh,NY") != std::string::npos);
  CHECK(single.out.find("mix_g_co2eq_per_kwh,,188") != std::string::npos);
  CHECK(single.out.find("395") == std::string::npos);

  const auto unknown = run("grid --region XX");
  CHECK(unknown.exit_code == 3);
  CHECK(unknown.err.find("AZ") != std::string::npos);
  CHECK(unknown.err.find("NY") != std::string::npos);
}

TEST_CASE("embodied command emits per-device columns and module scaling") {
  const auto gpu = run("embodied --device jetson-nx");
  CHECK(gpu.exit_code == 0);
  CHECK(gpu.out.find("energy_mj_per_die,15.80") != std::string::npos);
  CHECK(gpu.out.find("carbon_g_per_die_NY,825") != std::string::npos);

  const auto dimm = run("embodied --device ddr3 --basis module");
  CHECK(dimm.exit_code == 0);
  CHECK(dimm.out.find("dies_per_module,16") != std::string::npos);
  CHECK(dimm.out.find("energy_mj_per_module,71.48") != std::string::npos);

  CHECK(run("embodied --device nosuch").exit_code == 3);
}

TEST_CASE("efficiency command annotates the erratum row") {
  const auto result = run("efficiency");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find(",42.40,0.35,0.81,MF/gCO2eq") != std::string::npos);
  CHECK(result.out.find(",521,1214,TFLOP/gCO2eq") != std::string::npos);
  CHECK(result.out.find("4.33") != std::string::npos);
  CHECK(result.out.find("# erratum: rm-32-boyd") != std::string::npos);
  CHECK(result.err.find("erratum") != std::string::npos);
}

TEST_CASE("compare runs the shipped replacement scenario") {
  const fs::path out_dir = scratch_dir() / "compare-out";
  const std::string scenario =
      (repo_root() / "data" / "scenarios" / "ddr3-to-rm-alexnet-inference.json").string();
  const auto result = run("--out '" + out_dir.string() + "' compare --scenario '" + scenario + "'");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("full-activity corner") != std::string::npos);
  CHECK(result.out.find("days") != std::string::npos);

  const std::string surface = slurp(out_dir / "ddr3-to-rm-alexnet-inference.csv");
  CHECK(surface.rfind("# greenedge", 0) == 0);
  CHECK(surface.find("activity/sleep") != std::string::npos);

  const std::string sidecar = slurp(out_dir / "ddr3-to-rm-alexnet-inference.json");
  CHECK(sidecar.find("\"embodied_basis\": \"module\"") != std::string::npos);
  CHECK(sidecar.find("\"iso_work\"") != std::string::npos);
  CHECK(sidecar.find("\"active\"") != std::string::npos);

  // Same scenario at a different worker count: byte-identical surface.
  const fs::path par_dir = scratch_dir() / "compare-out-par";
  const auto parallel =
      run("--out '" + par_dir.string() + "' compare --threads 4 --scenario '" + scenario + "'");
  CHECK(parallel.exit_code == 0);
  CHECK(slurp(par_dir / "ddr3-to-rm-alexnet-inference.csv") == surface);
}

TEST_CASE("compare rejects cross-study pairs unless overridden") {
  // The shipped records deliberately never pair devices across studies, so
  // stage a workload file that does: ddr3 (boyd2011) vs jetson-nx (bardon2020).
  const std::string workloads = write_file("cross-workloads.json", R"({
    "workloads": [
      {"benchmark": "synthetic", "device": "ddr3", "phase": "inference",
       "throughput": {"unit": "fps", "value": 100}, "power_w": 2},
      {"benchmark": "synthetic", "device": "jetson-nx", "phase": "inference",
       "throughput": {"unit": "fps", "value": 400}, "power_w": 10}
    ]})");
  const std::string scenario = write_file("cross-scenario.json", std::string(R"({
    "name": "cross-scenario",
    "incumbent": "ddr3",
    "candidate": "jetson-nx",
    "benchmark": "synthetic",
    "mode": "breakeven",
    "embodied_basis": "die",
    "comparison": "iso_power",
    "grid": )") + kTinyGrid + "}");

  const fs::path out_dir = scratch_dir() / "cross-out";
  const std::string base = "--workloads '" + workloads + "' --out '" + out_dir.string() +
                           "' compare --scenario '" + scenario + "'";
  const auto denied = run(base);
  CHECK(denied.exit_code == 4);
  CHECK(denied.err.find("boyd2011") != std::string::npos);
  CHECK(denied.err.find("bardon2020") != std::string::npos);

  const auto allowed = run(base + " --allow-cross-study");
  CHECK(allowed.exit_code == 0);
}

TEST_CASE("comparing a system with itself is equivalent everywhere") {
  const std::string scenario = write_file("self-scenario.json", std::string(R"({
    "name": "self-scenario",
    "incumbent": "ddr3",
    "candidate": "ddr3",
    "benchmark": "alexnet-ternary-inference",
    "mode": "indifference",
    "embodied_basis": "die",
    "comparison": "iso_power",
    "grid": )") + kTinyGrid + "}");
  const fs::path out_dir = scratch_dir() / "self-out";
  const auto result = run("--out '" + out_dir.string() + "' compare --scenario '" + scenario + "'");
  CHECK(result.exit_code == 0);
  const std::string surface = slurp(out_dir / "self-scenario.csv");
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = surface.find("equivalent", pos)) != std::string::npos; ++pos) {
    ++count;
  }
  CHECK(count == 4);
}

TEST_CASE("compare resolution failures exit with the validation code") {
  const std::string scenario = write_file("ghost-scenario.json", std::string(R"({
    "name": "ghost-scenario",
    "incumbent": "ghost-device",
    "candidate": "ddr3",
    "benchmark": "alexnet-ternary-inference",
    "mode": "breakeven",
    "grid": )") + kTinyGrid + "}");
  const auto result = run("compare --scenario '" + scenario + "'");
  CHECK(result.exit_code == 3);
  CHECK(result.err.find("ghost-device") != std::string::npos);
}

TEST_CASE("missing databases exit with the load code") {
  CHECK(run("--grids /nonexistent.json grid").exit_code == 2);
  CHECK(run("compare --scenario /nonexistent.json").exit_code == 2);
}

TEST_CASE("an empty workload database emits an empty table with a warning") {
  const std::string workloads = write_file("empty-workloads.json", R"({"workloads": []})");
  const auto result = run("--workloads '" + workloads + "' efficiency");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("benchmark,device") != std::string::npos);
  CHECK(result.err.find("empty") != std::string::npos);
}

TEST_CASE("report writes byte-stable tables matching the goldens") {
  const fs::path first = scratch_dir() / "report-1";
  const fs::path second = scratch_dir() / "report-2";
  CHECK(run("--out '" + first.string() + "' report").exit_code == 0);
  CHECK(run("--out '" + second.string() + "' report").exit_code == 0);

  for (const char* name : {"grid-mixes.csv", "embodied.csv", "efficiency.csv"}) {
    const std::string a = slurp(first / name);
    CHECK(a == slurp(second / name));
    CHECK(a == slurp(repo_root() / "tests" / "golden" / name));
  }

  const fs::path tsv_dir = scratch_dir() / "report-tsv";
  CHECK(run("--out '" + tsv_dir.string() + "' --format tsv report").exit_code == 0);
  const std::string tsv = slurp(tsv_dir / "grid-mixes.tsv");
  CHECK(tsv.find("395\t234\t438\t188") != std::string::npos);

  CHECK(run("--format pretty report").exit_code == 3);
}
