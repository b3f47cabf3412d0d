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

#include "greenedge/io.hpp"
#include "greenedge/tradeoff.hpp"

namespace greenedge::report {

enum class TableId { grid_mixes, embodied, efficiency };

// A rendered table: first row is the header. Annotations carry erratum and
// assumption notes that belong next to the data.
struct TableArtifact {
  TableId id = TableId::grid_mixes;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> annotations;
};

// Locale-independent fixed-point rendering (period decimal separator).
std::string format_fixed(double value, int decimals);
long long round_to_int(double value);

// Mixes computed from the shipped shares at full precision.
std::vector<grid::CarbonIntensity> computed_mixes(const io::GridDatabase& db);

// Mixes rounded to whole gCO2eq/kWh, the source table's presentation.
// Downstream tables (embodied carbon, per-carbon efficiency) consume these;
// that is the arithmetic that lands on the published cells.
std::vector<grid::CarbonIntensity> presentation_mixes(const io::GridDatabase& db);

// Source factors, regional shares and the resulting mixes, one region column
// each. Regions restricted to `region_filter` when nonempty.
TableArtifact grid_mixes_table(const io::GridDatabase& db, const std::string& region_filter = "");

// Die statistics, MJ per die and per-region gCO2eq, one device column each.
// Module basis scales the energy and carbon rows by dies_per_module.
TableArtifact embodied_table(const io::DeviceDatabase& devices, const io::GridDatabase& grids,
                             tradeoff::EmbodiedBasis basis,
                             const std::string& device_filter = "");

// Per-watt and per-carbon efficiency for every workload record. Rows whose
// computed per-carbon range disagrees with the published one are annotated
// and the computed values emitted.
TableArtifact efficiency_table(const io::WorkloadDatabase& workloads, const io::GridDatabase& grids);

// Delimited rendering with the provenance comment first and annotations as
// trailing comment lines. Byte-stable for identical inputs.
std::string render_delimited(const TableArtifact& table, char delimiter,
                             const std::string& provenance);

// Column-aligned rendering for terminals.
std::string render_pretty(const TableArtifact& table, const std::string& provenance);

// "# greenedge <version> inputs: label=fingerprint ..." comment line.
std::string provenance_comment(
    const std::vector<std::pair<std::string, std::filesystem::path>>& inputs);

}  // namespace greenedge::report
