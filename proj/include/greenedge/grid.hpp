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
#include <string_view>
#include <utility>
#include <vector>

namespace greenedge::grid {

// Per-source emission factors in gCO2eq per kWh. Source names are unique
// case-insensitively and factors are nonnegative.
struct EmissionFactorTable {
  std::vector<std::pair<std::string, double>> entries;

  // Throws ValidationError on duplicate names or negative factors.
  static EmissionFactorTable make(std::vector<std::pair<std::string, double>> entries);

  // Case-insensitive lookup; nullptr when absent.
  const double* find(std::string_view source) const;
};

// A region's generation shares. Shares are fractions of total generation;
// they are used as-is (no renormalization) so a column that sums to 1.02
// yields the same mix the raw arithmetic gives.
struct RegionProfile {
  std::string region;
  std::vector<std::pair<std::string, double>> shares;
};

struct CarbonIntensity {
  double g_per_kwh = 0.0;
  std::string region;
};

enum class FindingSeverity { warning, error };

struct ProfileFinding {
  FindingSeverity severity;
  std::string message;
};

// Share-weighted sum of emission factors over raw shares.
// Throws ResolutionError for an unknown source, ValidationError for a share
// outside [0, 1].
CarbonIntensity compute_mix(const RegionProfile& profile, const EmissionFactorTable& factors);

// Data-quality findings, never throws: a warning when the share sum leaves
// [0.99, 1.01], an error-grade finding when it leaves [0.95, 1.05], plus
// error findings for unresolvable sources and out-of-range shares.
std::vector<ProfileFinding> validate_profile(const RegionProfile& profile,
                                             const EmissionFactorTable& factors);

// Soft and hard share-sum tolerance bands.
inline constexpr double kShareSumWarnLo = 0.99;
inline constexpr double kShareSumWarnHi = 1.01;
inline constexpr double kShareSumHardLo = 0.95;
inline constexpr double kShareSumHardHi = 1.05;

}  // namespace greenedge::grid
