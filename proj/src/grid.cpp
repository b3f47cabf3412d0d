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

#include "greenedge/grid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "greenedge/errors.hpp"

namespace greenedge::grid {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

EmissionFactorTable EmissionFactorTable::make(
    std::vector<std::pair<std::string, double>> entries) {
  std::vector<std::string> seen;
  for (const auto& [name, factor] : entries) {
    if (factor < 0.0) {
      std::ostringstream msg;
      msg << "emission factor for '" << name << "' is negative (" << factor << ")";
      throw ValidationError(msg.str());
    }
    std::string key = lowercase(name);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ValidationError("duplicate emission source '" + name + "'");
    }
    seen.push_back(std::move(key));
  }
  return EmissionFactorTable{std::move(entries)};
}

const double* EmissionFactorTable::find(std::string_view source) const {
  const std::string key = lowercase(source);
  for (const auto& [name, factor] : entries) {
    if (lowercase(name) == key) return &factor;
  }
  return nullptr;
}

CarbonIntensity compute_mix(const RegionProfile& profile, const EmissionFactorTable& factors) {
  double total = 0.0;
  for (const auto& [source, share] : profile.shares) {
    if (share < 0.0 || share > 1.0) {
      std::ostringstream msg;
      msg << "share for '" << source << "' in region '" << profile.region << "' is " << share
          << ", outside [0, 1]";
      throw ValidationError(msg.str());
    }
    const double* factor = factors.find(source);
    if (factor == nullptr) {
      throw ResolutionError("unknown emission source '" + source + "' in region '" +
                            profile.region + "'");
    }
    total += share * *factor;
  }
  return CarbonIntensity{total, profile.region};
}

std::vector<ProfileFinding> validate_profile(const RegionProfile& profile,
                                             const EmissionFactorTable& factors) {
  std::vector<ProfileFinding> findings;
  double sum = 0.0;
  for (const auto& [source, share] : profile.shares) {
    if (factors.find(source) == nullptr) {
      findings.push_back({FindingSeverity::error,
                          "region '" + profile.region + "' references unknown source '" + source +
                              "'"});
    }
    if (share < 0.0 || share > 1.0) {
      std::ostringstream msg;
      msg << "region '" << profile.region << "' share for '" << source << "' is " << share
          << ", outside [0, 1]";
      findings.push_back({FindingSeverity::error, msg.str()});
    }
    sum += share;
  }
  if (sum < kShareSumHardLo || sum > kShareSumHardHi) {
    std::ostringstream msg;
    msg << "region '" << profile.region << "' share sum " << sum << " outside ["
        << kShareSumHardLo << ", " << kShareSumHardHi << "]";
    findings.push_back({FindingSeverity::error, msg.str()});
  } else if (sum < kShareSumWarnLo || sum > kShareSumWarnHi) {
    std::ostringstream msg;
    msg << "region '" << profile.region << "' share sum " << sum;
    findings.push_back({FindingSeverity::warning, msg.str()});
  }
  return findings;
}

}  // namespace greenedge::grid
