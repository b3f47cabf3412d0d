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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "greenedge/operational.hpp"

namespace greenedge::workload {

// One square-kernel convolution layer. FLOPs count a multiply and an
// accumulate separately (factor 2 per product term).
struct ConvLayerSpec {
  int in_channels = 0;   // N
  int out_channels = 0;  // M
  int kernel = 0;        // K, square
  int rows_in = 0;
  int cols_in = 0;
  int stride = 1;
  int padding = 0;
};

// Pooling, FC-as-is, softmax, ...: anything the convolution formula does not
// cover. Carries its own FLOP count (default 0) and its output geometry so
// the layer chain stays checkable.
struct OpaqueLayerSpec {
  std::string name;
  int out_channels = 0;
  int rows_out = 0;
  int cols_out = 0;
  std::uint64_t flops = 0;
};

using NetworkLayer = std::variant<ConvLayerSpec, OpaqueLayerSpec>;

struct NetworkSpec {
  std::string name;
  int batch = 1;
  int in_channels = 0;
  int rows_in = 0;
  int cols_in = 0;
  std::vector<NetworkLayer> layers;
};

// Forward: forward pass only. Training: forward, input-gradient and
// weight-gradient passes (default multiplier 3).
struct WorkEstimate {
  std::uint64_t forward_flops = 0;
  std::uint64_t training_flops = 0;
  bool per_item = true;  // true iff batch size 1
};

inline constexpr unsigned kDefaultTrainingMultiplier = 3;

// floor((in + 2*padding - kernel) / stride) + 1 per dimension.
// Throws ValidationError when either output dimension would be < 1.
std::pair<int, int> conv_output_dims(const ConvLayerSpec& layer);

// 2 * M * R_out * C_out * N * K^2.
std::uint64_t conv_flops(const ConvLayerSpec& layer);

// Sums layer FLOPs times batch, validating that each layer's output feeds
// the next layer's input (channels and spatial dims).
WorkEstimate network_flops(const NetworkSpec& net,
                           unsigned training_multiplier = kDefaultTrainingMultiplier);

// Seconds and joules to push one item's work through a GFLOPS-rated device
// at its active power. FPS records already embed per-item time and are
// rejected with a ValidationError.
std::pair<double, double> time_and_energy_per_item(const NetworkSpec& net,
                                                   const operational::WorkloadRecord& record,
                                                   operational::Phase phase);

}  // namespace greenedge::workload
