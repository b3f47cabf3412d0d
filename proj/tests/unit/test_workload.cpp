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

#include <doctest.h>

#include "../common/conv_oracle.hpp"
#include "greenedge/errors.hpp"
#include "greenedge/workload.hpp"

using namespace greenedge;
using workload::ConvLayerSpec;
using workload::NetworkSpec;
using workload::OpaqueLayerSpec;

TEST_CASE("conv output dims follow the windowing arithmetic") {
  CHECK((workload::conv_output_dims({1, 1, 3, 5, 5, 1, 0}) == std::pair{3, 3}));
  CHECK((workload::conv_output_dims({1, 1, 3, 224, 224, 1, 1}) == std::pair{224, 224}));
  CHECK(workload::conv_output_dims({3, 64, 11, 227, 227, 4, 0}).first == 55);
  CHECK_THROWS_AS(workload::conv_output_dims({1, 1, 7, 5, 5, 1, 0}), ValidationError);
  CHECK_THROWS_AS(workload::conv_output_dims({0, 1, 3, 5, 5, 1, 0}), ValidationError);
}

TEST_CASE("conv FLOPs match hand counts") {
  CHECK(workload::conv_flops({1, 1, 1, 1, 1, 1, 0}) == 2);  // single MAC
  // 6x6 input, 3x3 kernel: 4x4 windows; 2 * 2 * 16 * 3 * 9 = 1728.
  const ConvLayerSpec layer{3, 2, 3, 6, 6, 1, 0};
  CHECK(workload::conv_flops(layer) == 1728);
  CHECK(workload::conv_flops(layer) == testing::brute_force_conv_flops(layer));
}

TEST_CASE("conv FLOPs equal the brute-force window walk on small layers") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int k = 1; k <= 4; ++k) {
        for (int rows = 1; rows <= 5; ++rows) {
          for (int stride = 1; stride <= 2; ++stride) {
            for (int pad = 0; pad <= 1; ++pad) {
              if (rows + 2 * pad < k) continue;
              const ConvLayerSpec layer{n, m, k, rows, rows + 1 <= 5 ? rows + 1 : rows, stride,
                                        pad};
              if (layer.cols_in + 2 * pad < k) continue;
              CHECK(workload::conv_flops(layer) == testing::brute_force_conv_flops(layer));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("conv FLOPs are linear in channel counts") {
  const ConvLayerSpec base{3, 4, 3, 8, 8, 1, 1};
  ConvLayerSpec doubled_m = base;
  doubled_m.out_channels *= 2;
  CHECK(workload::conv_flops(doubled_m) == 2 * workload::conv_flops(base));
  ConvLayerSpec doubled_n = base;
  doubled_n.in_channels *= 2;
  CHECK(workload::conv_flops(doubled_n) == 2 * workload::conv_flops(base));
}

TEST_CASE("network FLOPs sum layers, scale with batch and validate chaining") {
  NetworkSpec empty{"empty", 1, 3, 8, 8, {}};
  CHECK(workload::network_flops(empty).forward_flops == 0);

  const ConvLayerSpec first{3, 4, 3, 8, 8, 1, 0};   // out 4x6x6
  const ConvLayerSpec second{4, 2, 3, 6, 6, 1, 0};  // out 2x4x4
  NetworkSpec net{"two", 1, 3, 8, 8, {first, second}};
  const auto estimate = workload::network_flops(net);
  CHECK(estimate.forward_flops ==
        workload::conv_flops(first) + workload::conv_flops(second));
  CHECK(estimate.training_flops == 3 * estimate.forward_flops);
  CHECK(estimate.per_item);

  NetworkSpec batched = net;
  batched.batch = 2;
  CHECK(workload::network_flops(batched).forward_flops == 2 * estimate.forward_flops);
  CHECK_FALSE(workload::network_flops(batched).per_item);

  CHECK(workload::network_flops(net, 5).training_flops == 5 * estimate.forward_flops);

  NetworkSpec single{"one", 3, 3, 8, 8, {first}};
  CHECK(workload::network_flops(single).forward_flops == 3 * workload::conv_flops(first));

  // Opaque layers contribute their declared FLOPs and keep the chain intact.
  NetworkSpec pooled{"pooled", 1, 3, 8, 8,
                     {first, OpaqueLayerSpec{"pool", 4, 3, 3, 10}, ConvLayerSpec{4, 2, 3, 3, 3, 1, 0}}};
  CHECK(workload::network_flops(pooled).forward_flops ==
        workload::conv_flops(first) + 10 +
            workload::conv_flops({4, 2, 3, 3, 3, 1, 0}));

  NetworkSpec broken{"broken", 1, 3, 8, 8, {first, ConvLayerSpec{5, 2, 3, 6, 6, 1, 0}}};
  CHECK_THROWS_WITH_AS(workload::network_flops(broken), doctest::Contains("layer 1"),
                       ValidationError);

  NetworkSpec wrong_dims{"dims", 1, 3, 8, 8, {ConvLayerSpec{3, 4, 3, 9, 9, 1, 0}}};
  CHECK_THROWS_AS(workload::network_flops(wrong_dims), ValidationError);
}

TEST_CASE("time and energy per item from a GFLOPS record") {
  operational::WorkloadRecord record;
  record.benchmark = "alexnet-train";
  record.device = "jetson-nx";
  record.phase = operational::Phase::training;
  record.unit = operational::ThroughputUnit::gflops;
  record.throughput = 1.0;
  record.power_w = 1.0;

  // 2*M*R*C*N*K^2 with M=5000, N=100, K=1 on a 1x1 input is exactly 1e6 FLOPs.
  NetworkSpec net{"unit", 1, 100, 1, 1, {ConvLayerSpec{100, 5000, 1, 1, 1, 1, 0}}};
  const auto estimate = workload::network_flops(net);
  REQUIRE(estimate.forward_flops == 1'000'000);
  auto [seconds, joules] =
      workload::time_and_energy_per_item(net, record, operational::Phase::inference);
  CHECK(seconds == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(joules == doctest::Approx(1e-3).epsilon(1e-12));

  record.throughput = 1335.0;
  record.power_w = 21.05;
  auto [gpu_seconds, gpu_joules] =
      workload::time_and_energy_per_item(net, record, operational::Phase::training);
  CHECK(gpu_seconds == doctest::Approx(3e6 / (1335.0 * 1e9)).epsilon(1e-12));
  CHECK(gpu_joules == doctest::Approx(gpu_seconds * 21.05).epsilon(1e-12));

  NetworkSpec nothing{"none", 1, 1, 1, 1, {}};
  auto [zero_seconds, zero_joules] =
      workload::time_and_energy_per_item(nothing, record, operational::Phase::inference);
  CHECK(zero_seconds == 0.0);
  CHECK(zero_joules == 0.0);

  operational::WorkloadRecord fps = record;
  fps.phase = operational::Phase::inference;
  fps.unit = operational::ThroughputUnit::fps;
  CHECK_THROWS_AS(workload::time_and_energy_per_item(net, fps, operational::Phase::inference),
                  ValidationError);
}
