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

#include "greenedge/workload.hpp"

#include <sstream>

#include "greenedge/errors.hpp"

namespace greenedge::workload {

namespace {

void validate_conv_layer(const ConvLayerSpec& layer) {
  if (layer.in_channels < 1 || layer.out_channels < 1 || layer.kernel < 1 ||
      layer.rows_in < 1 || layer.cols_in < 1 || layer.stride < 1 || layer.padding < 0) {
    std::ostringstream msg;
    msg << "conv layer fields out of range: N=" << layer.in_channels
        << " M=" << layer.out_channels << " K=" << layer.kernel << " R_in=" << layer.rows_in
        << " C_in=" << layer.cols_in << " stride=" << layer.stride
        << " padding=" << layer.padding;
    throw ValidationError(msg.str());
  }
}

}  // namespace

std::pair<int, int> conv_output_dims(const ConvLayerSpec& layer) {
  validate_conv_layer(layer);
  const int rows = (layer.rows_in + 2 * layer.padding - layer.kernel) / layer.stride + 1;
  const int cols = (layer.cols_in + 2 * layer.padding - layer.kernel) / layer.stride + 1;
  if (layer.rows_in + 2 * layer.padding < layer.kernel ||
      layer.cols_in + 2 * layer.padding < layer.kernel || rows < 1 || cols < 1) {
    std::ostringstream msg;
    msg << "kernel " << layer.kernel << " does not fit input " << layer.rows_in << "x"
        << layer.cols_in << " with padding " << layer.padding;
    throw ValidationError(msg.str());
  }
  return {rows, cols};
}

std::uint64_t conv_flops(const ConvLayerSpec& layer) {
  const auto [rows_out, cols_out] = conv_output_dims(layer);
  const auto m = static_cast<std::uint64_t>(layer.out_channels);
  const auto n = static_cast<std::uint64_t>(layer.in_channels);
  const auto k = static_cast<std::uint64_t>(layer.kernel);
  // One multiply plus one accumulate per (n, j, t) term of each window.
  return 2ULL * m * static_cast<std::uint64_t>(rows_out) * static_cast<std::uint64_t>(cols_out) *
         n * k * k;
}

WorkEstimate network_flops(const NetworkSpec& net, unsigned training_multiplier) {
  if (net.batch < 1) {
    throw ValidationError("network '" + net.name + "': batch must be at least 1");
  }
  std::uint64_t total = 0;
  int channels = net.in_channels;
  int rows = net.rows_in;
  int cols = net.cols_in;
  for (std::size_t i = 0; i < net.layers.size(); ++i) {
    const auto& layer = net.layers[i];
    if (const auto* conv = std::get_if<ConvLayerSpec>(&layer)) {
      if (conv->in_channels != channels || conv->rows_in != rows || conv->cols_in != cols) {
        std::ostringstream msg;
        msg << "network '" << net.name << "': layer " << i << " expects input "
            << conv->in_channels << "x" << conv->rows_in << "x" << conv->cols_in
            << " but the chain provides " << channels << "x" << rows << "x" << cols;
        throw ValidationError(msg.str());
      }
      total += conv_flops(*conv);
      const auto [rows_out, cols_out] = conv_output_dims(*conv);
      channels = conv->out_channels;
      rows = rows_out;
      cols = cols_out;
    } else {
      const auto& opaque = std::get<OpaqueLayerSpec>(layer);
      total += opaque.flops;
      channels = opaque.out_channels;
      rows = opaque.rows_out;
      cols = opaque.cols_out;
    }
  }
  WorkEstimate estimate;
  estimate.forward_flops = total * static_cast<std::uint64_t>(net.batch);
  estimate.training_flops = estimate.forward_flops * training_multiplier;
  estimate.per_item = net.batch == 1;
  return estimate;
}

std::pair<double, double> time_and_energy_per_item(const NetworkSpec& net,
                                                   const operational::WorkloadRecord& record,
                                                   operational::Phase phase) {
  if (record.unit != operational::ThroughputUnit::gflops) {
    throw ValidationError("record '" + record.benchmark + "' / '" + record.device +
                          "' carries FPS throughput, which already embeds per-item time");
  }
  NetworkSpec single = net;
  single.batch = 1;
  const WorkEstimate estimate = network_flops(single);
  const double work = static_cast<double>(
      phase == operational::Phase::training ? estimate.training_flops : estimate.forward_flops);
  const double seconds = work / (record.throughput * 1e9);
  return {seconds, seconds * record.power_w};
}

}  // namespace greenedge::workload
