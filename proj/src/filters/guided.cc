// Copyright 2026 The maskfx Authors. All Rights Reserved.
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

// Edge-preserving smoothing (self-guided filter) and the detail booster
// built on top of it.

#include <algorithm>
#include <string>

#include "maskfx/errors.h"
#include "maskfx/filters.h"
#include "planes.h"

namespace maskfx {
namespace {

using internal::BoxMean;
using internal::DoublePlane;

DoublePlane GuidedChannel(const RasterImage& image, int channel, int radius,
                          double epsilon) {
  const int width = image.width();
  const int height = image.height();
  const size_t n = image.pixel_count();
  DoublePlane input(n), squared(n);
  std::span<const uint8_t> px = image.data();
  for (size_t i = 0; i < n; ++i) {
    input[i] = px[3 * i + channel];
    squared[i] = input[i] * input[i];
  }
  DoublePlane mean = BoxMean(input, width, height, radius);
  DoublePlane mean_sq = BoxMean(squared, width, height, radius);

  DoublePlane a(n), b(n);
  for (size_t i = 0; i < n; ++i) {
    double var = std::max(0.0, mean_sq[i] - mean[i] * mean[i]);
    a[i] = var / (var + epsilon);
    b[i] = (1.0 - a[i]) * mean[i];
  }
  DoublePlane mean_a = BoxMean(a, width, height, radius);
  DoublePlane mean_b = BoxMean(b, width, height, radius);
  for (size_t i = 0; i < n; ++i) input[i] = mean_a[i] * input[i] + mean_b[i];
  return input;
}

}  // namespace

RasterImage EdgePreserve(const RasterImage& image, int radius, double epsilon) {
  if (radius < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge-preserve radius must be >= 1, got " + std::to_string(radius));
  }
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge-preserve epsilon must be positive");
  }
  RasterImage out(image.width(), image.height());
  std::span<uint8_t> dst = out.data();
  for (int c = 0; c < 3; ++c) {
    DoublePlane q = GuidedChannel(image, c, radius, epsilon);
    for (size_t i = 0; i < q.size(); ++i) dst[3 * i + c] = internal::RoundToByte(q[i]);
  }
  return out;
}

RasterImage DetailEnhance(const RasterImage& image, double amount, int radius,
                          double epsilon) {
  if (!(amount >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "detail amount must be >= 0");
  }
  RasterImage base = EdgePreserve(image, radius, epsilon);
  RasterImage out(image.width(), image.height());
  std::span<const uint8_t> src = image.data();
  std::span<const uint8_t> smooth = base.data();
  std::span<uint8_t> dst = out.data();
  for (size_t i = 0; i < dst.size(); ++i) {
    double b = smooth[i];
    dst[i] = internal::RoundToByte(b + amount * (src[i] - b));
  }
  return out;
}

}  // namespace maskfx
