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

// Plane-level helpers shared by the filter implementations.

#ifndef MASKFX_SRC_FILTERS_PLANES_H_
#define MASKFX_SRC_FILTERS_PLANES_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "maskfx/image.h"

namespace maskfx::internal {

using FloatPlane = std::vector<float>;
using DoublePlane = std::vector<double>;

std::array<FloatPlane, 3> SplitChannels(const RasterImage& image);
// Rounds each plane (half away from zero, clamped) and interleaves.
RasterImage MergeChannels(const std::array<FloatPlane, 3>& planes, int width,
                          int height);

// Separable convolution with `taps` (odd length, centered) and reflected
// borders.
FloatPlane ConvolveSeparable(std::span<const float> plane, int width,
                             int height, std::span<const float> taps);

// Mean over the reflected (2r+1)^2 window around every pixel.
DoublePlane BoxMean(std::span<const double> plane, int width, int height,
                    int radius);

inline uint8_t RoundToByte(double v) {
  v = std::floor(v + 0.5);
  return static_cast<uint8_t>(std::clamp(v, 0.0, 255.0));
}

}  // namespace maskfx::internal

#endif  // MASKFX_SRC_FILTERS_PLANES_H_
