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

#include "planes.h"

#include "maskfx/filters.h"
#include "maskfx/simd/kernels.h"

namespace maskfx {

int ReflectIndex(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

namespace internal {

std::array<FloatPlane, 3> SplitChannels(const RasterImage& image) {
  const size_t n = image.pixel_count();
  std::array<FloatPlane, 3> planes;
  for (FloatPlane& p : planes) p.resize(n);
  std::span<const uint8_t> px = image.data();
  for (size_t i = 0; i < n; ++i) {
    planes[0][i] = px[3 * i];
    planes[1][i] = px[3 * i + 1];
    planes[2][i] = px[3 * i + 2];
  }
  return planes;
}

RasterImage MergeChannels(const std::array<FloatPlane, 3>& planes, int width,
                          int height) {
  const simd::KernelTable& k = simd::Kernels();
  const size_t n = static_cast<size_t>(width) * height;
  std::array<std::vector<uint8_t>, 3> bytes;
  for (int c = 0; c < 3; ++c) {
    bytes[c].resize(n);
    k.round_to_u8(planes[c].data(), bytes[c].data(), n);
  }
  std::vector<uint8_t> rgb(n * 3);
  for (size_t i = 0; i < n; ++i) {
    rgb[3 * i] = bytes[0][i];
    rgb[3 * i + 1] = bytes[1][i];
    rgb[3 * i + 2] = bytes[2][i];
  }
  return RasterImage(width, height, std::move(rgb));
}

FloatPlane ConvolveSeparable(std::span<const float> plane, int width,
                             int height, std::span<const float> taps) {
  const simd::KernelTable& k = simd::Kernels();
  const int ntaps = static_cast<int>(taps.size());
  const int radius = ntaps / 2;

  FloatPlane horizontal(plane.size());
  std::vector<float> padded(static_cast<size_t>(width) + 2 * radius);
  for (int y = 0; y < height; ++y) {
    const float* row = plane.data() + static_cast<size_t>(y) * width;
    for (int i = 0; i < width + 2 * radius; ++i) {
      padded[i] = row[ReflectIndex(i - radius, width)];
    }
    k.convolve_row(padded.data(), taps.data(), ntaps,
                   horizontal.data() + static_cast<size_t>(y) * width, width);
  }

  FloatPlane out(plane.size());
  std::vector<const float*> rows(ntaps);
  for (int y = 0; y < height; ++y) {
    for (int t = 0; t < ntaps; ++t) {
      rows[t] = horizontal.data() +
                static_cast<size_t>(ReflectIndex(y - radius + t, height)) * width;
    }
    k.convolve_columns(rows.data(), taps.data(), ntaps,
                       out.data() + static_cast<size_t>(y) * width, width);
  }
  return out;
}

DoublePlane BoxMean(std::span<const double> plane, int width, int height,
                    int radius) {
  const simd::KernelTable& k = simd::Kernels();
  auto row = [&](int y) {
    return plane.data() + static_cast<size_t>(ReflectIndex(y, height)) * width;
  };

  // Running column sums down the image, then a running sum along each row.
  std::vector<double> column(width, 0.0);
  for (int dy = -radius; dy <= radius; ++dy) {
    const double* src = row(dy);
    for (int x = 0; x < width; ++x) column[x] += src[x];
  }

  const double scale = 1.0 / ((2.0 * radius + 1) * (2.0 * radius + 1));
  DoublePlane out(plane.size());
  for (int y = 0; y < height; ++y) {
    if (y > 0) k.add_sub_f64(column.data(), row(y + radius), row(y - 1 - radius), width);
    double sum = 0.0;
    for (int dx = -radius; dx <= radius; ++dx) sum += column[ReflectIndex(dx, width)];
    double* dst = out.data() + static_cast<size_t>(y) * width;
    dst[0] = sum * scale;
    for (int x = 1; x < width; ++x) {
      sum = (sum + column[ReflectIndex(x + radius, width)]) -
            column[ReflectIndex(x - 1 - radius, width)];
      dst[x] = sum * scale;
    }
  }
  return out;
}

}  // namespace internal
}  // namespace maskfx
