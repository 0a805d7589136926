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

// Luminance-based filters: gray, gray-blur, pencil-sketch, and preserve.

#include <algorithm>
#include <cstdint>

#include "maskfx/filters.h"

namespace maskfx {

uint8_t Luma(uint8_t r, uint8_t g, uint8_t b) {
  // Weights scaled by 1000 keep the sum exact; +500 rounds half up, which is
  // half away from zero for non-negative values.
  return static_cast<uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

GrayImage LumaPlane(const RasterImage& image) {
  std::vector<uint8_t> gray(image.pixel_count());
  std::span<const uint8_t> px = image.data();
  for (size_t i = 0; i < gray.size(); ++i) {
    gray[i] = Luma(px[3 * i], px[3 * i + 1], px[3 * i + 2]);
  }
  return GrayImage(image.width(), image.height(), std::move(gray));
}

RasterImage ToGray(const RasterImage& image) { return LumaPlane(image).ToRgb(); }

RasterImage GrayBlur(const RasterImage& image, double sigma) {
  // Blurring the three identical channels of ToGray(image) is the same as
  // blurring the single luminance plane once.
  return GaussianBlur(LumaPlane(image), sigma).ToRgb();
}

RasterImage PencilSketch(const RasterImage& image, double sigma) {
  GrayImage gray = LumaPlane(image);
  std::vector<uint8_t> negative(gray.data().begin(), gray.data().end());
  for (uint8_t& v : negative) v = static_cast<uint8_t>(255 - v);
  GrayImage blurred = GaussianBlur(
      GrayImage(image.width(), image.height(), std::move(negative)), sigma);

  std::vector<uint8_t> out(gray.data().size());
  for (size_t i = 0; i < out.size(); ++i) {
    const uint32_t g = gray.data()[i];
    const uint32_t b = blurred.data()[i];
    if (b == 255) {
      out[i] = 255;
      continue;
    }
    // round(g * 255 / (255 - b)) with exact integer half-up rounding.
    const uint32_t denom = 255 - b;
    const uint32_t q = (2 * g * 255 + denom) / (2 * denom);
    out[i] = static_cast<uint8_t>(std::min<uint32_t>(q, 255));
  }
  return GrayImage(image.width(), image.height(), std::move(out)).ToRgb();
}

RasterImage Preserve(const RasterImage& image) { return image; }

}  // namespace maskfx
