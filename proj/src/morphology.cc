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

#include "maskfx/morphology.h"

#include <cmath>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "maskfx/errors.h"
#include "maskfx/simd/kernels.h"

namespace maskfx {
namespace {

enum class Op { kErode, kDilate };

// Horizontal pass: for every row, min (erode) or max (dilate) over a
// centered run of 2w+1 pixels, with zeros beyond the frame.
std::vector<uint8_t> HorizontalPass(const BinaryMask& mask, int half_width,
                                    Op op) {
  const simd::KernelTable& k = simd::Kernels();
  const int width = mask.width();
  std::vector<uint8_t> out(mask.pixel_count());
  if (half_width == 0) {
    std::memcpy(out.data(), mask.bits().data(), out.size());
    return out;
  }
  std::vector<uint8_t> padded(static_cast<size_t>(width) + 2 * half_width, 0);
  for (int y = 0; y < mask.height(); ++y) {
    std::memcpy(padded.data() + half_width, mask.Row(y), width);
    uint8_t* dst = out.data() + static_cast<size_t>(y) * width;
    if (op == Op::kErode) {
      k.window_min_u8(padded.data(), 2 * half_width + 1, dst, width);
    } else {
      k.window_max_u8(padded.data(), 2 * half_width + 1, dst, width);
    }
  }
  return out;
}

// Decomposes the element into horizontal runs, one per row offset. Runs of
// equal length share one horizontal pass, so a square element costs a single
// 1-D pass plus a vertical combine.
BinaryMask Apply(const BinaryMask& mask, const StructuringElement& se, Op op) {
  if (se.radius < 1) {
    throw Error(ErrorCode::kInvalidArgument, "structuring element radius must be >= 1");
  }
  const simd::KernelTable& k = simd::Kernels();
  const int width = mask.width();
  const int height = mask.height();
  const int r = se.radius;

  std::map<int, std::vector<uint8_t>> passes;
  for (int dy = -r; dy <= r; ++dy) {
    int w = se.HalfWidth(dy);
    if (!passes.count(w)) passes.emplace(w, HorizontalPass(mask, w, op));
  }

  BinaryMask out(width, height);
  for (int y = 0; y < height; ++y) {
    uint8_t* dst = out.Row(y);
    bool first = true;
    bool outside = false;
    for (int dy = -r; dy <= r; ++dy) {
      int yy = y + dy;
      if (yy < 0 || yy >= height) {
        outside = true;
        continue;
      }
      const uint8_t* src =
          passes.at(se.HalfWidth(dy)).data() + static_cast<size_t>(yy) * width;
      if (first) {
        std::memcpy(dst, src, width);
        first = false;
      } else if (op == Op::kErode) {
        k.min_into_u8(dst, src, width);
      } else {
        k.max_into_u8(dst, src, width);
      }
    }
    // A neighborhood reaching past the top or bottom edge sees a zero.
    if (op == Op::kErode && outside) std::memset(dst, 0, width);
  }
  return out;
}

}  // namespace

std::string_view ElementShapeName(ElementShape shape) {
  return shape == ElementShape::kSquare ? "square" : "disk";
}

std::optional<ElementShape> ParseElementShape(std::string_view name) {
  if (name == "square") return ElementShape::kSquare;
  if (name == "disk") return ElementShape::kDisk;
  return std::nullopt;
}

int StructuringElement::HalfWidth(int dy) const {
  if (dy < -radius || dy > radius) return -1;
  if (shape == ElementShape::kSquare) return radius;
  int w = static_cast<int>(std::sqrt(static_cast<double>(radius * radius - dy * dy)));
  // Guard sqrt rounding so w is the exact integer floor.
  while ((w + 1) * (w + 1) + dy * dy <= radius * radius) ++w;
  while (w * w + dy * dy > radius * radius) --w;
  return w;
}

bool StructuringElement::Contains(int dx, int dy) const {
  int w = HalfWidth(dy);
  return w >= 0 && dx >= -w && dx <= w;
}

size_t MorphologyConfig::MinComponentArea(size_t frame_pixels) const {
  return static_cast<size_t>(
      std::floor(min_area_fraction * static_cast<double>(frame_pixels) + 0.5));
}

void MorphologyConfig::Validate() const {
  if (opening.radius < 1 || closing.radius < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "morphology radii must be >= 1");
  }
  if (!(min_area_fraction >= 0.0 && min_area_fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "morphology.min_area_fraction must be in [0, 1]");
  }
}

BinaryMask Erode(const BinaryMask& mask, const StructuringElement& se) {
  return Apply(mask, se, Op::kErode);
}

BinaryMask Dilate(const BinaryMask& mask, const StructuringElement& se) {
  return Apply(mask, se, Op::kDilate);
}

BinaryMask Open(const BinaryMask& mask, const StructuringElement& se) {
  return Dilate(Erode(mask, se), se);
}

BinaryMask Close(const BinaryMask& mask, const StructuringElement& se) {
  return Erode(Dilate(mask, se), se);
}

BinaryMask RemoveSmallComponents(const BinaryMask& mask, size_t min_area) {
  BinaryMask out = mask;
  if (min_area <= 1) return out;
  const int width = mask.width();
  const int height = mask.height();
  std::vector<uint8_t> visited(mask.pixel_count(), 0);
  std::vector<size_t> stack;
  std::vector<size_t> component;
  std::span<const uint8_t> bits = mask.bits();
  for (size_t start = 0; start < bits.size(); ++start) {
    if (!bits[start] || visited[start]) continue;
    component.clear();
    stack.assign(1, start);
    visited[start] = 1;
    while (!stack.empty()) {
      size_t p = stack.back();
      stack.pop_back();
      component.push_back(p);
      int x = static_cast<int>(p % width);
      int y = static_cast<int>(p / width);
      for (int dy = -1; dy <= 1; ++dy) {
        int ny = y + dy;
        if (ny < 0 || ny >= height) continue;
        for (int dx = -1; dx <= 1; ++dx) {
          int nx = x + dx;
          if (nx < 0 || nx >= width) continue;
          size_t q = static_cast<size_t>(ny) * width + nx;
          if (bits[q] && !visited[q]) {
            visited[q] = 1;
            stack.push_back(q);
          }
        }
      }
    }
    if (component.size() < min_area) {
      std::span<uint8_t> dst = out.bits();
      for (size_t p : component) dst[p] = 0;
    }
  }
  return out;
}

BinaryMask SmoothMask(const BinaryMask& mask, const MorphologyConfig& config) {
  if (!config.enabled) return mask;
  config.Validate();
  BinaryMask cleaned =
      RemoveSmallComponents(mask, config.MinComponentArea(mask.pixel_count()));
  return Close(Open(cleaned, config.opening), config.closing);
}

}  // namespace maskfx
