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

// Binary morphology for cleaning up selection masks. Pixels outside the
// frame read as 0 for every operator.

#ifndef MASKFX_MORPHOLOGY_H_
#define MASKFX_MORPHOLOGY_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "maskfx/image.h"

namespace maskfx {

enum class ElementShape { kSquare, kDisk };

std::string_view ElementShapeName(ElementShape shape);
std::optional<ElementShape> ParseElementShape(std::string_view name);

// Centered, point-symmetric neighborhood. A square of radius r is
// (2r+1)x(2r+1); a disk holds the offsets with dx^2 + dy^2 <= r^2.
struct StructuringElement {
  ElementShape shape = ElementShape::kDisk;
  int radius = 1;

  // Every row of the element is a centered run; this is its half-length at
  // vertical offset dy, or -1 when |dy| > radius.
  int HalfWidth(int dy) const;
  bool Contains(int dx, int dy) const;
};

struct MorphologyConfig {
  bool enabled = true;
  StructuringElement opening{ElementShape::kDisk, 2};
  StructuringElement closing{ElementShape::kDisk, 2};
  // Components smaller than this fraction of the frame are removed.
  double min_area_fraction = 0.0025;

  size_t MinComponentArea(size_t frame_pixels) const;
  // Throws kInvalidArgument on radius < 1 or a fraction outside [0, 1].
  void Validate() const;
};

BinaryMask Erode(const BinaryMask& mask, const StructuringElement& se);
BinaryMask Dilate(const BinaryMask& mask, const StructuringElement& se);
BinaryMask Open(const BinaryMask& mask, const StructuringElement& se);
BinaryMask Close(const BinaryMask& mask, const StructuringElement& se);

// Clears 8-connected components with fewer than `min_area` pixels.
BinaryMask RemoveSmallComponents(const BinaryMask& mask, size_t min_area);

// remove_small_components -> open -> close; identity when disabled.
BinaryMask SmoothMask(const BinaryMask& mask, const MorphologyConfig& config);

}  // namespace maskfx

#endif  // MASKFX_MORPHOLOGY_H_
