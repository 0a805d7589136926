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

// The end-to-end pipeline: select a class mask, clean it up, soften its
// edge, filter the whole frame twice and blend the two results.

#ifndef MASKFX_COMPOSITOR_H_
#define MASKFX_COMPOSITOR_H_

#include <optional>
#include <string>
#include <utility>

#include "maskfx/class_table.h"
#include "maskfx/filter_registry.h"
#include "maskfx/image.h"
#include "maskfx/morphology.h"
#include "maskfx/segmentation.h"
#include "maskfx/selection.h"

namespace maskfx {

struct RenderConfig {
  FilterSpec fg_filter{"preserve", {}};
  FilterSpec bg_filter{"preserve", {}};
  MorphologyConfig morphology;
  double feather_sigma = 0.0;
  std::optional<int> class_override;
  double score_threshold = kDefaultScoreThreshold;
  PriorityTable priority = PriorityTable::Default();

  void Validate() const;
};

struct RenderResult {
  RasterImage image;
  // Selected class (its mask is the raw union, before morphology).
  std::optional<ClassMask> selection;
  BinaryMask final_mask;  // after morphology
  std::string notice;     // non-empty when no object was selected
};

// Hard alpha for sigma == 0, otherwise the Gaussian-blurred indicator.
AlphaMask Feather(const BinaryMask& mask, double sigma);

// out = round(alpha * fg + (1 - alpha) * bg) per channel.
RasterImage Fuse(const RasterImage& fg, const RasterImage& bg,
                 const AlphaMask& alpha);

// (round(alpha * image), round((1 - alpha) * image)); for previews only.
std::pair<RasterImage, RasterImage> ExtractRegions(const RasterImage& image,
                                                   const AlphaMask& alpha);

RenderResult Render(const RasterImage& image,
                    const SegmentationManifest& manifest,
                    const RenderConfig& config,
                    const FilterRegistry& registry = FilterRegistry::Global(),
                    const ClassTable& classes = ClassTable::Coco());

}  // namespace maskfx

#endif  // MASKFX_COMPOSITOR_H_
