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

#include "maskfx/compositor.h"

#include <cmath>
#include <string>
#include <vector>

#include "maskfx/errors.h"
#include "maskfx/filters.h"
#include "maskfx/simd/kernels.h"

namespace maskfx {
namespace {

// Float taps sum to 1 only up to rounding; values this close to an endpoint
// are the endpoint.
constexpr float kAlphaSnap = 1e-5f;

std::string Dims(int w, int h) {
  return std::to_string(w) + "x" + std::to_string(h);
}

void CheckSameSize(const RasterImage& image, const AlphaMask& alpha,
                   const char* what) {
  if (image.width() != alpha.width() || image.height() != alpha.height()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": image " + Dims(image.width(), image.height()) +
                    " vs alpha " + Dims(alpha.width(), alpha.height()));
  }
}

// Blends row by row; the per-pixel alpha is repeated once per channel.
RasterImage BlendImages(const RasterImage& fg, const RasterImage& bg,
                        const AlphaMask& alpha) {
  const simd::KernelTable& k = simd::Kernels();
  const int width = fg.width();
  RasterImage out(width, fg.height());
  std::vector<float> weights(static_cast<size_t>(width) * 3);
  for (int y = 0; y < fg.height(); ++y) {
    const float* a = alpha.Row(y);
    for (int x = 0; x < width; ++x) {
      weights[3 * x] = weights[3 * x + 1] = weights[3 * x + 2] = a[x];
    }
    k.blend_u8(fg.Row(y), bg.Row(y), weights.data(), out.Row(y), weights.size());
  }
  return out;
}

}  // namespace

void RenderConfig::Validate() const {
  if (!(feather_sigma >= 0.0) || !std::isfinite(feather_sigma)) {
    throw Error(ErrorCode::kInvalidArgument, "feather sigma must be >= 0");
  }
  if (!(score_threshold >= 0.0 && score_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "score threshold must be in [0, 1]");
  }
  morphology.Validate();
}

AlphaMask Feather(const BinaryMask& mask, double sigma) {
  if (!(sigma >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "feather sigma must be >= 0");
  }
  if (sigma == 0.0) return AlphaMask::FromMask(mask);
  std::vector<float> field(mask.pixel_count());
  std::span<const uint8_t> bits = mask.bits();
  for (size_t i = 0; i < field.size(); ++i) field[i] = bits[i] ? 1.0f : 0.0f;
  std::vector<float> blurred =
      GaussianBlurField(field, mask.width(), mask.height(), sigma);
  for (float& a : blurred) {
    if (a < kAlphaSnap) a = 0.0f;
    if (a > 1.0f - kAlphaSnap) a = 1.0f;
  }
  return AlphaMask(mask.width(), mask.height(), std::move(blurred));
}

RasterImage Fuse(const RasterImage& fg, const RasterImage& bg,
                 const AlphaMask& alpha) {
  if (fg.width() != bg.width() || fg.height() != bg.height()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "fuse: foreground " + Dims(fg.width(), fg.height()) +
                    " vs background " + Dims(bg.width(), bg.height()));
  }
  CheckSameSize(fg, alpha, "fuse");
  return BlendImages(fg, bg, alpha);
}

std::pair<RasterImage, RasterImage> ExtractRegions(const RasterImage& image,
                                                   const AlphaMask& alpha) {
  CheckSameSize(image, alpha, "extract_regions");
  RasterImage black(image.width(), image.height());
  return {BlendImages(image, black, alpha), BlendImages(black, image, alpha)};
}

RenderResult Render(const RasterImage& image,
                    const SegmentationManifest& manifest,
                    const RenderConfig& config, const FilterRegistry& registry,
                    const ClassTable& classes) {
  if (image.width() != manifest.image_width ||
      image.height() != manifest.image_height) {
    throw Error(ErrorCode::kDimensionMismatch,
                "image is " + Dims(image.width(), image.height()) +
                    " but the manifest describes " +
                    Dims(manifest.image_width, manifest.image_height));
  }
  config.Validate();
  auto with_stage = [](const char* stage, const Error& e) {
    return Error(e.code(), std::string(stage) + ": " + e.what());
  };
  FilterParams fg_params, bg_params;
  try {
    fg_params = registry.Resolve(config.fg_filter);
  } catch (const Error& e) {
    throw with_stage("foreground filter", e);
  }
  try {
    bg_params = registry.Resolve(config.bg_filter);
  } catch (const Error& e) {
    throw with_stage("background filter", e);
  }

  RenderResult result;
  if (config.class_override) {
    result.selection = SelectClassMask(manifest, config.score_threshold,
                                       *config.class_override, classes);
  } else {
    result.selection =
        SelectTopMask(manifest, config.score_threshold, config.priority);
  }

  AlphaMask alpha;
  if (result.selection) {
    result.final_mask = SmoothMask(result.selection->mask, config.morphology);
    alpha = Feather(result.final_mask, config.feather_sigma);
  } else {
    result.final_mask = BinaryMask(image.width(), image.height());
    alpha = AlphaMask(image.width(), image.height(), 0.0f);
    result.notice = config.class_override
                        ? "no-object: requested class not detected; "
                          "whole image treated as background"
                        : "no-object: no instance passed the score threshold; "
                          "whole image treated as background";
  }

  // A region with no coverage cannot influence the blend, so its filter is
  // skipped; the fused output is the same either way.
  const bool need_fg = !alpha.AllEqual(0.0f);
  const bool need_bg = !alpha.AllEqual(1.0f);
  RasterImage fg, bg;
  try {
    fg = need_fg ? registry.Apply(config.fg_filter, image) : image;
  } catch (const Error& e) {
    throw with_stage("foreground filter", e);
  }
  // Filters are pure, so an identical background spec reuses the result.
  const bool same_filter = need_fg &&
                           config.fg_filter.keyword == config.bg_filter.keyword &&
                           fg_params == bg_params;
  try {
    if (same_filter) {
      bg = fg;
    } else {
      bg = need_bg ? registry.Apply(config.bg_filter, image) : image;
    }
  } catch (const Error& e) {
    throw with_stage("background filter", e);
  }
  result.image = Fuse(fg, bg, alpha);
  return result;
}

}  // namespace maskfx
