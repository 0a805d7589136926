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

#include <cmath>
#include <string>

#include "maskfx/errors.h"
#include "maskfx/filters.h"
#include "maskfx/simd/kernels.h"
#include "planes.h"

namespace maskfx {
namespace {

void CheckSigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::kInvalidArgument,
                "gaussian sigma must be positive, got " + std::to_string(sigma));
  }
}

}  // namespace

int GaussianRadius(double sigma) {
  CheckSigma(sigma);
  return std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
}

std::vector<float> GaussianKernel(double sigma) {
  const int radius = GaussianRadius(sigma);
  std::vector<double> weights(2 * radius + 1);
  double sum = 0.0;
  for (int k = -radius; k <= radius; ++k) {
    double w = std::exp(-(k * k) / (2.0 * sigma * sigma));
    weights[k + radius] = w;
    sum += w;
  }
  std::vector<float> taps(weights.size());
  for (size_t i = 0; i < taps.size(); ++i) {
    taps[i] = static_cast<float>(weights[i] / sum);
  }
  return taps;
}

std::vector<float> GaussianBlurField(std::span<const float> field, int width,
                                     int height, double sigma) {
  std::vector<float> taps = GaussianKernel(sigma);
  return internal::ConvolveSeparable(field, width, height, taps);
}

RasterImage GaussianBlur(const RasterImage& image, double sigma) {
  std::vector<float> taps = GaussianKernel(sigma);
  std::array<internal::FloatPlane, 3> planes = internal::SplitChannels(image);
  for (auto& p : planes) {
    p = internal::ConvolveSeparable(p, image.width(), image.height(), taps);
  }
  return internal::MergeChannels(planes, image.width(), image.height());
}

GrayImage GaussianBlur(const GrayImage& image, double sigma) {
  std::vector<float> taps = GaussianKernel(sigma);
  std::vector<float> plane(image.data().begin(), image.data().end());
  plane = internal::ConvolveSeparable(plane, image.width(), image.height(), taps);
  std::vector<uint8_t> out(plane.size());
  simd::Kernels().round_to_u8(plane.data(), out.data(), plane.size());
  return GrayImage(image.width(), image.height(), std::move(out));
}

}  // namespace maskfx
