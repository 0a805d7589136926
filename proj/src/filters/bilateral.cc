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

// Reflect-pads a plane by `pad` on every side.
template <typename T, typename Src>
std::vector<T> PadReflect(const Src* src, int width, int height, int pad) {
  const int pw = width + 2 * pad;
  const int ph = height + 2 * pad;
  std::vector<T> out(static_cast<size_t>(pw) * ph);
  for (int y = 0; y < ph; ++y) {
    const Src* row = src + static_cast<size_t>(ReflectIndex(y - pad, height)) * width;
    T* dst = out.data() + static_cast<size_t>(y) * pw;
    for (int x = 0; x < pw; ++x) dst[x] = static_cast<T>(row[ReflectIndex(x - pad, width)]);
  }
  return out;
}

}  // namespace

RasterImage Bilateral(const RasterImage& image, double sigma_space,
                      double sigma_range) {
  if (!(sigma_space > 0.0) || !(sigma_range > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "bilateral sigmas must be positive");
  }
  const simd::KernelTable& k = simd::Kernels();
  const int width = image.width();
  const int height = image.height();
  const int radius = static_cast<int>(std::ceil(3.0 * sigma_space));
  const int pw = width + 2 * radius;

  GrayImage luma = LumaPlane(image);
  std::array<internal::FloatPlane, 3> channels = internal::SplitChannels(image);
  std::vector<int32_t> gray =
      PadReflect<int32_t>(luma.data().data(), width, height, radius);
  std::array<std::vector<float>, 3> padded;
  for (int c = 0; c < 3; ++c) {
    padded[c] = PadReflect<float>(channels[c].data(), width, height, radius);
  }

  float range_lut[256];
  for (int d = 0; d < 256; ++d) {
    range_lut[d] = static_cast<float>(
        std::exp(-(static_cast<double>(d) * d) / (2.0 * sigma_range * sigma_range)));
  }

  std::vector<float> acc_w(width), acc_r(width), acc_g(width), acc_b(width);
  std::array<internal::FloatPlane, 3> out;
  for (auto& p : out) p.resize(image.pixel_count());

  for (int y = 0; y < height; ++y) {
    std::fill(acc_w.begin(), acc_w.end(), 0.0f);
    std::fill(acc_r.begin(), acc_r.end(), 0.0f);
    std::fill(acc_g.begin(), acc_g.end(), 0.0f);
    std::fill(acc_b.begin(), acc_b.end(), 0.0f);
    const int32_t* center =
        gray.data() + static_cast<size_t>(y + radius) * pw + radius;
    for (int dy = -radius; dy <= radius; ++dy) {
      const size_t row = static_cast<size_t>(y + radius + dy) * pw + radius;
      for (int dx = -radius; dx <= radius; ++dx) {
        const float spatial = static_cast<float>(
            std::exp(-(dx * dx + dy * dy) / (2.0 * sigma_space * sigma_space)));
        const size_t at = row + dx;
        k.bilateral_accumulate(center, gray.data() + at, padded[0].data() + at,
                               padded[1].data() + at, padded[2].data() + at,
                               spatial, range_lut, acc_w.data(), acc_r.data(),
                               acc_g.data(), acc_b.data(), width);
      }
    }
    const size_t base = static_cast<size_t>(y) * width;
    for (int x = 0; x < width; ++x) {
      out[0][base + x] = acc_r[x] / acc_w[x];
      out[1][base + x] = acc_g[x] / acc_w[x];
      out[2][base + x] = acc_b[x] / acc_w[x];
    }
  }
  return internal::MergeChannels(out, width, height);
}

}  // namespace maskfx
