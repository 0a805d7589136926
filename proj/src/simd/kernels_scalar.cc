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

// Scalar reference kernels. These define the exact arithmetic; vector
// variants must reproduce them bit for bit.

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "maskfx/simd/kernels.h"

namespace maskfx::simd {
namespace {

void ConvolveRow(const float* src, const float* taps, int ntaps, float* dst,
                 size_t n) {
  for (size_t x = 0; x < n; ++x) {
    float acc = 0.0f;
    for (int k = 0; k < ntaps; ++k) acc += taps[k] * src[x + k];
    dst[x] = acc;
  }
}

void ConvolveColumns(const float* const* rows, const float* taps, int ntaps,
                     float* dst, size_t n) {
  for (size_t x = 0; x < n; ++x) {
    float acc = 0.0f;
    for (int k = 0; k < ntaps; ++k) acc += taps[k] * rows[k][x];
    dst[x] = acc;
  }
}

void RoundToU8(const float* src, uint8_t* dst, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    float v = std::floor(src[i] + 0.5f);
    v = std::min(std::max(v, 0.0f), 255.0f);
    dst[i] = static_cast<uint8_t>(v);
  }
}

void BlendU8(const uint8_t* fg, const uint8_t* bg, const float* w,
             uint8_t* out, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    float a = w[i];
    float b = 1.0f - a;
    float v = a * static_cast<float>(fg[i]) + b * static_cast<float>(bg[i]);
    v = std::floor(v + 0.5f);
    v = std::min(std::max(v, 0.0f), 255.0f);
    out[i] = static_cast<uint8_t>(v);
  }
}

void WindowMinU8(const uint8_t* src, int window, uint8_t* dst, size_t n) {
  for (size_t x = 0; x < n; ++x) {
    uint8_t v = src[x];
    for (int k = 1; k < window; ++k) v = std::min(v, src[x + k]);
    dst[x] = v;
  }
}

void WindowMaxU8(const uint8_t* src, int window, uint8_t* dst, size_t n) {
  for (size_t x = 0; x < n; ++x) {
    uint8_t v = src[x];
    for (int k = 1; k < window; ++k) v = std::max(v, src[x + k]);
    dst[x] = v;
  }
}

void MinIntoU8(uint8_t* dst, const uint8_t* src, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = std::min(dst[i], src[i]);
}

void MaxIntoU8(uint8_t* dst, const uint8_t* src, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = std::max(dst[i], src[i]);
}

void AddSubF64(double* acc, const double* add, const double* sub, size_t n) {
  for (size_t i = 0; i < n; ++i) acc[i] = (acc[i] + add[i]) - sub[i];
}

void BilateralAccumulate(const int32_t* center_gray, const int32_t* nbr_gray,
                         const float* nbr_r, const float* nbr_g,
                         const float* nbr_b, float spatial,
                         const float* range_lut, float* acc_w, float* acc_r,
                         float* acc_g, float* acc_b, size_t n) {
  for (size_t x = 0; x < n; ++x) {
    float w = spatial * range_lut[std::abs(center_gray[x] - nbr_gray[x])];
    acc_w[x] += w;
    acc_r[x] += w * nbr_r[x];
    acc_g[x] += w * nbr_g[x];
    acc_b[x] += w * nbr_b[x];
  }
}

}  // namespace

namespace internal {

const KernelTable& ScalarKernels() {
  static const KernelTable table = {
      Level::kScalar, ConvolveRow, ConvolveColumns, RoundToU8,
      BlendU8,        WindowMinU8, WindowMaxU8,     MinIntoU8,
      MaxIntoU8,      AddSubF64,   BilateralAccumulate,
  };
  return table;
}

}  // namespace internal
}  // namespace maskfx::simd
