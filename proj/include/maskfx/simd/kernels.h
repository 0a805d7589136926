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

// Row kernels behind every hot loop of the filters, morphology and fusion.
//
// Each kernel exists as a portable scalar reference and, where the CPU
// supports it, an AVX2 variant. Variants are required to be bit-identical to
// the scalar reference: vector code evaluates the same operations in the
// same order per lane, and nothing is built with FMA contraction. The table
// used at runtime is chosen once from CPU detection and can be overridden
// with MASKFX_SIMD=scalar|avx2 or SetActiveLevel().

#ifndef MASKFX_SIMD_KERNELS_H_
#define MASKFX_SIMD_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace maskfx::simd {

enum class Level { kScalar, kAvx2 };

std::string_view LevelName(Level level);

struct KernelTable {
  Level level;

  // dst[x] = sum_{k < ntaps} taps[k] * src[x + k], accumulated in k order.
  // `src` must hold n + ntaps - 1 readable values.
  void (*convolve_row)(const float* src, const float* taps, int ntaps,
                       float* dst, size_t n);

  // dst[x] = sum_{k < ntaps} taps[k] * rows[k][x], accumulated in k order.
  void (*convolve_columns)(const float* const* rows, const float* taps,
                           int ntaps, float* dst, size_t n);

  // dst[x] = clamp(floor(src[x] + 0.5), 0, 255).
  void (*round_to_u8)(const float* src, uint8_t* dst, size_t n);

  // out[i] = round(w[i] * fg[i] + (1 - w[i]) * bg[i]).
  void (*blend_u8)(const uint8_t* fg, const uint8_t* bg, const float* w,
                   uint8_t* out, size_t n);

  // dst[x] = min / max of src[x .. x + window - 1].
  void (*window_min_u8)(const uint8_t* src, int window, uint8_t* dst,
                        size_t n);
  void (*window_max_u8)(const uint8_t* src, int window, uint8_t* dst,
                        size_t n);

  // dst[x] = min(dst[x], src[x]) / max(dst[x], src[x]).
  void (*min_into_u8)(uint8_t* dst, const uint8_t* src, size_t n);
  void (*max_into_u8)(uint8_t* dst, const uint8_t* src, size_t n);

  // acc[x] = (acc[x] + add[x]) - sub[x]. Running box sums.
  void (*add_sub_f64)(double* acc, const double* add, const double* sub,
                      size_t n);

  // One spatial offset of the joint bilateral sum. For each x:
  //   w = spatial * range_lut[|center_gray[x] - nbr_gray[x]|]
  //   acc_w += w; acc_c += w * nbr_c[x] for c in r, g, b.
  // Gray values are in [0, 255].
  void (*bilateral_accumulate)(const int32_t* center_gray,
                               const int32_t* nbr_gray, const float* nbr_r,
                               const float* nbr_g, const float* nbr_b,
                               float spatial, const float* range_lut,
                               float* acc_w, float* acc_r, float* acc_g,
                               float* acc_b, size_t n);
};

// Best level the running CPU (and this build) supports.
Level DetectedLevel();
bool LevelSupported(Level level);
// All levels usable on this machine, scalar first.
std::vector<Level> SupportedLevels();

const KernelTable& KernelsFor(Level level);
// The table filters dispatch through.
const KernelTable& Kernels();
Level ActiveLevel();
// Falls back to scalar if `level` is unsupported. Not meant to be flipped
// while filters are running on other threads.
void SetActiveLevel(Level level);

namespace internal {
const KernelTable& ScalarKernels();
#if defined(MASKFX_HAVE_AVX2)
const KernelTable& Avx2Kernels();
#endif
}  // namespace internal

}  // namespace maskfx::simd

#endif  // MASKFX_SIMD_KERNELS_H_
