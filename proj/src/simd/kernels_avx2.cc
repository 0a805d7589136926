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

// AVX2 kernels. Built with -mavx2 but never -mfma: every multiply-add below
// must round twice, exactly like the scalar reference.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "maskfx/simd/kernels.h"

namespace maskfx::simd {
namespace {

// Packs 8 int32 lanes known to be in [0, 255] into 8 bytes at dst.
inline void Store8(__m256i v, uint8_t* dst) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i p16 = _mm_packus_epi32(lo, hi);
  __m128i p8 = _mm_packus_epi16(p16, p16);
  _mm_storel_epi64(reinterpret_cast<__m128i*>(dst), p8);
}

inline __m256 Load8U8(const uint8_t* src) {
  __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(src));
  return _mm256_cvtepi32_ps(_mm256_cvtepu8_epi32(bytes));
}

inline __m256i RoundClamp(__m256 v) {
  const __m256 half = _mm256_set1_ps(0.5f);
  const __m256 zero = _mm256_setzero_ps();
  const __m256 top = _mm256_set1_ps(255.0f);
  v = _mm256_floor_ps(_mm256_add_ps(v, half));
  v = _mm256_min_ps(_mm256_max_ps(v, zero), top);
  return _mm256_cvttps_epi32(v);
}

inline uint8_t RoundClampScalar(float v) {
  v = std::floor(v + 0.5f);
  v = std::min(std::max(v, 0.0f), 255.0f);
  return static_cast<uint8_t>(v);
}

void ConvolveRow(const float* src, const float* taps, int ntaps, float* dst,
                 size_t n) {
  size_t x = 0;
  for (; x + 8 <= n; x += 8) {
    __m256 acc = _mm256_setzero_ps();
    for (int k = 0; k < ntaps; ++k) {
      __m256 t = _mm256_set1_ps(taps[k]);
      acc = _mm256_add_ps(acc, _mm256_mul_ps(t, _mm256_loadu_ps(src + x + k)));
    }
    _mm256_storeu_ps(dst + x, acc);
  }
  for (; x < n; ++x) {
    float acc = 0.0f;
    for (int k = 0; k < ntaps; ++k) acc += taps[k] * src[x + k];
    dst[x] = acc;
  }
}

void ConvolveColumns(const float* const* rows, const float* taps, int ntaps,
                     float* dst, size_t n) {
  size_t x = 0;
  for (; x + 8 <= n; x += 8) {
    __m256 acc = _mm256_setzero_ps();
    for (int k = 0; k < ntaps; ++k) {
      __m256 t = _mm256_set1_ps(taps[k]);
      acc = _mm256_add_ps(acc, _mm256_mul_ps(t, _mm256_loadu_ps(rows[k] + x)));
    }
    _mm256_storeu_ps(dst + x, acc);
  }
  for (; x < n; ++x) {
    float acc = 0.0f;
    for (int k = 0; k < ntaps; ++k) acc += taps[k] * rows[k][x];
    dst[x] = acc;
  }
}

void RoundToU8(const float* src, uint8_t* dst, size_t n) {
  size_t i = 0;
  for (; i + 8 <= n; i += 8) Store8(RoundClamp(_mm256_loadu_ps(src + i)), dst + i);
  for (; i < n; ++i) dst[i] = RoundClampScalar(src[i]);
}

void BlendU8(const uint8_t* fg, const uint8_t* bg, const float* w,
             uint8_t* out, size_t n) {
  const __m256 one = _mm256_set1_ps(1.0f);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 a = _mm256_loadu_ps(w + i);
    __m256 b = _mm256_sub_ps(one, a);
    __m256 v = _mm256_add_ps(_mm256_mul_ps(a, Load8U8(fg + i)),
                             _mm256_mul_ps(b, Load8U8(bg + i)));
    Store8(RoundClamp(v), out + i);
  }
  for (; i < n; ++i) {
    float a = w[i];
    float b = 1.0f - a;
    out[i] = RoundClampScalar(a * static_cast<float>(fg[i]) +
                              b * static_cast<float>(bg[i]));
  }
}

void WindowMinU8(const uint8_t* src, int window, uint8_t* dst, size_t n) {
  size_t x = 0;
  for (; x + 32 <= n; x += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + x));
    for (int k = 1; k < window; ++k) {
      v = _mm256_min_epu8(
          v, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + x + k)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + x), v);
  }
  for (; x < n; ++x) {
    uint8_t v = src[x];
    for (int k = 1; k < window; ++k) v = std::min(v, src[x + k]);
    dst[x] = v;
  }
}

void WindowMaxU8(const uint8_t* src, int window, uint8_t* dst, size_t n) {
  size_t x = 0;
  for (; x + 32 <= n; x += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + x));
    for (int k = 1; k < window; ++k) {
      v = _mm256_max_epu8(
          v, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + x + k)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + x), v);
  }
  for (; x < n; ++x) {
    uint8_t v = src[x];
    for (int k = 1; k < window; ++k) v = std::max(v, src[x + k]);
    dst[x] = v;
  }
}

void MinIntoU8(uint8_t* dst, const uint8_t* src, size_t n) {
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_min_epu8(_mm256_loadu_si256(d),
                                           _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] = std::min(dst[i], src[i]);
}

void MaxIntoU8(uint8_t* dst, const uint8_t* src, size_t n) {
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_max_epu8(_mm256_loadu_si256(d),
                                           _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] = std::max(dst[i], src[i]);
}

void AddSubF64(double* acc, const double* add, const double* sub, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(add + i));
    _mm256_storeu_pd(acc + i, _mm256_sub_pd(v, _mm256_loadu_pd(sub + i)));
  }
  for (; i < n; ++i) acc[i] = (acc[i] + add[i]) - sub[i];
}

void BilateralAccumulate(const int32_t* center_gray, const int32_t* nbr_gray,
                         const float* nbr_r, const float* nbr_g,
                         const float* nbr_b, float spatial,
                         const float* range_lut, float* acc_w, float* acc_r,
                         float* acc_g, float* acc_b, size_t n) {
  const __m256 s = _mm256_set1_ps(spatial);
  size_t x = 0;
  for (; x + 8 <= n; x += 8) {
    __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(center_gray + x));
    __m256i g = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(nbr_gray + x));
    __m256i d = _mm256_abs_epi32(_mm256_sub_epi32(c, g));
    __m256 w = _mm256_mul_ps(s, _mm256_i32gather_ps(range_lut, d, 4));
    _mm256_storeu_ps(acc_w + x, _mm256_add_ps(_mm256_loadu_ps(acc_w + x), w));
    _mm256_storeu_ps(acc_r + x, _mm256_add_ps(_mm256_loadu_ps(acc_r + x),
                                              _mm256_mul_ps(w, _mm256_loadu_ps(nbr_r + x))));
    _mm256_storeu_ps(acc_g + x, _mm256_add_ps(_mm256_loadu_ps(acc_g + x),
                                              _mm256_mul_ps(w, _mm256_loadu_ps(nbr_g + x))));
    _mm256_storeu_ps(acc_b + x, _mm256_add_ps(_mm256_loadu_ps(acc_b + x),
                                              _mm256_mul_ps(w, _mm256_loadu_ps(nbr_b + x))));
  }
  for (; x < n; ++x) {
    float w = spatial * range_lut[std::abs(center_gray[x] - nbr_gray[x])];
    acc_w[x] += w;
    acc_r[x] += w * nbr_r[x];
    acc_g[x] += w * nbr_g[x];
    acc_b[x] += w * nbr_b[x];
  }
}

}  // namespace

namespace internal {

const KernelTable& Avx2Kernels() {
  static const KernelTable table = {
      Level::kAvx2, ConvolveRow, ConvolveColumns, RoundToU8,
      BlendU8,      WindowMinU8, WindowMaxU8,     MinIntoU8,
      MaxIntoU8,    AddSubF64,   BilateralAccumulate,
  };
  return table;
}

}  // namespace internal
}  // namespace maskfx::simd
