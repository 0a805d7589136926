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

// Artistic image filters. Every filter is a pure function of its input,
// preserves dimensions, computes in real arithmetic and rounds half away
// from zero to 8 bits once at the end. Windowed filters read outside the
// frame by mirror reflection without repeating the edge pixel
// (..., 2, 1, | 0, 1, 2, ...).

#ifndef MASKFX_FILTERS_H_
#define MASKFX_FILTERS_H_

#include <span>
#include <vector>

#include "maskfx/image.h"

namespace maskfx {

// Mirror index into [0, n) without edge repetition; n == 1 maps to 0.
int ReflectIndex(int i, int n);

// Luminance round(0.299 R + 0.587 G + 0.114 B), evaluated exactly.
uint8_t Luma(uint8_t r, uint8_t g, uint8_t b);
GrayImage LumaPlane(const RasterImage& image);
RasterImage ToGray(const RasterImage& image);

// Normalized taps exp(-k^2 / 2 sigma^2) for |k| <= ceil(3 sigma).
int GaussianRadius(double sigma);
std::vector<float> GaussianKernel(double sigma);

// Separable Gaussian, horizontal pass then vertical. Throws
// kInvalidArgument unless sigma > 0.
RasterImage GaussianBlur(const RasterImage& image, double sigma);
GrayImage GaussianBlur(const GrayImage& image, double sigma);
// Same kernel on an unquantized float field (no rounding).
std::vector<float> GaussianBlurField(std::span<const float> field, int width,
                                     int height, double sigma);

// Exact per-channel median of the (2r+1)^2 window.
RasterImage MedianBlur(const RasterImage& image, int radius);

// Joint bilateral: all channels share weights whose range term compares
// the luminance of the two pixels. Window radius ceil(3 sigma_space).
RasterImage Bilateral(const RasterImage& image, double sigma_space,
                      double sigma_range);

// Self-guided filter per channel: a = var / (var + epsilon), b = (1 - a) mean
// over (2r+1)^2 windows, output = box(a) * I + box(b). epsilon is in squared
// 8-bit intensity units.
RasterImage EdgePreserve(const RasterImage& image, int radius, double epsilon);

// base + amount * (image - base) with base = EdgePreserve(image, ...).
RasterImage DetailEnhance(const RasterImage& image, double amount, int radius,
                          double epsilon);

// Color-dodge of the luminance over its blurred negative.
RasterImage PencilSketch(const RasterImage& image, double sigma);

RasterImage GrayBlur(const RasterImage& image, double sigma);

RasterImage Preserve(const RasterImage& image);

}  // namespace maskfx

#endif  // MASKFX_FILTERS_H_
