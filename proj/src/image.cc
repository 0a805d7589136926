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

#include "maskfx/image.h"

#include <algorithm>
#include <string>
#include <utility>

#include "maskfx/errors.h"

namespace maskfx {
namespace {

void CheckDims(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "image dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

void CheckLength(size_t actual, size_t expected, const char* what) {
  if (actual != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " buffer has " + std::to_string(actual) +
                    " entries, expected " + std::to_string(expected));
  }
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFileNotFound: return "file-not-found";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kMalformedHeader: return "malformed-header";
    case ErrorCode::kTruncatedData: return "truncated-data";
    case ErrorCode::kUnsupportedFormat: return "unsupported-format";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kSchemaViolation: return "schema-violation";
    case ErrorCode::kUnknownMaskEncoding: return "unknown-mask-encoding";
    case ErrorCode::kScoreOutOfRange: return "score-out-of-range";
    case ErrorCode::kRleCountMismatch: return "rle-count-mismatch";
    case ErrorCode::kRleNegativeCount: return "rle-negative-count";
    case ErrorCode::kUnknownClass: return "unknown-class";
    case ErrorCode::kSegmenterLaunch: return "segmenter-launch";
    case ErrorCode::kSegmenterFailed: return "segmenter-failed";
    case ErrorCode::kUnknownFilter: return "unknown-filter";
    case ErrorCode::kParameterOutOfRange: return "parameter-out-of-range";
    case ErrorCode::kUnknownParameter: return "unknown-parameter";
    case ErrorCode::kDuplicateFilter: return "duplicate-filter";
    case ErrorCode::kConfig: return "config";
  }
  return "unknown";
}

RasterImage::RasterImage(int width, int height)
    : width_(width), height_(height) {
  CheckDims(width, height);
  pixels_.assign(pixel_count() * kChannels, 0);
}

RasterImage::RasterImage(int width, int height, std::vector<uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  CheckDims(width, height);
  CheckLength(pixels_.size(), pixel_count() * kChannels, "RGB");
}

GrayImage::GrayImage(int width, int height) : width_(width), height_(height) {
  CheckDims(width, height);
  pixels_.assign(static_cast<size_t>(width) * height, 0);
}

GrayImage::GrayImage(int width, int height, std::vector<uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  CheckDims(width, height);
  CheckLength(pixels_.size(), static_cast<size_t>(width) * height, "gray");
}

RasterImage GrayImage::ToRgb() const {
  std::vector<uint8_t> rgb(pixels_.size() * 3);
  for (size_t i = 0; i < pixels_.size(); ++i) {
    rgb[3 * i] = rgb[3 * i + 1] = rgb[3 * i + 2] = pixels_[i];
  }
  return RasterImage(width_, height_, std::move(rgb));
}

BinaryMask::BinaryMask(int width, int height, bool value)
    : width_(width), height_(height) {
  CheckDims(width, height);
  bits_.assign(static_cast<size_t>(width) * height, value ? 1 : 0);
}

BinaryMask::BinaryMask(int width, int height, std::vector<uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  CheckDims(width, height);
  CheckLength(bits_.size(), static_cast<size_t>(width) * height, "mask");
  for (uint8_t& b : bits_) b = b != 0 ? 1 : 0;
}

BinaryMask BinaryMask::Complement() const {
  BinaryMask out = *this;
  for (uint8_t& b : out.bits_) b ^= 1;
  return out;
}

size_t MaskArea(const BinaryMask& mask) {
  size_t count = 0;
  for (uint8_t b : mask.bits()) count += b;
  return count;
}

AlphaMask::AlphaMask(int width, int height, float value)
    : width_(width), height_(height) {
  CheckDims(width, height);
  alpha_.assign(static_cast<size_t>(width) * height, value);
}

AlphaMask::AlphaMask(int width, int height, std::vector<float> alpha)
    : width_(width), height_(height), alpha_(std::move(alpha)) {
  CheckDims(width, height);
  CheckLength(alpha_.size(), static_cast<size_t>(width) * height, "alpha");
  for (float& a : alpha_) a = std::clamp(a, 0.0f, 1.0f);
}

AlphaMask AlphaMask::FromMask(const BinaryMask& mask) {
  std::vector<float> alpha(mask.pixel_count());
  std::span<const uint8_t> bits = mask.bits();
  for (size_t i = 0; i < alpha.size(); ++i) alpha[i] = bits[i] ? 1.0f : 0.0f;
  return AlphaMask(mask.width(), mask.height(), std::move(alpha));
}

bool AlphaMask::AllEqual(float value) const {
  return std::all_of(alpha_.begin(), alpha_.end(),
                     [value](float a) { return a == value; });
}

}  // namespace maskfx
