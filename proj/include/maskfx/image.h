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

// Core raster types. Pixel buffers are row-major and tightly packed; all
// types are plain values and safe to share read-only between threads.

#ifndef MASKFX_IMAGE_H_
#define MASKFX_IMAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace maskfx {

using Rgb = std::array<uint8_t, 3>;

// 8-bit RGB image, interleaved.
class RasterImage {
 public:
  static constexpr int kChannels = 3;

  RasterImage() = default;
  // Zero-filled image. Throws kInvalidArgument unless width, height >= 1.
  RasterImage(int width, int height);
  RasterImage(int width, int height, std::vector<uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t pixel_count() const { return static_cast<size_t>(width_) * height_; }
  bool empty() const { return pixels_.empty(); }

  std::span<const uint8_t> data() const { return pixels_; }
  std::span<uint8_t> data() { return pixels_; }
  const uint8_t* Row(int y) const {
    return pixels_.data() + static_cast<size_t>(y) * width_ * kChannels;
  }
  uint8_t* Row(int y) {
    return pixels_.data() + static_cast<size_t>(y) * width_ * kChannels;
  }

  Rgb At(int x, int y) const {
    const uint8_t* p = Row(y) + static_cast<size_t>(x) * kChannels;
    return {p[0], p[1], p[2]};
  }
  void Set(int x, int y, Rgb value) {
    uint8_t* p = Row(y) + static_cast<size_t>(x) * kChannels;
    p[0] = value[0];
    p[1] = value[1];
    p[2] = value[2];
  }

  bool operator==(const RasterImage&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> pixels_;
};

// Single-channel 8-bit image.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height);
  GrayImage(int width, int height, std::vector<uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const uint8_t> data() const { return pixels_; }
  std::span<uint8_t> data() { return pixels_; }
  uint8_t At(int x, int y) const {
    return pixels_[static_cast<size_t>(y) * width_ + x];
  }

  // Replicates the channel into all three RGB channels.
  RasterImage ToRgb() const;

  bool operator==(const GrayImage&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> pixels_;
};

// Per-pixel membership flags, stored one byte per pixel holding 0 or 1.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, bool value = false);
  // Any nonzero byte in `bits` counts as set.
  BinaryMask(int width, int height, std::vector<uint8_t> bits);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t pixel_count() const { return bits_.size(); }

  bool At(int x, int y) const {
    return bits_[static_cast<size_t>(y) * width_ + x] != 0;
  }
  void Set(int x, int y, bool value) {
    bits_[static_cast<size_t>(y) * width_ + x] = value ? 1 : 0;
  }
  std::span<const uint8_t> bits() const { return bits_; }
  std::span<uint8_t> bits() { return bits_; }
  const uint8_t* Row(int y) const {
    return bits_.data() + static_cast<size_t>(y) * width_;
  }
  uint8_t* Row(int y) { return bits_.data() + static_cast<size_t>(y) * width_; }

  BinaryMask Complement() const;
  bool SameSize(const BinaryMask& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const BinaryMask&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> bits_;
};

// Exact population count.
size_t MaskArea(const BinaryMask& mask);

// Per-pixel coverage in [0, 1].
class AlphaMask {
 public:
  AlphaMask() = default;
  AlphaMask(int width, int height, float value = 0.0f);
  AlphaMask(int width, int height, std::vector<float> alpha);
  static AlphaMask FromMask(const BinaryMask& mask);

  int width() const { return width_; }
  int height() const { return height_; }
  float At(int x, int y) const {
    return alpha_[static_cast<size_t>(y) * width_ + x];
  }
  std::span<const float> values() const { return alpha_; }
  const float* Row(int y) const {
    return alpha_.data() + static_cast<size_t>(y) * width_;
  }

  bool AllEqual(float value) const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<float> alpha_;
};

}  // namespace maskfx

#endif  // MASKFX_IMAGE_H_
