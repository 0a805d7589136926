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

#ifndef MASKFX_IMAGE_IO_H_
#define MASKFX_IMAGE_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "maskfx/image.h"

namespace maskfx {

enum class ImageFormat { kPpm, kPng };

// Decodes binary PPM (P6, maxval 255) or PNG, chosen by content sniffing.
// PNG alpha is dropped; gray PNGs are replicated into RGB; 16-bit PNGs are
// reduced to 8 bits.
RasterImage DecodeImage(std::span<const uint8_t> bytes);
std::vector<uint8_t> EncodeImage(const RasterImage& image, ImageFormat format);

RasterImage ReadImage(const std::filesystem::path& path);
// Format follows the extension: ".png" writes PNG, anything else P6. The file
// is written to a sibling temporary and renamed, so a failed write leaves
// nothing behind.
void WriteImage(const RasterImage& image, const std::filesystem::path& path);

// 8-bit single-channel decode (PGM P5 or PNG of any color type, reduced to
// its first channel). Used for mask files.
GrayImage DecodeGray(std::span<const uint8_t> bytes);
GrayImage ReadGray(const std::filesystem::path& path);

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path);
void WriteFileAtomically(const std::filesystem::path& path,
                         std::span<const uint8_t> bytes);

}  // namespace maskfx

#endif  // MASKFX_IMAGE_IO_H_
