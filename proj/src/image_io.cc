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

#include "maskfx/image_io.h"

#include <png.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "maskfx/errors.h"

namespace maskfx {
namespace {

namespace fs = std::filesystem;

constexpr uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

bool IsPng(std::span<const uint8_t> bytes) {
  return bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0;
}

// Netpbm header reader for P5/P6: magic, width, height, maxval, then exactly
// one whitespace byte before the raster. '#' comments are allowed between
// header fields.
struct NetpbmHeader {
  int width = 0;
  int height = 0;
  size_t data_offset = 0;
};

NetpbmHeader ParseNetpbmHeader(std::span<const uint8_t> bytes, char kind) {
  auto malformed = [](const std::string& why) {
    return Error(ErrorCode::kMalformedHeader, "malformed PNM header: " + why);
  };
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != kind) {
    throw malformed(std::string("expected magic P") + kind);
  }
  size_t pos = 2;
  auto read_field = [&](const char* name) -> long {
    for (;;) {
      while (pos < bytes.size() && std::isspace(bytes[pos])) ++pos;
      if (pos < bytes.size() && bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        continue;
      }
      break;
    }
    if (pos >= bytes.size() || !std::isdigit(bytes[pos])) {
      throw malformed(std::string("missing ") + name);
    }
    long value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > (1L << 20)) throw malformed(std::string(name) + " too large");
      ++pos;
    }
    return value;
  };
  NetpbmHeader header;
  header.width = static_cast<int>(read_field("width"));
  header.height = static_cast<int>(read_field("height"));
  long maxval = read_field("maxval");
  if (header.width < 1 || header.height < 1) {
    throw malformed("zero dimension");
  }
  if (maxval != 255) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "only maxval 255 is supported, got " + std::to_string(maxval));
  }
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    throw malformed("missing whitespace after maxval");
  }
  header.data_offset = pos + 1;
  return header;
}

std::vector<uint8_t> PayloadOrThrow(std::span<const uint8_t> bytes,
                                    size_t offset, size_t expected) {
  size_t available = bytes.size() - std::min(offset, bytes.size());
  if (available < expected) {
    throw Error(ErrorCode::kTruncatedData,
                "pixel data truncated: expected " + std::to_string(expected) +
                    " bytes, found " + std::to_string(available));
  }
  return std::vector<uint8_t>(bytes.begin() + offset,
                              bytes.begin() + offset + expected);
}

// Decodes through libpng's simplified API into the requested layout.
std::vector<uint8_t> DecodePngRaw(std::span<const uint8_t> bytes,
                                  uint32_t format, int* width, int* height) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    std::string why = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kMalformedHeader, "invalid PNG: " + why);
  }
  image.format = format;
  std::vector<uint8_t> buffer(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
    std::string why = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kTruncatedData, "PNG decode failed: " + why);
  }
  *width = static_cast<int>(image.width);
  *height = static_cast<int>(image.height);
  return buffer;
}

std::vector<uint8_t> EncodePng(const RasterImage& image) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width());
  png.height = static_cast<png_uint_32>(image.height());
  png.format = PNG_FORMAT_RGB;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&png, nullptr, &size, 0, image.data().data(),
                                 0, nullptr)) {
    throw Error(ErrorCode::kIo, std::string("PNG encode failed: ") + png.message);
  }
  std::vector<uint8_t> out(size);
  if (!png_image_write_to_memory(&png, out.data(), &size, 0,
                                 image.data().data(), 0, nullptr)) {
    throw Error(ErrorCode::kIo, std::string("PNG encode failed: ") + png.message);
  }
  out.resize(size);
  return out;
}

std::vector<uint8_t> EncodePpm(const RasterImage& image) {
  std::string header = "P6\n" + std::to_string(image.width()) + " " +
                       std::to_string(image.height()) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.data().begin(), image.data().end());
  return out;
}

std::string Lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

RasterImage DecodeImage(std::span<const uint8_t> bytes) {
  if (IsPng(bytes)) {
    int width = 0, height = 0;
    std::vector<uint8_t> rgba =
        DecodePngRaw(bytes, PNG_FORMAT_RGBA, &width, &height);
    std::vector<uint8_t> rgb(static_cast<size_t>(width) * height * 3);
    for (size_t i = 0, n = rgb.size() / 3; i < n; ++i) {
      std::memcpy(&rgb[3 * i], &rgba[4 * i], 3);
    }
    return RasterImage(width, height, std::move(rgb));
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') {
    NetpbmHeader header = ParseNetpbmHeader(bytes, '6');
    size_t expected = static_cast<size_t>(header.width) * header.height * 3;
    return RasterImage(header.width, header.height,
                       PayloadOrThrow(bytes, header.data_offset, expected));
  }
  if (bytes.size() >= 1 && bytes[0] == 'P') {
    throw Error(ErrorCode::kMalformedHeader,
                "malformed PNM header: only binary P6 is supported");
  }
  throw Error(ErrorCode::kUnsupportedFormat,
              "unrecognized image format (expected PPM P6 or PNG)");
}

std::vector<uint8_t> EncodeImage(const RasterImage& image, ImageFormat format) {
  return format == ImageFormat::kPng ? EncodePng(image) : EncodePpm(image);
}

GrayImage DecodeGray(std::span<const uint8_t> bytes) {
  if (IsPng(bytes)) {
    int width = 0, height = 0;
    // Read as RGBA so color masks keep their raw first channel rather than a
    // luminance mix.
    std::vector<uint8_t> rgba =
        DecodePngRaw(bytes, PNG_FORMAT_RGBA, &width, &height);
    std::vector<uint8_t> gray(static_cast<size_t>(width) * height);
    for (size_t i = 0; i < gray.size(); ++i) gray[i] = rgba[4 * i];
    return GrayImage(width, height, std::move(gray));
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') {
    NetpbmHeader header = ParseNetpbmHeader(bytes, '5');
    size_t expected = static_cast<size_t>(header.width) * header.height;
    return GrayImage(header.width, header.height,
                     PayloadOrThrow(bytes, header.data_offset, expected));
  }
  throw Error(ErrorCode::kUnsupportedFormat,
              "unrecognized mask image format (expected PGM P5 or PNG)");
}

std::vector<uint8_t> ReadFileBytes(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kFileNotFound, "no such file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + path.string());
  return bytes;
}

void WriteFileAtomically(const fs::path& path, std::span<const uint8_t> bytes) {
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot open for writing: " + path.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error(ErrorCode::kIo, "write failed: " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error(ErrorCode::kIo,
                "cannot write " + path.string() + ": " + ec.message());
  }
}

RasterImage ReadImage(const fs::path& path) {
  std::vector<uint8_t> bytes = ReadFileBytes(path);
  try {
    return DecodeImage(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

GrayImage ReadGray(const fs::path& path) {
  std::vector<uint8_t> bytes = ReadFileBytes(path);
  try {
    return DecodeGray(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void WriteImage(const RasterImage& image, const fs::path& path) {
  ImageFormat format = Lowercase(path.extension().string()) == ".png"
                           ? ImageFormat::kPng
                           : ImageFormat::kPpm;
  WriteFileAtomically(path, EncodeImage(image, format));
}

}  // namespace maskfx
