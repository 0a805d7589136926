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

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.h"
#include "test_util.h"

namespace maskfx {
namespace {

using testutil::CodeOf;

std::vector<uint8_t> Bytes(const std::string& s) { return {s.begin(), s.end()}; }

TEST(DecodeImage, P6TwoByOne) {
  std::vector<uint8_t> file = Bytes("P6\n2 1\n255\n");
  file.insert(file.end(), {255, 0, 0, 0, 255, 0});
  RasterImage img = DecodeImage(file);
  ASSERT_EQ(img.width(), 2);
  ASSERT_EQ(img.height(), 1);
  EXPECT_EQ(img.At(0, 0), (Rgb{255, 0, 0}));
  EXPECT_EQ(img.At(1, 0), (Rgb{0, 255, 0}));
}

TEST(DecodeImage, HeaderCommentsAreSkipped) {
  std::vector<uint8_t> file = Bytes("P6 # made by hand\n1 # w\n1\n255\n");
  file.insert(file.end(), {9, 8, 7});
  EXPECT_EQ(DecodeImage(file).At(0, 0), (Rgb{9, 8, 7}));
}

TEST(DecodeImage, TruncatedPayload) {
  std::vector<uint8_t> file = Bytes("P6\n4 4\n255\n");
  file.resize(file.size() + 10, 0);
  EXPECT_EQ(CodeOf([&] { DecodeImage(file); }), ErrorCode::kTruncatedData);
}

TEST(DecodeImage, MalformedAndUnsupported) {
  EXPECT_EQ(CodeOf([] { DecodeImage(Bytes("P3\n1 1\n255\n0 0 0\n")); }),
            ErrorCode::kMalformedHeader);
  EXPECT_EQ(CodeOf([] { DecodeImage(Bytes("P6\nx 1\n255\n")); }),
            ErrorCode::kMalformedHeader);
  EXPECT_EQ(CodeOf([] { DecodeImage(Bytes("P6\n1 1\n65535\n\0\0\0\0\0\0")); }),
            ErrorCode::kUnsupportedFormat);
  EXPECT_EQ(CodeOf([] { DecodeImage(Bytes("GIF89a")); }), ErrorCode::kUnsupportedFormat);
}

TEST(EncodeImage, SmallestP6File) {
  std::vector<uint8_t> bytes = EncodeImage(RasterImage(1, 1), ImageFormat::kPpm);
  std::vector<uint8_t> expected = Bytes("P6\n1 1\n255\n");
  expected.insert(expected.end(), {0, 0, 0});
  EXPECT_EQ(bytes.size(), 14u);
  EXPECT_EQ(bytes, expected);
}

TEST(ImageFiles, RoundTripPpmAndPng) {
  testutil::ScratchDir dir;
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    RasterImage img = oracle::RandomImage(rng, 16, 16);
    std::filesystem::path path = dir / (i % 2 ? "x.ppm" : "x.png");
    WriteImage(img, path);
    ASSERT_EQ(ReadImage(path), img) << path;
  }
}

TEST(ImageFiles, MissingFile) {
  EXPECT_EQ(CodeOf([] { ReadImage("/nonexistent/dir/a.ppm"); }), ErrorCode::kFileNotFound);
}

TEST(ImageFiles, UnwritablePathLeavesNothingBehind) {
  testutil::ScratchDir dir;
  std::filesystem::path target = dir / "missing_subdir" / "out.ppm";
  EXPECT_EQ(CodeOf([&] { WriteImage(RasterImage(2, 2), target); }), ErrorCode::kIo);
  EXPECT_FALSE(std::filesystem::exists(target.parent_path()));
  // A directory in the way of the final rename.
  std::filesystem::create_directory(dir / "taken.ppm");
  EXPECT_EQ(CodeOf([&] { WriteImage(RasterImage(2, 2), dir / "taken.ppm"); }), ErrorCode::kIo);
  size_t entries = 0;
  for (auto& e : std::filesystem::directory_iterator(dir.path())) {
    (void)e;
    ++entries;
  }
  EXPECT_EQ(entries, 1u);
}

TEST(DecodeGray, PgmAndPng) {
  std::vector<uint8_t> pgm = Bytes("P5\n2 1\n255\n");
  pgm.insert(pgm.end(), {10, 200});
  GrayImage g = DecodeGray(pgm);
  EXPECT_EQ(g.At(0, 0), 10);
  EXPECT_EQ(g.At(1, 0), 200);

  RasterImage rgb(2, 1, {10, 10, 10, 200, 200, 200});
  EXPECT_EQ(DecodeGray(EncodeImage(rgb, ImageFormat::kPng)), g);
}

}  // namespace
}  // namespace maskfx
