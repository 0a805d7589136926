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

#include "maskfx/compositor.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "maskfx/filters.h"
#include "maskfx/image_io.h"
#include "oracles.h"
#include "test_util.h"

namespace maskfx {
namespace {

using oracle::ConstantImage;
using oracle::RandomImage;
using testutil::CodeOf;
using testutil::DataPath;

TEST(Feather, ZeroSigmaIsHardMask) {
  std::mt19937 rng(1);
  BinaryMask m = oracle::RandomMask(rng, 17, 11, 0.5);
  AlphaMask a = Feather(m, 0);
  for (int y = 0; y < 11; ++y)
    for (int x = 0; x < 17; ++x) ASSERT_EQ(a.At(x, y), m.At(x, y) ? 1.0f : 0.0f);
}

TEST(Feather, FullMaskStaysOpaque) {
  for (double sigma : {0.5, 2.0, 7.5}) {
    EXPECT_TRUE(Feather(BinaryMask(13, 9, true), sigma).AllEqual(1.0f));
    EXPECT_TRUE(Feather(BinaryMask(13, 9, false), sigma).AllEqual(0.0f));
  }
}

TEST(Feather, HalfPlaneFollowsErfProfile) {
  const double sigma = 2.0;
  const int w = 8, h = 40, edge = 20;  // rows < edge are inside
  BinaryMask m(w, h);
  for (int y = 0; y < edge; ++y)
    for (int x = 0; x < w; ++x) m.Set(x, y, true);
  AlphaMask a = Feather(m, sigma);
  for (int y = 0; y < h; ++y) {
    // Continuous step at y = edge - 0.5 blurred by a unit Gaussian.
    double expected = 0.5 * std::erfc((y - (edge - 0.5)) / (sigma * std::sqrt(2.0)));
    for (int x = 0; x < w; ++x) ASSERT_NEAR(a.At(x, y), expected, 0.02) << "row " << y;
  }
  EXPECT_NEAR(0.5 * (a.At(0, edge - 1) + a.At(0, edge)), 0.5, 0.02);
}

TEST(Fuse, Endpoints) {
  std::mt19937 rng(2);
  RasterImage fg = RandomImage(rng, 9, 6), bg = RandomImage(rng, 9, 6);
  EXPECT_EQ(Fuse(fg, bg, AlphaMask(9, 6, 1.0f)), fg);
  EXPECT_EQ(Fuse(fg, bg, AlphaMask(9, 6, 0.0f)), bg);
}

TEST(Fuse, HalfAlpha) {
  EXPECT_EQ(Fuse(ConstantImage(5, 5, 200, 200, 200), ConstantImage(5, 5, 100, 100, 100),
                 AlphaMask(5, 5, 0.5f)),
            ConstantImage(5, 5, 150, 150, 150));
}

TEST(Fuse, ConvexAndBounded) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<float> unit(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    RasterImage fg = RandomImage(rng, 37, 5), bg = RandomImage(rng, 37, 5);
    std::vector<float> alpha(37 * 5);
    for (float& v : alpha) v = unit(rng);
    RasterImage out = Fuse(fg, bg, AlphaMask(37, 5, alpha));
    for (size_t i = 0; i < out.data().size(); ++i) {
      uint8_t f = fg.data()[i], b = bg.data()[i];
      double a = alpha[i / 3];
      ASSERT_GE(out.data()[i], std::min(f, b));
      ASSERT_LE(out.data()[i], std::max(f, b));
      ASSERT_NEAR(out.data()[i], a * f + (1 - a) * b, 0.5 + 1e-4);
    }
  }
}

TEST(Fuse, DimensionMismatch) {
  EXPECT_EQ(CodeOf([] { Fuse(RasterImage(2, 2), RasterImage(2, 3), AlphaMask(2, 2)); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(CodeOf([] { Fuse(RasterImage(2, 2), RasterImage(2, 2), AlphaMask(3, 2)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(ExtractRegions, EndpointsAndAdditivity) {
  std::mt19937 rng(4);
  RasterImage img = RandomImage(rng, 10, 7);
  auto [fg1, bg1] = ExtractRegions(img, AlphaMask(10, 7, 1.0f));
  EXPECT_EQ(fg1, img);
  EXPECT_EQ(bg1, RasterImage(10, 7));
  auto [fg0, bg0] = ExtractRegions(img, AlphaMask(10, 7, 0.0f));
  EXPECT_EQ(fg0, RasterImage(10, 7));
  EXPECT_EQ(bg0, img);
  std::uniform_real_distribution<float> unit(0, 1);
  std::vector<float> alpha(70);
  for (float& v : alpha) v = unit(rng);
  auto [fg, bg] = ExtractRegions(img, AlphaMask(10, 7, alpha));
  for (size_t i = 0; i < img.data().size(); ++i) {
    ASSERT_LE(std::abs(fg.data()[i] + bg.data()[i] - img.data()[i]), 1);
  }
}

RenderConfig Plain(const char* fg, const char* bg) {
  RenderConfig c;
  c.fg_filter = ParseFilterSpec(fg);
  c.bg_filter = ParseFilterSpec(bg);
  c.morphology.enabled = false;
  return c;
}

TEST(Render, PreservePairIsIdentityForEveryManifest) {
  for (const char* name : {"person_bus", "street", "portrait"}) {
    RasterImage img = ReadImage(DataPath(std::string(name) + ".ppm"));
    SegmentationManifest m = LoadManifest(DataPath(std::string(name) + ".json"));
    for (bool morph : {false, true}) {
      RenderConfig c = Plain("preserve", "preserve");
      c.morphology.enabled = morph;
      EXPECT_EQ(Render(img, m, c).image, img) << name;
    }
  }
}

TEST(Render, LeftHalfPreservedRightHalfGray) {
  std::mt19937 rng(5);
  RasterImage img = RandomImage(rng, 64, 64);
  BinaryMask left(64, 64);
  for (int y = 0; y < 64; ++y)
    for (int x = 0; x < 32; ++x) left.Set(x, y, true);
  SegmentationManifest m{64, 64, {{1, "person", 0.9, left}}};
  RenderResult r = Render(img, m, Plain("preserve", "gray"));
  RasterImage gray = oracle::ToGray(img);
  for (int y = 0; y < 64; ++y)
    for (int x = 0; x < 64; ++x) ASSERT_EQ(r.image.At(x, y), x < 32 ? img.At(x, y) : gray.At(x, y));
  ASSERT_TRUE(r.selection);
  EXPECT_EQ(r.selection->class_name, "person");
  EXPECT_EQ(MaskArea(r.final_mask), 64u * 32u);
  EXPECT_TRUE(r.notice.empty());
}

TEST(Render, SameFilterOnBothSidesIsTheWholeFrameFiltered) {
  RasterImage img = ReadImage(DataPath("street.ppm"));
  SegmentationManifest m = LoadManifest(DataPath("street.json"));
  RasterImage want = GaussianBlur(img, 2.0);
  for (double feather : {0.0, 2.0}) {
    RenderConfig c = Plain("gaussian-blur:sigma=2", "gaussian-blur:sigma=2");
    c.feather_sigma = feather;
    EXPECT_EQ(Render(img, m, c).image, want);
  }
}

TEST(Render, UnusedSpecDoesNotMatter) {
  RasterImage img = ReadImage(DataPath("person_bus.ppm"));
  SegmentationManifest m = LoadManifest(DataPath("person_bus.json"));
  RenderConfig a = Plain("detail-enhancement", "gray");
  a.morphology.enabled = true;
  RenderConfig b = a;
  b.bg_filter = ParseFilterSpec("pencil-sketch");
  RenderResult ra = Render(img, m, a), rb = Render(img, m, b);
  RenderConfig c = a;
  c.fg_filter = ParseFilterSpec("median-blur");
  RenderResult rc = Render(img, m, c);
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      if (ra.final_mask.At(x, y)) {
        ASSERT_EQ(ra.image.At(x, y), rb.image.At(x, y));
      } else {
        ASSERT_EQ(ra.image.At(x, y), rc.image.At(x, y));
      }
    }
}

TEST(Render, NoObjectFallsBackToBackground) {
  RasterImage img = ReadImage(DataPath("person_bus.ppm"));
  SegmentationManifest m = LoadManifest(DataPath("person_bus.json"));
  RenderConfig c = Plain("preserve", "gray");
  c.score_threshold = 0.99;
  RenderResult r = Render(img, m, c);
  EXPECT_FALSE(r.selection);
  EXPECT_EQ(r.image, ToGray(img));
  EXPECT_NE(r.notice.find("no-object"), std::string::npos);
  EXPECT_EQ(MaskArea(r.final_mask), 0u);

  c.score_threshold = 0.5;
  c.class_override = 3;  // no cars in this scene
  r = Render(img, m, c);
  EXPECT_FALSE(r.selection);
  EXPECT_NE(r.notice.find("no-object"), std::string::npos);
}

TEST(Render, ClassOverride) {
  RasterImage img = ReadImage(DataPath("person_bus.ppm"));
  SegmentationManifest m = LoadManifest(DataPath("person_bus.json"));
  RenderConfig c = Plain("preserve", "gray");
  EXPECT_EQ(Render(img, m, c).selection->class_name, "person");
  c.class_override = 6;
  RenderResult r = Render(img, m, c);
  EXPECT_EQ(r.selection->class_name, "bus");
  c.class_override = 9999;
  EXPECT_EQ(CodeOf([&] { Render(img, m, c); }), ErrorCode::kUnknownClass);
}

TEST(Render, Errors) {
  RasterImage img(8, 8);
  SegmentationManifest m{8, 9, {}};
  EXPECT_EQ(CodeOf([&] { Render(img, m, Plain("preserve", "preserve")); }),
            ErrorCode::kDimensionMismatch);
  m.image_height = 8;
  try {
    Render(img, m, Plain("preserve", "vortex"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownFilter);
    EXPECT_NE(std::string(e.what()).find("background filter"), std::string::npos);
  }
  // A bad spec is reported even when its region is empty.
  EXPECT_EQ(CodeOf([&] { Render(img, m, Plain("gaussian-blur:sigma=0", "gray")); }),
            ErrorCode::kParameterOutOfRange);
  RenderConfig c = Plain("preserve", "preserve");
  c.feather_sigma = -1;
  EXPECT_EQ(CodeOf([&] { Render(img, m, c); }), ErrorCode::kInvalidArgument);
}

TEST(Render, FeatheredEdgesStayBetweenTheTwoFilters) {
  RasterImage img = ReadImage(DataPath("portrait.ppm"));
  SegmentationManifest m = LoadManifest(DataPath("portrait.json"));
  RenderConfig c = Plain("preserve", "gray");
  c.feather_sigma = 2.0;
  RenderResult r = Render(img, m, c);
  RasterImage gray = ToGray(img);
  for (size_t i = 0; i < img.data().size(); ++i) {
    ASSERT_GE(r.image.data()[i], std::min(img.data()[i], gray.data()[i]));
    ASSERT_LE(r.image.data()[i], std::max(img.data()[i], gray.data()[i]));
  }
}

}  // namespace
}  // namespace maskfx
