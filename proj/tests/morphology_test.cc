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

#include "maskfx/morphology.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "test_util.h"

namespace maskfx {
namespace {

using testutil::CodeOf;

const StructuringElement kSquare1{ElementShape::kSquare, 1};
const StructuringElement kDisk1{ElementShape::kDisk, 1};
const StructuringElement kDisk2{ElementShape::kDisk, 2};

BinaryMask FromRows(const std::vector<std::string>& rows) {
  BinaryMask m(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x) m.Set(x, y, rows[y][x] == '#');
  return m;
}

std::vector<StructuringElement> AllElements(int max_radius) {
  std::vector<StructuringElement> out;
  for (int r = 1; r <= max_radius; ++r) {
    out.push_back({ElementShape::kSquare, r});
    out.push_back({ElementShape::kDisk, r});
  }
  return out;
}

TEST(StructuringElement, DiskRowsMatchEuclideanDistance) {
  for (int r = 1; r <= 12; ++r) {
    StructuringElement se{ElementShape::kDisk, r};
    for (int dy = -r - 1; dy <= r + 1; ++dy)
      for (int dx = -r - 1; dx <= r + 1; ++dx)
        ASSERT_EQ(se.Contains(dx, dy), dx * dx + dy * dy <= r * r) << r << " " << dx << " " << dy;
  }
}

TEST(Erode, Examples) {
  EXPECT_EQ(Erode(BinaryMask(6, 4), kDisk2), BinaryMask(6, 4));
  EXPECT_EQ(Erode(BinaryMask(5, 5, true), kSquare1),
            FromRows({".....", ".###.", ".###.", ".###.", "....."}));
}

TEST(Dilate, Examples) {
  EXPECT_EQ(Dilate(BinaryMask(6, 4), kDisk2), BinaryMask(6, 4));
  BinaryMask dot(5, 5);
  dot.Set(2, 2, true);
  EXPECT_EQ(Dilate(dot, kSquare1), FromRows({".....", ".###.", ".###.", ".###.", "....."}));
}

TEST(Morphology, MatchesNeighborhoodOracles) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 32);
  for (int trial = 0; trial < 200; ++trial) {
    int w = trial == 0 ? 32 : dim(rng), h = trial == 0 ? 32 : dim(rng);
    BinaryMask m = trial % 2 ? oracle::RandomBlobMask(rng, w, h)
                             : oracle::RandomMask(rng, w, h, 0.6);
    for (const StructuringElement& se : AllElements(4)) {
      ASSERT_EQ(Erode(m, se), oracle::Erode(m, se));
      ASSERT_EQ(Dilate(m, se), oracle::Dilate(m, se));
      ASSERT_EQ(Open(m, se), oracle::Open(m, se));
      ASSERT_EQ(Close(m, se), oracle::Close(m, se));
    }
  }
}

TEST(Morphology, RandomThirtyTwoDiskTwo) {
  std::mt19937 rng(32);
  BinaryMask m = oracle::RandomMask(rng, 32, 32, 0.7);
  EXPECT_EQ(Erode(m, kDisk2), oracle::Erode(m, kDisk2));
}

TEST(Morphology, DualityAwayFromTheFrame) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryMask m = oracle::RandomBlobMask(rng, 24, 20);
    for (int x = 0; x < 24; ++x) m.Set(x, 0, false), m.Set(x, 19, false);
    for (int y = 0; y < 20; ++y) m.Set(0, y, false), m.Set(23, y, false);
    for (const StructuringElement& se : AllElements(3)) {
      BinaryMask lhs = Erode(m.Complement(), se).Complement();
      BinaryMask rhs = Dilate(m, se);
      int r = se.radius;
      for (int y = r; y < 20 - r; ++y)
        for (int x = r; x < 24 - r; ++x) ASSERT_EQ(lhs.At(x, y), rhs.At(x, y));
    }
  }
}

TEST(Close, FillsSingleInteriorHole) {
  BinaryMask m(5, 5, true);
  m.Set(2, 2, false);
  BinaryMask closed = Close(m, kSquare1);
  EXPECT_TRUE(closed.At(2, 2));
  EXPECT_EQ(closed, oracle::Erode(oracle::Dilate(m, kSquare1), kSquare1));
  // Outside-frame pixels read as 0, so the frame ring erodes away.
  EXPECT_EQ(closed, FromRows({".....", ".###.", ".###.", ".###.", "....."}));
}

TEST(Open, FullFrameWithDiskLosesOnlyCorners) {
  EXPECT_EQ(Open(BinaryMask(5, 5, true), kDisk1),
            FromRows({".###.", "#####", "#####", "#####", ".###."}));
}

TEST(Morphology, Laws) {
  std::mt19937 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    BinaryMask m = oracle::RandomBlobMask(rng, 24, 24);
    BinaryMask bigger = m;
    for (uint8_t& b : bigger.bits()) b |= (rng() % 10 == 0);
    StructuringElement se = AllElements(3)[trial % 6];
    ASSERT_TRUE(oracle::Subset(Erode(m, se), m));
    ASSERT_TRUE(oracle::Subset(m, Dilate(m, se)));
    BinaryMask opened = Open(m, se), closed = Close(m, se);
    ASSERT_TRUE(oracle::Subset(opened, m));
    ASSERT_EQ(Open(opened, se), opened);
    ASSERT_EQ(Close(closed, se), closed);
    int r = se.radius;
    for (int y = r; y < 24 - r; ++y)
      for (int x = r; x < 24 - r; ++x)
        if (m.At(x, y)) {
          ASSERT_TRUE(closed.At(x, y));
        }
    ASSERT_TRUE(oracle::Subset(Erode(m, se), Erode(bigger, se)));
    ASSERT_TRUE(oracle::Subset(Dilate(m, se), Dilate(bigger, se)));
    ASSERT_TRUE(oracle::Subset(opened, Open(bigger, se)));
    ASSERT_TRUE(oracle::Subset(closed, Close(bigger, se)));
  }
}

TEST(RemoveSmallComponents, Examples) {
  std::mt19937 rng(4);
  BinaryMask m = oracle::RandomMask(rng, 12, 9, 0.4);
  EXPECT_EQ(RemoveSmallComponents(m, 0), m);
  EXPECT_EQ(RemoveSmallComponents(BinaryMask(6, 6, true), 36), BinaryMask(6, 6, true));

  BinaryMask two(20, 10);
  for (int i = 0; i < 3; ++i) two.Set(1 + i, 1 + i, true);  // diagonal: one 3-pixel component
  for (int y = 0; y < 5; ++y)
    for (int x = 10; x < 20; ++x) two.Set(x, y + 5, true);  // 50 pixels
  BinaryMask kept = RemoveSmallComponents(two, 10);
  EXPECT_EQ(MaskArea(kept), 50u);
  EXPECT_FALSE(kept.At(2, 2));
}

TEST(RemoveSmallComponents, MatchesFloodFillOracle) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> dim(1, 32);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryMask m = oracle::RandomMask(rng, dim(rng), dim(rng), 0.35);
    for (size_t min_area : {0, 1, 2, 3, 5, 9, 40}) {
      BinaryMask got = RemoveSmallComponents(m, min_area);
      ASSERT_EQ(got, oracle::RemoveSmallComponents(m, min_area));
      ASSERT_TRUE(oracle::Subset(got, m));
    }
  }
}

TEST(SmoothMask, DisabledIsIdentity) {
  std::mt19937 rng(1);
  BinaryMask m = oracle::RandomMask(rng, 30, 20, 0.5);
  MorphologyConfig off;
  off.enabled = false;
  EXPECT_EQ(SmoothMask(m, off), m);
  EXPECT_EQ(SmoothMask(BinaryMask(30, 20), MorphologyConfig{}), BinaryMask(30, 20));
}

TEST(SmoothMask, RemovesSpeckAndFillsHoles) {
  BinaryMask m(64, 48);
  for (int y = 10; y < 40; ++y)
    for (int x = 10; x < 50; ++x) m.Set(x, y, true);
  m.Set(25, 25, false);  // pinholes inside the blob
  m.Set(40, 30, false);
  m.Set(58, 5, true);  // 2-pixel speck
  m.Set(59, 5, true);
  MorphologyConfig config;
  BinaryMask got = SmoothMask(m, config);
  BinaryMask expected = oracle::Close(
      oracle::Open(oracle::RemoveSmallComponents(m, config.MinComponentArea(m.pixel_count())),
                   config.opening),
      config.closing);
  EXPECT_EQ(got, expected);
  EXPECT_FALSE(got.At(58, 5));
  EXPECT_TRUE(got.At(25, 25));
  EXPECT_TRUE(got.At(40, 30));
}

TEST(MorphologyConfig, Validation) {
  MorphologyConfig c;
  EXPECT_EQ(c.MinComponentArea(1024 * 768), 1966u);
  c.opening.radius = 0;
  EXPECT_EQ(CodeOf([&] { c.Validate(); }), ErrorCode::kInvalidArgument);
  c = MorphologyConfig{};
  c.min_area_fraction = 1.5;
  EXPECT_EQ(CodeOf([&] { c.Validate(); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace maskfx
