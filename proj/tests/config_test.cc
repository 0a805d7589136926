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

#include "maskfx/app/config.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace maskfx::app {
namespace {

using testutil::CodeOf;

TEST(Settings, ParsesSectionsQuotesAndComments) {
  Settings s = Settings::Parse(R"(
# top comment
[render]
fg = "detail-enhancement:amount=2"   # trailing comment
bg = gray
feather = 1.5

[morphology]
enabled = false
open_shape = "square"
open_radius = 3
)");
  EXPECT_EQ(s.GetString("render.fg"), "detail-enhancement:amount=2");
  EXPECT_EQ(s.GetString("render.bg"), "gray");
  EXPECT_EQ(s.GetNumber("render.feather"), 1.5);
  EXPECT_EQ(s.GetBool("morphology.enabled"), false);
  EXPECT_FALSE(s.Has("render.class"));
}

TEST(Settings, Errors) {
  EXPECT_EQ(CodeOf([] { Settings::Parse("[render]\nfgg = gray\n"); }), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf([] { Settings::Parse("[render\n"); }), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf([] { Settings::Parse("[render]\njust words\n"); }), ErrorCode::kConfig);
  Settings s = Settings::Parse("[render]\nfeather = wide\n[morphology]\nenabled = yes\n");
  EXPECT_EQ(CodeOf([&] { s.GetNumber("render.feather"); }), ErrorCode::kConfig);
  EXPECT_EQ(CodeOf([&] { s.GetBool("morphology.enabled"); }), ErrorCode::kConfig);
}

TEST(Settings, EveryCliFlagHasAKey) {
  for (const char* key :
       {"render.fg", "render.bg", "render.class", "render.score_threshold", "render.feather",
        "render.priority_file", "render.class_table", "morphology.enabled",
        "morphology.open_shape", "morphology.open_radius", "morphology.close_shape",
        "morphology.close_radius", "morphology.min_area_fraction", "segmenter.command",
        "serve.port", "serve.static_dir", "serve.session_timeout"}) {
    EXPECT_TRUE(IsKnownSettingKey(key)) << key;
  }
}

TEST(ApplySettings, FillsRenderConfig) {
  Settings s = Settings::Parse(R"(
[render]
fg = "gaussian-blur:sigma=2"
bg = "gray"
class = "bus"
score_threshold = 0.25
feather = 3
[morphology]
enabled = false
open_shape = square
open_radius = 4
close_radius = 1
min_area_fraction = 0.01
)");
  RenderConfig c;
  ApplySettings(s, ClassTable::Coco(), &c);
  EXPECT_EQ(c.fg_filter, (FilterSpec{"gaussian-blur", {{"sigma", 2}}}));
  EXPECT_EQ(c.bg_filter.keyword, "gray");
  EXPECT_EQ(c.class_override, 6);
  EXPECT_EQ(c.score_threshold, 0.25);
  EXPECT_EQ(c.feather_sigma, 3);
  EXPECT_FALSE(c.morphology.enabled);
  EXPECT_EQ(c.morphology.opening.shape, ElementShape::kSquare);
  EXPECT_EQ(c.morphology.opening.radius, 4);
  EXPECT_EQ(c.morphology.closing.radius, 1);
  EXPECT_EQ(c.morphology.min_area_fraction, 0.01);
}

TEST(ApplySettings, RejectsBadValues) {
  RenderConfig c;
  EXPECT_EQ(CodeOf([&] {
              ApplySettings(Settings::Parse("[render]\nclass = unicorn\n"), ClassTable::Coco(), &c);
            }),
            ErrorCode::kUnknownClass);
  EXPECT_EQ(CodeOf([&] {
              ApplySettings(Settings::Parse("[morphology]\nopen_radius = 1.5\n"),
                            ClassTable::Coco(), &c);
            }),
            ErrorCode::kConfig);
  EXPECT_EQ(CodeOf([&] {
              ApplySettings(Settings::Parse("[morphology]\nclose_shape = star\n"),
                            ClassTable::Coco(), &c);
            }),
            ErrorCode::kConfig);
}

}  // namespace
}  // namespace maskfx::app
