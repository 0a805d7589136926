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

#include "maskfx/app/cli.h"

#include <gtest/gtest.h>
#include <stdlib.h>
#include <sys/wait.h>

#include <sstream>

#include "maskfx/image_io.h"
#include "test_util.h"

namespace maskfx::app {
namespace {

using testutil::DataPath;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun RunTool(std::vector<std::string> args) {
  args.insert(args.begin(), "maskfx");
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const char* name) { return DataPath(name).string(); }

class CliTest : public ::testing::Test {
 protected:
  testutil::ScratchDir dir_;
  std::string Out(const char* name) { return (dir_ / name).string(); }
};

TEST_F(CliTest, IdentityRenderIsByteIdentical) {
  CliRun r = RunTool({"render", "--image", Data("person_bus.ppm"), "--manifest",
                  Data("person_bus.json"), "--fg", "preserve", "--bg", "preserve", "--feather",
                  "0", "--no-morphology", "--out", Out("b.ppm")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(testutil::ReadText(Out("b.ppm")), testutil::ReadText(Data("person_bus.ppm")));
  EXPECT_NE(r.out.find("selected: person (class_id 1, 1 instance)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("mask_area: "), std::string::npos);
}

TEST_F(CliTest, ReportsSmoothedMaskArea) {
  CliRun r = RunTool({"render", "--image", Data("street.ppm"), "--manifest", Data("street.json"),
                  "--fg", "preserve", "--bg", "gray", "--out", Out("s.png")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("selected: car (class_id 3, 3 instances)"), std::string::npos) << r.out;
  EXPECT_EQ(ReadImage(Out("s.png")).width(), 128);
}

TEST_F(CliTest, UsageErrors) {
  CliRun r = RunTool({"render", "--manifest", Data("person_bus.json"), "--fg", "gray", "--bg", "gray",
                  "--out", Out("x.ppm")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--image"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);

  r = RunTool({"render", "--image", Data("person_bus.ppm"), "--manifest", Data("person_bus.json"),
           "--bg", "gray", "--out", Out("x.ppm")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--fg"), std::string::npos);

  r = RunTool({"render", "--image", Data("person_bus.ppm"), "--fg", "gray", "--bg", "gray", "--out",
           Out("x.ppm")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(RunTool({}).code, kExitUsage);
  EXPECT_EQ(RunTool({"explode"}).code, kExitUsage);
  EXPECT_EQ(RunTool({"render", "--feather", "-1"}).code, kExitUsage);
  EXPECT_FALSE(std::filesystem::exists(Out("x.ppm")));
}

TEST_F(CliTest, PipelineErrors) {
  CliRun r = RunTool({"render", "--image", Data("person_bus.ppm"), "--manifest", Data("street.json"),
                  "--fg", "gray", "--bg", "gray", "--out", Out("x.ppm")});
  EXPECT_EQ(r.code, kExitPipelineError);
  EXPECT_NE(r.err.find("dimension-mismatch"), std::string::npos) << r.err;

  r = RunTool({"render", "--image", Data("person_bus.ppm"), "--manifest", Data("person_bus.json"),
           "--fg", "vortex", "--bg", "gray", "--out", Out("x.ppm")});
  EXPECT_EQ(r.code, kExitPipelineError);
  EXPECT_NE(r.err.find("vortex"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(Out("x.ppm")));

  r = RunTool({"render", "--image", Data("person_bus.ppm"), "--manifest", Data("person_bus.json"),
           "--fg", "gray", "--bg", "gray", "--class", "unicorn", "--out", Out("x.ppm")});
  EXPECT_EQ(r.code, kExitPipelineError);
}

TEST_F(CliTest, ClassesCommand) {
  CliRun r = RunTool({"classes", "--manifest", Data("person_bus.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  size_t person = r.out.find("person"), bus = r.out.find("bus");
  ASSERT_NE(person, std::string::npos);
  ASSERT_NE(bus, std::string::npos);
  EXPECT_LT(person, bus);
  EXPECT_EQ(r.out.find("dog"), std::string::npos);  // below the score threshold

  r = RunTool({"classes", "--manifest", Data("empty.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);

  testutil::WriteText(dir_ / "corrupt.json", R"({"image_width": 3, "instances": 7})");
  r = RunTool({"classes", "--manifest", Out("corrupt.json")});
  EXPECT_EQ(r.code, kExitPipelineError);
  EXPECT_NE(r.err.find("schema-violation"), std::string::npos) << r.err;
}

TEST_F(CliTest, FiltersCommandListsRegistry) {
  CliRun r = RunTool({"filters"});
  ASSERT_EQ(r.code, kExitOk);
  for (const char* kw : {"gray", "bilateral", "edge-preserve", "median-blur", "gaussian-blur",
                         "detail-enhancement", "pencil-sketch", "gray-blur", "preserve"}) {
    EXPECT_NE(r.out.find(kw), std::string::npos) << kw;
  }
  EXPECT_NE(r.out.find("sigma_range"), std::string::npos);
}

TEST_F(CliTest, ConfigFileAndOverrides) {
  testutil::WriteText(dir_ / "maskfx.toml",
                      "[render]\nfg = \"gray\"\nbg = \"gray\"\n[morphology]\nenabled = false\n");
  CliRun r = RunTool({"--config", Out("maskfx.toml"), "render", "--image", Data("person_bus.ppm"),
                  "--manifest", Data("person_bus.json"), "--out", Out("c.ppm")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  RasterImage all_gray = ReadImage(Out("c.ppm"));

  r = RunTool({"--config", Out("maskfx.toml"), "render", "--image", Data("person_bus.ppm"),
           "--manifest", Data("person_bus.json"), "--fg", "preserve", "--bg", "preserve", "--out",
           Out("d.ppm")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ReadImage(Out("d.ppm")), ReadImage(Data("person_bus.ppm")));
  EXPECT_NE(all_gray, ReadImage(Out("d.ppm")));

  testutil::WriteText(dir_ / "bad.toml", "[render]\nfog = 1\n");
  r = RunTool({"--config", Out("bad.toml"), "filters"});
  EXPECT_EQ(r.code, kExitPipelineError);
}

TEST_F(CliTest, SegmentRunsConfiguredSegmenter) {
  std::string stub = "sh '" + Data("stub_segmenter.sh") + "' {input} {output} full";
  CliRun r = RunTool({"render", "--image", Data("portrait.ppm"), "--segment", "--segmenter", stub,
                      "--no-morphology", "--fg", "preserve", "--bg", "gray", "--out", Out("p.ppm")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ReadImage(Out("p.ppm")), ReadImage(Data("portrait.ppm")));

  setenv("MASKFX_SEGMENTER", stub.c_str(), 1);
  r = RunTool({"render", "--image", Data("portrait.ppm"), "--segment", "--fg", "preserve", "--bg",
           "gray", "--out", Out("q.ppm")});
  unsetenv("MASKFX_SEGMENTER");
  ASSERT_EQ(r.code, kExitOk) << r.err;

  r = RunTool({"render", "--image", Data("portrait.ppm"), "--segment", "--fg", "preserve", "--bg",
           "gray", "--out", Out("r.ppm")});
  EXPECT_EQ(r.code, kExitUsage);

  std::string failing = "sh '" + Data("stub_segmenter.sh") + "' {input} {output} fail";
  r = RunTool({"render", "--image", Data("portrait.ppm"), "--segment", "--segmenter", failing, "--fg",
           "preserve", "--bg", "gray", "--out", Out("r.ppm")});
  EXPECT_EQ(r.code, kExitPipelineError);
  EXPECT_NE(r.err.find("model weights not found"), std::string::npos);
}

TEST_F(CliTest, InstalledBinaryExitCodes) {
  auto status = [](const std::string& cmd) {
    int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  std::string cli = std::string("'") + MASKFX_CLI_PATH + "'";
  EXPECT_EQ(status(cli + " filters"), 0);
  EXPECT_EQ(status(cli + " render --out x.ppm"), 2);
  EXPECT_EQ(status(cli + " classes --manifest /no/such.json"), 1);
}

}  // namespace
}  // namespace maskfx::app
