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

#include <csignal>
#include <cstdio>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "maskfx/app/config.h"
#include "maskfx/app/service.h"
#include "maskfx/compositor.h"
#include "maskfx/errors.h"
#include "maskfx/filter_registry.h"
#include "maskfx/image_io.h"
#include "maskfx/segmentation.h"
#include "maskfx/selection.h"
#include "maskfx/simd/kernels.h"

namespace maskfx::app {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RenderFlags {
  std::string image;
  std::string manifest;
  bool segment = false;
  std::string segmenter;
  std::string fg;
  std::string bg;
  std::string class_name;
  std::optional<double> score_threshold;
  std::optional<double> feather;
  bool no_morphology = false;
  std::optional<int> open_radius;
  std::optional<int> close_radius;
  std::string open_shape;
  std::string close_shape;
  std::optional<double> min_area_fraction;
  std::string priority_file;
  std::string class_table;
  std::string out;
};

struct ClassesFlags {
  std::string manifest;
  std::optional<double> score_threshold;
  std::string priority_file;
  std::string class_table;
};

struct ServeFlags {
  std::optional<int> port;
  std::string host = "127.0.0.1";
  std::string static_dir;
  std::string segmenter;
  std::optional<int> session_timeout;
};

ClassTable LoadClassTable(const std::string& flag, const Settings& settings) {
  std::string path = flag;
  if (path.empty()) path = settings.GetString("render.class_table").value_or("");
  return path.empty() ? ClassTable::Coco() : ClassTable::FromFile(path);
}

std::string ResolveSegmenter(const std::string& flag, const Settings& settings) {
  if (!flag.empty()) return flag;
  if (auto v = settings.GetString("segmenter.command")) return *v;
  return DefaultSegmenterTemplate();
}

// Settings file first, then explicit flags on top.
RenderConfig BuildRenderConfig(const RenderFlags& f, const Settings& settings,
                               const ClassTable& classes) {
  RenderConfig config;
  ApplySettings(settings, classes, &config);
  bool have_fg = settings.Has("render.fg");
  bool have_bg = settings.Has("render.bg");
  if (!f.fg.empty()) {
    config.fg_filter = ParseFilterSpec(f.fg);
    have_fg = true;
  }
  if (!f.bg.empty()) {
    config.bg_filter = ParseFilterSpec(f.bg);
    have_bg = true;
  }
  if (!have_fg || !have_bg) {
    throw UsageError("render needs --fg and --bg (or render.fg/render.bg in --config)");
  }
  if (!f.class_name.empty()) {
    std::optional<int> id = classes.IdOf(f.class_name);
    if (!id) {
      throw Error(ErrorCode::kUnknownClass, "unknown class '" + f.class_name + "'");
    }
    config.class_override = *id;
  }
  if (f.score_threshold) config.score_threshold = *f.score_threshold;
  if (f.feather) config.feather_sigma = *f.feather;
  if (f.no_morphology) config.morphology.enabled = false;
  auto shape = [](const std::string& name, StructuringElement* se) {
    if (name.empty()) return;
    std::optional<ElementShape> parsed = ParseElementShape(name);
    if (!parsed) throw UsageError("element shape must be square or disk, got " + name);
    se->shape = *parsed;
  };
  shape(f.open_shape, &config.morphology.opening);
  shape(f.close_shape, &config.morphology.closing);
  if (f.open_radius) config.morphology.opening.radius = *f.open_radius;
  if (f.close_radius) config.morphology.closing.radius = *f.close_radius;
  if (f.min_area_fraction) config.morphology.min_area_fraction = *f.min_area_fraction;
  if (!f.priority_file.empty()) {
    config.priority = PriorityTable::FromFile(f.priority_file, classes);
  }
  return config;
}

int DoRender(const RenderFlags& f, const Settings& settings, std::ostream& out) {
  if (f.manifest.empty() == !f.segment) {
    throw UsageError("render needs exactly one of --manifest or --segment");
  }
  std::string segmenter;
  if (f.segment) {
    segmenter = ResolveSegmenter(f.segmenter, settings);
    if (segmenter.empty()) {
      throw UsageError(
          "--segment needs a segmenter command (--segmenter, "
          "segmenter.command or MASKFX_SEGMENTER)");
    }
  }
  ClassTable classes = LoadClassTable(f.class_table, settings);
  RenderConfig config = BuildRenderConfig(f, settings, classes);

  RasterImage image = ReadImage(f.image);
  SegmentationManifest manifest = f.segment
                                      ? RunExternalSegmenter(f.image, segmenter, classes)
                                      : LoadManifest(f.manifest, classes);
  RenderResult result = Render(image, manifest, config, FilterRegistry::Global(), classes);
  WriteImage(result.image, f.out);

  if (result.selection) {
    out << "selected: " << result.selection->class_name << " (class_id "
        << result.selection->class_id << ", " << result.selection->instance_count
        << (result.selection->instance_count == 1 ? " instance" : " instances")
        << ")\n";
  } else {
    out << "selected: none\n";
  }
  out << "mask_area: " << MaskArea(result.final_mask) << "\n";
  if (!result.notice.empty()) out << "notice: " << result.notice << "\n";
  return kExitOk;
}

int DoClasses(const ClassesFlags& f, const Settings& settings, std::ostream& out) {
  ClassTable classes = LoadClassTable(f.class_table, settings);
  RenderConfig config;
  ApplySettings(settings, classes, &config);
  if (f.score_threshold) config.score_threshold = *f.score_threshold;
  if (!f.priority_file.empty()) {
    config.priority = PriorityTable::FromFile(f.priority_file, classes);
  }
  config.Validate();
  SegmentationManifest manifest = LoadManifest(f.manifest, classes);
  std::vector<ClassMask> ranked = RankClassMasks(
      ComposeClassMasks(manifest, config.score_threshold), config.priority);
  out << std::left << std::setw(6) << "rank" << std::setw(10) << "class_id"
      << std::setw(18) << "class_name" << std::setw(12) << "area"
      << "instances\n";
  int rank = 1;
  for (const ClassMask& cm : ranked) {
    out << std::left << std::setw(6) << rank++ << std::setw(10) << cm.class_id
        << std::setw(18) << cm.class_name << std::setw(12) << cm.area
        << cm.instance_count << "\n";
  }
  return kExitOk;
}

int DoFilters(std::ostream& out) {
  for (const FilterDescriptor& d : FilterRegistry::Global().Descriptors()) {
    out << d.keyword << "\n    " << d.description << "\n";
    for (const ParamSchema& p : d.params) {
      out << "    " << p.name << " " << p.RangeText() << " default "
          << p.default_value << "  " << p.description << "\n";
    }
  }
  return kExitOk;
}

Service* g_running_service = nullptr;

void HandleSignal(int) {
  if (g_running_service) g_running_service->Stop();
}

int DoServe(const ServeFlags& f, const Settings& settings, std::ostream& out) {
  ServiceOptions options;
  options.host = f.host;
  if (f.port) {
    options.port = *f.port;
  } else if (auto v = settings.GetNumber("serve.port")) {
    options.port = static_cast<int>(*v);
  }
  options.static_dir = !f.static_dir.empty()
                           ? f.static_dir
                           : settings.GetString("serve.static_dir").value_or("");
  options.segmenter_command = ResolveSegmenter(f.segmenter, settings);
  if (f.session_timeout) {
    options.session_timeout = std::chrono::seconds(*f.session_timeout);
  } else if (auto v = settings.GetNumber("serve.session_timeout")) {
    options.session_timeout = std::chrono::seconds(static_cast<long>(*v));
  }
  options.classes = LoadClassTable("", settings);
  ApplySettings(settings, options.classes, &options.defaults);

  Service service(std::move(options));
  int port = service.Bind();
  out << "maskfx serving on port " << port << " (kernels: "
      << simd::LevelName(simd::ActiveLevel()) << ")" << std::endl;
  g_running_service = &service;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);
  service.Run();
  g_running_service = nullptr;
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Instance-aware artistic filtering", "maskfx"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "Settings file (TOML-style sections)");

  RenderFlags rf;
  CLI::App* render = app.add_subcommand("render", "Filter foreground and background of an image");
  render->add_option("--image", rf.image, "Input image (PPM or PNG)")->required();
  render->add_option("--manifest", rf.manifest, "Segmentation manifest (JSON)");
  render->add_flag("--segment", rf.segment, "Run the external segmenter instead of --manifest");
  render->add_option("--segmenter", rf.segmenter, "Segmenter command template with {input} and {output}");
  render->add_option("--fg", rf.fg, "Foreground filter spec, e.g. detail-enhancement:amount=2");
  render->add_option("--bg", rf.bg, "Background filter spec, e.g. gray");
  render->add_option("--class", rf.class_name, "Filter this class instead of the top-ranked one");
  render->add_option("--score-threshold", rf.score_threshold, "Minimum instance score")->check(CLI::Range(0.0, 1.0));
  render->add_option("--feather", rf.feather, "Mask edge softening sigma (pixels)")->check(CLI::NonNegativeNumber);
  render->add_flag("--no-morphology", rf.no_morphology, "Skip mask cleanup");
  render->add_option("--open-radius", rf.open_radius, "Opening element radius")->check(CLI::PositiveNumber);
  render->add_option("--close-radius", rf.close_radius, "Closing element radius")->check(CLI::PositiveNumber);
  render->add_option("--open-shape", rf.open_shape, "Opening element shape (square|disk)");
  render->add_option("--close-shape", rf.close_shape, "Closing element shape (square|disk)");
  render->add_option("--min-area-fraction", rf.min_area_fraction, "Drop mask specks smaller than this fraction of the frame")->check(CLI::Range(0.0, 1.0));
  render->add_option("--priority-file", rf.priority_file, "Class priority list, one name per line");
  render->add_option("--class-table", rf.class_table, "Class table override ('<id> <name>' per line)");
  render->add_option("--out", rf.out, "Output image (.png for PNG, otherwise PPM)")->required();

  ClassesFlags cf;
  CLI::App* classes = app.add_subcommand("classes", "List detected classes in selection order");
  classes->add_option("--manifest", cf.manifest, "Segmentation manifest (JSON)")->required();
  classes->add_option("--score-threshold", cf.score_threshold, "Minimum instance score")->check(CLI::Range(0.0, 1.0));
  classes->add_option("--priority-file", cf.priority_file, "Class priority list");
  classes->add_option("--class-table", cf.class_table, "Class table override");

  CLI::App* filters = app.add_subcommand("filters", "List registered filters and their parameters");

  ServeFlags sf;
  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--port", sf.port, "Listen port (default 8080)")->check(CLI::Range(0, 65535));
  serve->add_option("--host", sf.host, "Listen address");
  serve->add_option("--static-dir", sf.static_dir, "Directory of static UI assets");
  serve->add_option("--segmenter", sf.segmenter, "Segmenter command template");
  serve->add_option("--session-timeout", sf.session_timeout, "Idle session lifetime (seconds)")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "maskfx: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    Settings settings = config_path.empty() ? Settings() : Settings::FromFile(config_path);
    if (render->parsed()) return DoRender(rf, settings, out);
    if (classes->parsed()) return DoClasses(cf, settings, out);
    if (filters->parsed()) return DoFilters(out);
    if (serve->parsed()) return DoServe(sf, settings, out);
  } catch (const UsageError& e) {
    err << "maskfx: " << e.what() << "\n\n" << render->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "maskfx: error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return kExitPipelineError;
  } catch (const std::exception& e) {
    err << "maskfx: error: " << e.what() << "\n";
    return kExitPipelineError;
  }
  return kExitUsage;
}

}  // namespace maskfx::app
