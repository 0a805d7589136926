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

#include "maskfx/app/service.h"

#include <unistd.h>

#include <cstdlib>
#include <map>
#include <mutex>
#include <random>

#include "httplib.h"
#include "json.hpp"
#include "maskfx/errors.h"
#include "maskfx/image_io.h"
#include "maskfx/segmentation.h"
#include "maskfx/selection.h"

namespace maskfx::app {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Session {
  RasterImage image;
  SegmentationManifest manifest;
  Clock::time_point last_used;
};

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSegmenterLaunch:
    case ErrorCode::kSegmenterFailed:
      return 502;
    case ErrorCode::kIo:
    case ErrorCode::kFileNotFound:
      return 500;
    default:
      return 400;
  }
}

void SendError(httplib::Response& res, int status, std::string_view code,
               std::string_view message) {
  json body = {{"status", status}, {"error", code}, {"message", message}};
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, const Error& e) {
  SendError(res, StatusFor(e.code()), ErrorCodeName(e.code()), e.what());
}

std::string NewSessionId() {
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mu);
  char buf[33];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx",
                static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(rng()));
  return buf;
}

Error BadRequest(const std::string& message) {
  return Error(ErrorCode::kInvalidArgument, message);
}

// Spec string plus an optional params object layered on top.
FilterSpec SpecFromJson(const json& body, const char* stage) {
  auto it = body.find(stage);
  if (it == body.end() || !it->is_string()) {
    throw BadRequest(std::string("'") + stage + "' must be a filter spec string");
  }
  FilterSpec spec = ParseFilterSpec(it->get<std::string>());
  if (auto p = body.find("params"); p != body.end()) {
    if (!p->is_object()) throw BadRequest("'params' must be an object");
    if (auto sp = p->find(stage); sp != p->end()) {
      if (!sp->is_object()) throw BadRequest(std::string("'params.") + stage + "' must be an object");
      for (auto& [name, value] : sp->items()) {
        if (!value.is_number()) {
          throw Error(ErrorCode::kParameterOutOfRange,
                      std::string(stage) + " parameter '" + name + "' must be a number");
        }
        spec.params[name] = value.get<double>();
      }
    }
  }
  return spec;
}

double NumberField(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw BadRequest(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

void ApplyMorphologyJson(const json& m, MorphologyConfig* config) {
  if (!m.is_object()) throw BadRequest("'morphology' must be an object");
  for (auto& [key, value] : m.items()) {
    if (key == "enabled") {
      if (!value.is_boolean()) throw BadRequest("'morphology.enabled' must be a boolean");
      config->enabled = value.get<bool>();
    } else if (key == "open_shape" || key == "close_shape") {
      std::optional<ElementShape> shape =
          value.is_string() ? ParseElementShape(value.get<std::string>()) : std::nullopt;
      if (!shape) throw BadRequest("'morphology." + key + "' must be square or disk");
      (key == "open_shape" ? config->opening : config->closing).shape = *shape;
    } else if (key == "open_radius" || key == "close_radius") {
      if (!value.is_number_integer()) {
        throw BadRequest("'morphology." + key + "' must be an integer");
      }
      (key == "open_radius" ? config->opening : config->closing).radius = value.get<int>();
    } else if (key == "min_area_fraction") {
      config->min_area_fraction = NumberField(m, "min_area_fraction");
    } else {
      throw BadRequest("unknown morphology field '" + key + "'");
    }
  }
}

json ParamsToJson(const std::vector<ParamSchema>& params) {
  json out = json::array();
  for (const ParamSchema& p : params) {
    out.push_back({{"name", p.name},
                   {"min", p.min},
                   {"max", p.max},
                   {"min_exclusive", p.min_exclusive},
                   {"integer", p.integer},
                   {"default", p.default_value},
                   {"description", p.description}});
  }
  return out;
}

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "maskfx-up-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw Error(ErrorCode::kIo, "cannot create temporary directory");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace

struct Service::Impl {
  ServiceOptions options;
  FilterRegistry& registry;
  httplib::Server server;
  int port = -1;

  mutable std::mutex mu;
  std::map<std::string, std::shared_ptr<Session>> sessions;

  Impl(ServiceOptions opts, FilterRegistry& reg)
      : options(std::move(opts)), registry(reg) {}

  std::shared_ptr<Session> Touch(const std::string& id) {
    std::lock_guard lock(mu);
    auto it = sessions.find(id);
    if (it == sessions.end()) return nullptr;
    it->second->last_used = Clock::now();
    return it->second;
  }

  size_t Sweep() {
    std::lock_guard lock(mu);
    Clock::time_point now = Clock::now();
    size_t dropped = 0;
    for (auto it = sessions.begin(); it != sessions.end();) {
      if (now - it->second->last_used > options.session_timeout) {
        it = sessions.erase(it);
        ++dropped;
      } else {
        ++it;
      }
    }
    return dropped;
  }

  SegmentationManifest Segment(std::span<const uint8_t> image_bytes) {
    if (options.segmenter_command.empty()) {
      throw BadRequest("upload has no 'manifest' and no segmenter is configured");
    }
    TempDir dir;
    bool ppm = image_bytes.size() >= 2 && image_bytes[0] == 'P';
    std::filesystem::path input = dir.path() / (ppm ? "input.ppm" : "input.png");
    WriteFileAtomically(input, image_bytes);
    return RunExternalSegmenter(input, options.segmenter_command, options.classes);
  }

  void CreateSession(const httplib::Request& req, httplib::Response& res) {
    std::string image_bytes;
    std::optional<std::string> manifest_text;
    if (req.is_multipart_form_data()) {
      if (!req.has_file("image")) throw BadRequest("multipart upload needs an 'image' part");
      image_bytes = req.get_file_value("image").content;
      if (req.has_file("manifest")) manifest_text = req.get_file_value("manifest").content;
    } else {
      image_bytes = req.body;
    }
    if (image_bytes.empty()) throw BadRequest("empty image upload");
    std::span<const uint8_t> bytes(reinterpret_cast<const uint8_t*>(image_bytes.data()),
                                   image_bytes.size());
    auto session = std::make_shared<Session>();
    session->image = DecodeImage(bytes);
    session->manifest = manifest_text
                            ? ParseManifest(*manifest_text, {}, options.classes)
                            : Segment(bytes);
    if (session->manifest.image_width != session->image.width() ||
        session->manifest.image_height != session->image.height()) {
      throw Error(ErrorCode::kDimensionMismatch, "manifest size does not match the image");
    }
    session->last_used = Clock::now();
    std::string id = NewSessionId();
    json body = {{"session_id", id},
                 {"width", session->image.width()},
                 {"height", session->image.height()},
                 {"instances", session->manifest.instances.size()}};
    {
      std::lock_guard lock(mu);
      sessions.emplace(id, std::move(session));
    }
    res.status = 201;
    res.set_content(body.dump(), "application/json");
  }

  void ListClasses(const Session& s, httplib::Response& res) {
    std::vector<ClassMask> ranked =
        RankClassMasks(ComposeClassMasks(s.manifest, options.defaults.score_threshold),
                       options.defaults.priority);
    json classes = json::array();
    int rank = 1;
    for (const ClassMask& cm : ranked) {
      classes.push_back({{"rank", rank++},
                         {"class_id", cm.class_id},
                         {"class_name", cm.class_name},
                         {"area", cm.area},
                         {"instances", cm.instance_count}});
    }
    res.set_content(json{{"classes", classes}}.dump(), "application/json");
  }

  void RenderSession(const Session& s, const httplib::Request& req,
                     httplib::Response& res) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object()) {
      throw BadRequest("render body must be a JSON object");
    }
    RenderConfig config = options.defaults;
    config.fg_filter = SpecFromJson(body, "fg");
    config.bg_filter = SpecFromJson(body, "bg");
    if (body.contains("feather")) config.feather_sigma = NumberField(body, "feather");
    if (body.contains("score_threshold")) {
      config.score_threshold = NumberField(body, "score_threshold");
    }
    if (body.contains("class_id") && !body["class_id"].is_null()) {
      if (!body["class_id"].is_number_integer()) throw BadRequest("'class_id' must be an integer");
      config.class_override = body["class_id"].get<int>();
    }
    if (body.contains("morphology")) ApplyMorphologyJson(body["morphology"], &config.morphology);

    RenderResult result = Render(s.image, s.manifest, config, registry, options.classes);
    std::vector<uint8_t> png = EncodeImage(result.image, ImageFormat::kPng);
    if (result.selection) {
      res.set_header("X-Maskfx-Class", result.selection->class_name);
      res.set_header("X-Maskfx-Class-Id", std::to_string(result.selection->class_id));
    }
    if (!result.notice.empty()) res.set_header("X-Maskfx-Notice", result.notice);
    res.set_content(std::string(png.begin(), png.end()), "image/png");
  }

  // Runs `fn` with uniform error translation.
  template <typename Fn>
  void Guard(httplib::Response& res, Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      SendError(res, e);
    } catch (const json::exception& e) {
      SendError(res, 400, "invalid-argument", e.what());
    } catch (const std::exception& e) {
      SendError(res, 500, "internal", e.what());
    }
  }

  template <typename Fn>
  void WithSession(const httplib::Request& req, httplib::Response& res, Fn&& fn) {
    Guard(res, [&] {
      std::shared_ptr<Session> s = Touch(req.path_params.at("id"));
      if (!s) {
        SendError(res, 404, "unknown-session", "no session " + req.path_params.at("id"));
        return;
      }
      fn(*s);
    });
  }

  void Install() {
    server.set_payload_max_length(options.max_upload_bytes);
    server.set_pre_routing_handler([this](const httplib::Request&, httplib::Response&) {
      Sweep();
      return httplib::Server::HandlerResponse::Unhandled;
    });
    server.Post("/api/sessions", [this](const httplib::Request& req, httplib::Response& res) {
      Guard(res, [&] { CreateSession(req, res); });
    });
    server.Get("/api/sessions/:id/classes",
               [this](const httplib::Request& req, httplib::Response& res) {
                 WithSession(req, res, [&](const Session& s) { ListClasses(s, res); });
               });
    server.Post("/api/sessions/:id/render",
                [this](const httplib::Request& req, httplib::Response& res) {
                  WithSession(req, res, [&](const Session& s) { RenderSession(s, req, res); });
                });
    server.Delete("/api/sessions/:id", [this](const httplib::Request& req, httplib::Response& res) {
      std::lock_guard lock(mu);
      if (sessions.erase(req.path_params.at("id")) == 0) {
        SendError(res, 404, "unknown-session", "no session " + req.path_params.at("id"));
      } else {
        res.status = 204;
      }
    });
    server.Get("/api/filters", [this](const httplib::Request&, httplib::Response& res) {
      json filters = json::array();
      for (const FilterDescriptor& d : registry.Descriptors()) {
        filters.push_back({{"keyword", d.keyword},
                           {"description", d.description},
                           {"params", ParamsToJson(d.params)}});
      }
      res.set_content(json{{"filters", filters}}.dump(), "application/json");
    });
    if (!options.static_dir.empty()) {
      if (!server.set_mount_point("/", options.static_dir.string())) {
        throw Error(ErrorCode::kFileNotFound,
                    "static directory " + options.static_dir.string() + " not found");
      }
    }
  }
};

Service::Service(ServiceOptions options, FilterRegistry& registry)
    : impl_(std::make_unique<Impl>(std::move(options), registry)) {
  impl_->Install();
}

Service::~Service() { Stop(); }

int Service::Bind() {
  Impl& s = *impl_;
  if (s.options.port == 0) {
    s.port = s.server.bind_to_any_port(s.options.host);
  } else {
    s.port = s.server.bind_to_port(s.options.host, s.options.port) ? s.options.port : -1;
  }
  if (s.port < 0) {
    throw Error(ErrorCode::kIo, "cannot bind " + s.options.host + ":" +
                                    std::to_string(s.options.port));
  }
  return s.port;
}

void Service::Run() { impl_->server.listen_after_bind(); }

void Service::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

size_t Service::SessionCount() const {
  std::lock_guard lock(impl_->mu);
  return impl_->sessions.size();
}

size_t Service::SweepExpired() { return impl_->Sweep(); }

}  // namespace maskfx::app
