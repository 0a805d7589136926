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

// HTTP API for interactive use.
//
//   POST   /api/sessions                image upload; multipart form with an
//                                       "image" file and optional "manifest"
//                                       JSON, or the raw image as the body.
//                                       -> {session_id, width, height}
//   GET    /api/sessions/{id}/classes   ranked class list
//   GET    /api/filters                 registry with parameter schemas
//   POST   /api/sessions/{id}/render    {class_id?, fg, bg, params?, feather?,
//                                        morphology?, score_threshold?}
//                                       -> image/png
//   DELETE /api/sessions/{id}
//
// Errors come back as {"status": int, "error": code, "message": text}.
// Sessions idle for longer than the timeout are dropped.

#ifndef MASKFX_APP_SERVICE_H_
#define MASKFX_APP_SERVICE_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>

#include "maskfx/class_table.h"
#include "maskfx/compositor.h"
#include "maskfx/filter_registry.h"

namespace maskfx::app {

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::filesystem::path static_dir;
  // Used when an upload carries no manifest; empty disables segmentation.
  std::string segmenter_command;
  std::chrono::seconds session_timeout{30 * 60};
  size_t max_upload_bytes = 64u << 20;
  ClassTable classes = ClassTable::Coco();
  // Priority, threshold and morphology defaults for requests.
  RenderConfig defaults;
};

class Service {
 public:
  explicit Service(ServiceOptions options,
                   FilterRegistry& registry = FilterRegistry::Global());
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds the listening socket and returns the port. Throws kIo on failure.
  int Bind();
  // Serves until Stop(). Bind() must have succeeded.
  void Run();
  void Stop();

  size_t SessionCount() const;
  // Drops sessions idle longer than the timeout; returns how many.
  size_t SweepExpired();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace maskfx::app

#endif  // MASKFX_APP_SERVICE_H_
