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

#include "maskfx/segmentation.h"

#include <fcntl.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <system_error>
#include <utility>

#include "json.hpp"
#include "maskfx/errors.h"
#include "maskfx/image_io.h"

extern char** environ;

namespace maskfx {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

Error Schema(const std::string& what) {
  return Error(ErrorCode::kSchemaViolation, "manifest schema violation: " + what);
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Schema(where + ": missing \"" + key + "\"");
  return *it;
}

int IntField(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_number_integer()) {
    throw Schema(where + ": \"" + key + "\" must be an integer");
  }
  int64_t value = v.get<int64_t>();
  if (value < INT32_MIN || value > INT32_MAX) {
    throw Schema(where + ": \"" + key + "\" out of range");
  }
  return static_cast<int>(value);
}

BinaryMask DecodeMaskObject(const json& mask, int width, int height,
                            const fs::path& base_dir, const std::string& where) {
  if (!mask.is_object()) throw Schema(where + ": \"mask\" must be an object");
  const json& format = Field(mask, "format", where + ".mask");
  if (!format.is_string()) throw Schema(where + ".mask: \"format\" must be a string");
  std::string kind = format.get<std::string>();
  if (kind == "rle") {
    if (auto size = mask.find("size"); size != mask.end()) {
      if (!size->is_array() || size->size() != 2 || !(*size)[0].is_number_integer() ||
          !(*size)[1].is_number_integer()) {
        throw Schema(where + ".mask: \"size\" must be [height, width]");
      }
      int h = (*size)[0].get<int>(), w = (*size)[1].get<int>();
      if (h != height || w != width) {
        throw Error(ErrorCode::kDimensionMismatch,
                    where + ": mask size " + std::to_string(w) + "x" +
                        std::to_string(h) + " differs from manifest " +
                        std::to_string(width) + "x" + std::to_string(height));
      }
    }
    const json& counts = Field(mask, "counts", where + ".mask");
    if (!counts.is_array()) throw Schema(where + ".mask: \"counts\" must be an array");
    std::vector<int64_t> runs;
    runs.reserve(counts.size());
    for (const json& c : counts) {
      if (!c.is_number_integer()) {
        throw Schema(where + ".mask: \"counts\" entries must be integers");
      }
      runs.push_back(c.get<int64_t>());
    }
    try {
      return DecodeRle(runs, width, height);
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  if (kind == "png") {
    const json& path = Field(mask, "path", where + ".mask");
    if (!path.is_string()) throw Schema(where + ".mask: \"path\" must be a string");
    fs::path file = path.get<std::string>();
    if (file.is_relative()) file = base_dir / file;
    GrayImage gray = ReadGray(file);
    if (gray.width() != width || gray.height() != height) {
      throw Error(ErrorCode::kDimensionMismatch,
                  where + ": mask file " + file.string() + " is " +
                      std::to_string(gray.width()) + "x" +
                      std::to_string(gray.height()) + ", manifest is " +
                      std::to_string(width) + "x" + std::to_string(height));
    }
    std::vector<uint8_t> bits(gray.data().begin(), gray.data().end());
    return BinaryMask(width, height, std::move(bits));
  }
  throw Error(ErrorCode::kUnknownMaskEncoding,
              where + ": unknown mask format \"" + kind + "\"");
}

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

std::string ReplaceAll(std::string text, std::string_view from,
                       const std::string& to) {
  size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

class TempDir {
 public:
  TempDir() {
    std::string pattern = (fs::temp_directory_path() / "maskfx-seg-XXXXXX").string();
    if (::mkdtemp(pattern.data()) == nullptr) {
      throw Error(ErrorCode::kIo, std::string("mkdtemp failed: ") +
                                      std::strerror(errno));
    }
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ignored;
    fs::remove_all(path_, ignored);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

BinaryMask DecodeRle(std::span<const int64_t> counts, int width, int height) {
  BinaryMask mask(width, height);
  const int64_t total = static_cast<int64_t>(width) * height;
  int64_t sum = 0;
  for (int64_t c : counts) {
    if (c < 0) {
      throw Error(ErrorCode::kRleNegativeCount,
                  "RLE contains negative run length " + std::to_string(c));
    }
    sum += c;
  }
  if (sum != total) {
    throw Error(ErrorCode::kRleCountMismatch,
                "RLE run lengths do not sum to " + std::to_string(width) + "x" +
                    std::to_string(height) + " = " + std::to_string(total));
  }
  int64_t index = 0;
  bool value = false;
  for (int64_t run : counts) {
    if (value) {
      for (int64_t i = index; i < index + run; ++i) {
        mask.Set(static_cast<int>(i / height), static_cast<int>(i % height), true);
      }
    }
    index += run;
    value = !value;
  }
  return mask;
}

std::vector<int64_t> EncodeRle(const BinaryMask& mask) {
  std::vector<int64_t> counts;
  bool current = false;
  int64_t run = 0;
  for (int x = 0; x < mask.width(); ++x) {
    for (int y = 0; y < mask.height(); ++y) {
      bool v = mask.At(x, y);
      if (v != current) {
        counts.push_back(run);
        run = 0;
        current = v;
      }
      ++run;
    }
  }
  counts.push_back(run);
  return counts;
}

SegmentationManifest ParseManifest(std::string_view text,
                                   const fs::path& base_dir,
                                   const ClassTable& classes) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Schema(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw Schema("top level must be an object");
  SegmentationManifest manifest;
  manifest.image_width = IntField(root, "image_width", "manifest");
  manifest.image_height = IntField(root, "image_height", "manifest");
  if (manifest.image_width < 1 || manifest.image_height < 1) {
    throw Schema("image dimensions must be positive");
  }
  const json& instances = Field(root, "instances", "manifest");
  if (!instances.is_array()) throw Schema("\"instances\" must be an array");
  for (size_t i = 0; i < instances.size(); ++i) {
    const json& entry = instances[i];
    std::string where = "instances[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw Schema(where + " must be an object");
    InstanceAnnotation ann;
    ann.class_id = IntField(entry, "class_id", where);
    const json& name = Field(entry, "class_name", where);
    if (!name.is_string()) throw Schema(where + ": \"class_name\" must be a string");
    ann.class_name = name.get<std::string>();
    const json& score = Field(entry, "score", where);
    if (!score.is_number()) throw Schema(where + ": \"score\" must be a number");
    ann.score = score.get<double>();
    if (!(ann.score >= 0.0 && ann.score <= 1.0)) {
      throw Error(ErrorCode::kScoreOutOfRange,
                  where + ": score " + std::to_string(ann.score) +
                      " outside [0, 1]");
    }
    if (!classes.Contains(ann.class_id)) {
      throw Error(ErrorCode::kUnknownClass,
                  where + ": class_id " + std::to_string(ann.class_id) +
                      " not in the class table");
    }
    ann.mask = DecodeMaskObject(Field(entry, "mask", where), manifest.image_width,
                                manifest.image_height, base_dir, where);
    manifest.instances.push_back(std::move(ann));
  }
  return manifest;
}

SegmentationManifest LoadManifest(const fs::path& path,
                                  const ClassTable& classes) {
  std::vector<uint8_t> bytes = ReadFileBytes(path);
  std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  try {
    return ParseManifest(text, path.parent_path(), classes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string SerializeManifest(const SegmentationManifest& manifest) {
  json root;
  root["image_width"] = manifest.image_width;
  root["image_height"] = manifest.image_height;
  root["instances"] = json::array();
  for (const InstanceAnnotation& ann : manifest.instances) {
    root["instances"].push_back({
        {"class_id", ann.class_id},
        {"class_name", ann.class_name},
        {"score", ann.score},
        {"mask", {{"format", "rle"}, {"counts", EncodeRle(ann.mask)}}},
    });
  }
  return root.dump();
}

std::string DefaultSegmenterTemplate() {
  const char* env = std::getenv("MASKFX_SEGMENTER");
  return env ? std::string(env) : std::string();
}

SegmentationManifest RunExternalSegmenter(const fs::path& image_path,
                                          std::string_view command_template,
                                          const ClassTable& classes) {
  if (command_template.find("{input}") == std::string_view::npos ||
      command_template.find("{output}") == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "segmenter command template must contain {input} and {output}");
  }
  TempDir dir;
  const fs::path output = dir.path() / "manifest.json";
  const fs::path stderr_path = dir.path() / "stderr.txt";
  std::string command = ReplaceAll(std::string(command_template), "{input}",
                                   ShellQuote(fs::absolute(image_path).string()));
  command = ReplaceAll(std::move(command), "{output}", ShellQuote(output.string()));

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, STDOUT_FILENO, "/dev/null", O_WRONLY, 0);
  posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, stderr_path.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0600);
  std::string shell = "/bin/sh", flag = "-c";
  char* argv[] = {shell.data(), flag.data(), command.data(), nullptr};
  pid_t pid = 0;
  int rc = posix_spawn(&pid, shell.c_str(), &actions, nullptr, argv, environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) {
    throw Error(ErrorCode::kSegmenterLaunch,
                std::string("cannot launch segmenter: ") + std::strerror(rc));
  }
  int status = 0;
  while (waitpid(pid, &status, 0) < 0) {
    if (errno != EINTR) {
      throw Error(ErrorCode::kSegmenterLaunch,
                  std::string("waitpid failed: ") + std::strerror(errno));
    }
  }
  auto captured_stderr = [&] {
    std::error_code ec;
    if (!fs::exists(stderr_path, ec)) return std::string();
    std::vector<uint8_t> bytes = ReadFileBytes(stderr_path);
    return std::string(bytes.begin(), bytes.end());
  };
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    std::string how = WIFEXITED(status)
                          ? "exited with status " + std::to_string(WEXITSTATUS(status))
                          : "terminated by signal " + std::to_string(WTERMSIG(status));
    // Shell exit 127 means the command itself could not be found.
    ErrorCode code = WIFEXITED(status) && WEXITSTATUS(status) == 127
                         ? ErrorCode::kSegmenterLaunch
                         : ErrorCode::kSegmenterFailed;
    throw Error(code, "segmenter " + how + ": " + captured_stderr());
  }
  std::error_code ec;
  if (!fs::exists(output, ec)) {
    throw Error(ErrorCode::kSegmenterFailed,
                "segmenter exited cleanly but wrote no manifest: " +
                    captured_stderr());
  }
  try {
    return LoadManifest(output, classes);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("segmenter produced an invalid manifest: ") +
                              e.what());
  }
}

}  // namespace maskfx
