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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "maskfx/errors.h"
#include "maskfx/image_io.h"

namespace maskfx::app {
namespace {

constexpr std::string_view kKnownKeys[] = {
    "render.fg",
    "render.bg",
    "render.class",
    "render.score_threshold",
    "render.feather",
    "render.priority_file",
    "render.class_table",
    "morphology.enabled",
    "morphology.open_shape",
    "morphology.open_radius",
    "morphology.close_shape",
    "morphology.close_radius",
    "morphology.min_area_fraction",
    "segmenter.command",
    "serve.port",
    "serve.static_dir",
    "serve.session_timeout",
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Error ConfigError(int line, const std::string& what) {
  return Error(ErrorCode::kConfig,
               "settings line " + std::to_string(line) + ": " + what);
}

// Strips a trailing comment that is not inside quotes.
std::string_view StripComment(std::string_view line) {
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

}  // namespace

Settings Settings::Parse(std::string_view text) {
  Settings settings;
  std::string section;
  int line_no = 0;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = Trim(StripComment(text.substr(0, eol)));
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line_no, "unterminated section header");
      section = std::string(Trim(line.substr(1, line.size() - 2)));
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected key = value");
    std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "empty key");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    std::string full = section.empty() ? key : section + "." + key;
    if (!IsKnownSettingKey(full)) {
      throw ConfigError(line_no, "unknown setting '" + full + "'");
    }
    settings.values_[full] = std::string(value);
  }
  return settings;
}

Settings Settings::FromFile(const std::filesystem::path& path) {
  std::vector<uint8_t> bytes = ReadFileBytes(path);
  try {
    return Parse(std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                  bytes.size()));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::optional<std::string> Settings::GetString(std::string_view key) const {
  auto it = values_.find(std::string(key));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> Settings::GetNumber(std::string_view key) const {
  std::optional<std::string> s = GetString(key);
  if (!s) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), value);
  if (ec != std::errc() || ptr != s->data() + s->size() || !std::isfinite(value)) {
    throw Error(ErrorCode::kConfig,
                "setting " + std::string(key) + " = '" + *s + "' is not a number");
  }
  return value;
}

std::optional<bool> Settings::GetBool(std::string_view key) const {
  std::optional<std::string> s = GetString(key);
  if (!s) return std::nullopt;
  if (*s == "true") return true;
  if (*s == "false") return false;
  throw Error(ErrorCode::kConfig,
              "setting " + std::string(key) + " = '" + *s + "' is not true/false");
}

bool IsKnownSettingKey(std::string_view key) {
  return std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) !=
         std::end(kKnownKeys);
}

void ApplySettings(const Settings& settings, const ClassTable& classes,
                   RenderConfig* config) {
  auto radius = [&](std::string_view key, StructuringElement* se) {
    if (std::optional<double> v = settings.GetNumber(key)) {
      if (*v < 1 || *v != std::floor(*v)) {
        throw Error(ErrorCode::kConfig, std::string(key) + " must be an integer >= 1");
      }
      se->radius = static_cast<int>(*v);
    }
  };
  auto shape = [&](std::string_view key, StructuringElement* se) {
    if (std::optional<std::string> v = settings.GetString(key)) {
      std::optional<ElementShape> parsed = ParseElementShape(*v);
      if (!parsed) {
        throw Error(ErrorCode::kConfig, std::string(key) + " must be square or disk");
      }
      se->shape = *parsed;
    }
  };

  if (auto v = settings.GetString("render.fg")) config->fg_filter = ParseFilterSpec(*v);
  if (auto v = settings.GetString("render.bg")) config->bg_filter = ParseFilterSpec(*v);
  if (auto v = settings.GetString("render.class")) {
    std::optional<int> id = classes.IdOf(*v);
    if (!id) throw Error(ErrorCode::kUnknownClass, "unknown class '" + *v + "'");
    config->class_override = *id;
  }
  if (auto v = settings.GetNumber("render.score_threshold")) config->score_threshold = *v;
  if (auto v = settings.GetNumber("render.feather")) config->feather_sigma = *v;
  if (auto v = settings.GetString("render.priority_file")) {
    config->priority = PriorityTable::FromFile(*v, classes);
  }
  if (auto v = settings.GetBool("morphology.enabled")) config->morphology.enabled = *v;
  shape("morphology.open_shape", &config->morphology.opening);
  radius("morphology.open_radius", &config->morphology.opening);
  shape("morphology.close_shape", &config->morphology.closing);
  radius("morphology.close_radius", &config->morphology.closing);
  if (auto v = settings.GetNumber("morphology.min_area_fraction")) {
    config->morphology.min_area_fraction = *v;
  }
}

}  // namespace maskfx::app
