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

// Settings file: TOML-style sections of `key = value` lines.
//
//   [render]
//   fg = "detail-enhancement:amount=2"
//   bg = "gray"
//   feather = 1.5
//
//   [morphology]
//   enabled = true
//   open_shape = "disk"
//   open_radius = 2
//
// Keys are addressed as "section.key". Every CLI flag has a key here; flags
// given on the command line win over the file.

#ifndef MASKFX_APP_CONFIG_H_
#define MASKFX_APP_CONFIG_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "maskfx/class_table.h"
#include "maskfx/compositor.h"

namespace maskfx::app {

class Settings {
 public:
  static Settings Parse(std::string_view text);
  static Settings FromFile(const std::filesystem::path& path);

  bool Has(std::string_view key) const { return values_.count(std::string(key)) > 0; }
  std::optional<std::string> GetString(std::string_view key) const;
  // Throw kConfig when the value is present but not of the requested type.
  std::optional<double> GetNumber(std::string_view key) const;
  std::optional<bool> GetBool(std::string_view key) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

// Keys understood by maskfx; anything else in a settings file is an error.
bool IsKnownSettingKey(std::string_view key);

// Copies render.* and morphology.* settings into `config`.
void ApplySettings(const Settings& settings, const ClassTable& classes,
                   RenderConfig* config);

}  // namespace maskfx::app

#endif  // MASKFX_APP_CONFIG_H_
