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

#ifndef MASKFX_CLASS_TABLE_H_
#define MASKFX_CLASS_TABLE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maskfx {

struct ClassInfo {
  int id = 0;
  std::string name;
};

// Dataset class identifiers and their names.
class ClassTable {
 public:
  explicit ClassTable(std::vector<ClassInfo> classes);

  // The 80 COCO categories with their original (gapped) ids 1..90.
  static const ClassTable& Coco();

  // Text format: one "<id> <name>" per line; the name runs to end of line and
  // may contain spaces. Blank lines and '#' comments are ignored.
  static ClassTable Parse(std::string_view text);
  static ClassTable FromFile(const std::filesystem::path& path);

  bool Contains(int id) const { return NameOf(id).has_value(); }
  std::optional<std::string_view> NameOf(int id) const;
  std::optional<int> IdOf(std::string_view name) const;
  const std::vector<ClassInfo>& classes() const { return classes_; }

 private:
  std::vector<ClassInfo> classes_;  // sorted by id
};

}  // namespace maskfx

#endif  // MASKFX_CLASS_TABLE_H_
