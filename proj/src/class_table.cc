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

#include "maskfx/class_table.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>

#include "maskfx/errors.h"
#include "maskfx/image_io.h"

namespace maskfx {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

ClassTable::ClassTable(std::vector<ClassInfo> classes)
    : classes_(std::move(classes)) {
  std::sort(classes_.begin(), classes_.end(),
            [](const ClassInfo& a, const ClassInfo& b) { return a.id < b.id; });
  std::set<std::string> names;
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (i > 0 && classes_[i].id == classes_[i - 1].id) {
      throw Error(ErrorCode::kConfig, "duplicate class id " +
                                          std::to_string(classes_[i].id));
    }
    if (!names.insert(classes_[i].name).second) {
      throw Error(ErrorCode::kConfig,
                  "duplicate class name '" + classes_[i].name + "'");
    }
  }
}

const ClassTable& ClassTable::Coco() {
  static const ClassTable table({
      {1, "person"},         {2, "bicycle"},       {3, "car"},
      {4, "motorcycle"},     {5, "airplane"},      {6, "bus"},
      {7, "train"},          {8, "truck"},         {9, "boat"},
      {10, "traffic light"}, {11, "fire hydrant"}, {13, "stop sign"},
      {14, "parking meter"}, {15, "bench"},        {16, "bird"},
      {17, "cat"},           {18, "dog"},          {19, "horse"},
      {20, "sheep"},         {21, "cow"},          {22, "elephant"},
      {23, "bear"},          {24, "zebra"},        {25, "giraffe"},
      {27, "backpack"},      {28, "umbrella"},     {31, "handbag"},
      {32, "tie"},           {33, "suitcase"},     {34, "frisbee"},
      {35, "skis"},          {36, "snowboard"},    {37, "sports ball"},
      {38, "kite"},          {39, "baseball bat"}, {40, "baseball glove"},
      {41, "skateboard"},    {42, "surfboard"},    {43, "tennis racket"},
      {44, "bottle"},        {46, "wine glass"},   {47, "cup"},
      {48, "fork"},          {49, "knife"},        {50, "spoon"},
      {51, "bowl"},          {52, "banana"},       {53, "apple"},
      {54, "sandwich"},      {55, "orange"},       {56, "broccoli"},
      {57, "carrot"},        {58, "hot dog"},      {59, "pizza"},
      {60, "donut"},         {61, "cake"},         {62, "chair"},
      {63, "couch"},         {64, "potted plant"}, {65, "bed"},
      {67, "dining table"},  {70, "toilet"},       {72, "tv"},
      {73, "laptop"},        {74, "mouse"},        {75, "remote"},
      {76, "keyboard"},      {77, "cell phone"},   {78, "microwave"},
      {79, "oven"},          {80, "toaster"},      {81, "sink"},
      {82, "refrigerator"},  {84, "book"},         {85, "clock"},
      {86, "vase"},          {87, "scissors"},     {88, "teddy bear"},
      {89, "hair drier"},    {90, "toothbrush"},
  });
  return table;
}

ClassTable ClassTable::Parse(std::string_view text) {
  std::vector<ClassInfo> classes;
  int line_no = 0;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = Trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    int id = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), id);
    std::string_view name =
        Trim(line.substr(static_cast<size_t>(ptr - line.data())));
    if (ec != std::errc() || name.empty()) {
      throw Error(ErrorCode::kConfig, "class table line " +
                                          std::to_string(line_no) +
                                          ": expected '<id> <name>'");
    }
    classes.push_back({id, std::string(name)});
  }
  return ClassTable(std::move(classes));
}

ClassTable ClassTable::FromFile(const std::filesystem::path& path) {
  std::vector<uint8_t> bytes = ReadFileBytes(path);
  return Parse(std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                bytes.size()));
}

std::optional<std::string_view> ClassTable::NameOf(int id) const {
  auto it = std::lower_bound(
      classes_.begin(), classes_.end(), id,
      [](const ClassInfo& c, int value) { return c.id < value; });
  if (it == classes_.end() || it->id != id) return std::nullopt;
  return it->name;
}

std::optional<int> ClassTable::IdOf(std::string_view name) const {
  for (const ClassInfo& c : classes_) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

}  // namespace maskfx
