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

#include "maskfx/selection.h"

#include <algorithm>
#include <map>
#include <set>
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

// COCO names ordered by approximate train2017 instance count, person first.
constexpr const char* kDefaultOrder[] = {
    "person",        "car",           "chair",          "book",
    "bottle",        "cup",           "dining table",   "bowl",
    "traffic light", "handbag",       "umbrella",       "bird",
    "boat",          "truck",         "bench",          "sheep",
    "banana",        "kite",          "motorcycle",     "backpack",
    "potted plant",  "cow",           "wine glass",     "carrot",
    "knife",         "broccoli",      "donut",          "bicycle",
    "skis",          "vase",          "horse",          "tie",
    "cell phone",    "orange",        "cake",           "sports ball",
    "clock",         "suitcase",      "spoon",          "surfboard",
    "bus",           "apple",         "pizza",          "tv",
    "couch",         "remote",        "sink",           "skateboard",
    "elephant",      "dog",           "fork",           "zebra",
    "airplane",      "giraffe",       "laptop",         "tennis racket",
    "teddy bear",    "cat",           "train",          "sandwich",
    "bed",           "toilet",        "baseball glove", "oven",
    "baseball bat",  "hot dog",       "keyboard",       "snowboard",
    "frisbee",       "refrigerator",  "mouse",          "stop sign",
    "toothbrush",    "fire hydrant",  "microwave",      "scissors",
    "bear",          "parking meter", "toaster",        "hair drier",
};

}  // namespace

PriorityTable::PriorityTable(std::vector<int> class_ids)
    : class_ids_(std::move(class_ids)) {
  std::set<int> seen;
  for (int id : class_ids_) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kConfig,
                  "priority table lists class " + std::to_string(id) + " twice");
    }
  }
}

const PriorityTable& PriorityTable::Default() {
  static const PriorityTable table = [] {
    std::vector<int> ids;
    for (const char* name : kDefaultOrder) {
      ids.push_back(*ClassTable::Coco().IdOf(name));
    }
    return PriorityTable(std::move(ids));
  }();
  return table;
}

PriorityTable PriorityTable::Parse(std::string_view text,
                                   const ClassTable& classes) {
  std::vector<int> ids;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = Trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    std::optional<int> id = classes.IdOf(line);
    if (!id) {
      throw Error(ErrorCode::kUnknownClass,
                  "priority table names unknown class '" + std::string(line) + "'");
    }
    ids.push_back(*id);
  }
  return PriorityTable(std::move(ids));
}

PriorityTable PriorityTable::FromFile(const std::filesystem::path& path,
                                      const ClassTable& classes) {
  std::vector<uint8_t> bytes = ReadFileBytes(path);
  return Parse(std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                bytes.size()),
               classes);
}

size_t PriorityTable::TierOf(int class_id) const {
  auto it = std::find(class_ids_.begin(), class_ids_.end(), class_id);
  return static_cast<size_t>(it - class_ids_.begin());
}

std::vector<ClassMask> ComposeClassMasks(const SegmentationManifest& manifest,
                                         double score_threshold) {
  std::map<int, ClassMask> by_class;
  for (const InstanceAnnotation& ann : manifest.instances) {
    if (ann.score < score_threshold) continue;
    auto [it, inserted] = by_class.try_emplace(ann.class_id);
    ClassMask& cm = it->second;
    if (inserted) {
      cm.class_id = ann.class_id;
      cm.class_name = ann.class_name;
      cm.mask = ann.mask;
    } else {
      std::span<uint8_t> dst = cm.mask.bits();
      std::span<const uint8_t> src = ann.mask.bits();
      for (size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
    }
    ++cm.instance_count;
  }
  std::vector<ClassMask> out;
  out.reserve(by_class.size());
  for (auto& [id, cm] : by_class) {
    cm.area = MaskArea(cm.mask);
    out.push_back(std::move(cm));
  }
  return out;
}

std::vector<ClassMask> RankClassMasks(std::vector<ClassMask> masks,
                                      const PriorityTable& priority) {
  std::stable_sort(masks.begin(), masks.end(),
                   [&](const ClassMask& a, const ClassMask& b) {
                     size_t ta = priority.TierOf(a.class_id);
                     size_t tb = priority.TierOf(b.class_id);
                     if (ta != tb) return ta < tb;
                     if (a.area != b.area) return a.area > b.area;
                     return a.class_id < b.class_id;
                   });
  return masks;
}

std::optional<ClassMask> SelectTopMask(const SegmentationManifest& manifest,
                                       double score_threshold,
                                       const PriorityTable& priority) {
  std::vector<ClassMask> ranked =
      RankClassMasks(ComposeClassMasks(manifest, score_threshold), priority);
  for (ClassMask& cm : ranked) {
    if (cm.area > 0) return std::move(cm);
  }
  return std::nullopt;
}

std::optional<ClassMask> SelectClassMask(const SegmentationManifest& manifest,
                                         double score_threshold, int class_id,
                                         const ClassTable& classes) {
  if (!classes.Contains(class_id)) {
    throw Error(ErrorCode::kUnknownClass,
                "unknown class id " + std::to_string(class_id));
  }
  for (ClassMask& cm : ComposeClassMasks(manifest, score_threshold)) {
    if (cm.class_id == class_id) return std::move(cm);
  }
  return std::nullopt;
}

}  // namespace maskfx
