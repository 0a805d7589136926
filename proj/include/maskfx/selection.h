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

// Top mask selection. Instances of one class are merged into a single class
// mask, and class masks are ranked by priority tier first, then by area
// (larger first), then by class id. The winner is the region that gets the
// foreground filter.

#ifndef MASKFX_SELECTION_H_
#define MASKFX_SELECTION_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maskfx/class_table.h"
#include "maskfx/image.h"
#include "maskfx/segmentation.h"

namespace maskfx {

inline constexpr double kDefaultScoreThreshold = 0.5;

struct ClassMask {
  int class_id = 0;
  std::string class_name;
  BinaryMask mask;  // union of member instance masks
  size_t area = 0;
  int instance_count = 0;
};

// Class ids in descending priority. Classes not listed all share the tier
// below the last listed one.
class PriorityTable {
 public:
  PriorityTable() = default;
  explicit PriorityTable(std::vector<int> class_ids);

  // person first, then the other COCO classes by dataset instance frequency.
  static const PriorityTable& Default();

  // One class name per line, highest priority first.
  static PriorityTable Parse(std::string_view text,
                             const ClassTable& classes = ClassTable::Coco());
  static PriorityTable FromFile(const std::filesystem::path& path,
                                const ClassTable& classes = ClassTable::Coco());

  size_t TierOf(int class_id) const;
  const std::vector<int>& class_ids() const { return class_ids_; }

 private:
  std::vector<int> class_ids_;
};

// Drops instances scoring below `score_threshold`, then unions the rest per
// class. Output is sorted by class id.
std::vector<ClassMask> ComposeClassMasks(const SegmentationManifest& manifest,
                                         double score_threshold);

std::vector<ClassMask> RankClassMasks(std::vector<ClassMask> masks,
                                      const PriorityTable& priority);

// First ranked class with nonzero area, or nullopt when nothing survives.
std::optional<ClassMask> SelectTopMask(const SegmentationManifest& manifest,
                                       double score_threshold,
                                       const PriorityTable& priority);

// The class mask for `class_id`, or nullopt if no instance of it survives
// thresholding. Throws kUnknownClass for ids outside `classes`.
std::optional<ClassMask> SelectClassMask(
    const SegmentationManifest& manifest, double score_threshold, int class_id,
    const ClassTable& classes = ClassTable::Coco());

}  // namespace maskfx

#endif  // MASKFX_SELECTION_H_
