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

// Instance segmentation input: COCO-style run-length masks, the JSON
// manifest that carries them, and the external segmenter process contract.
//
// Manifest schema:
//   { "image_width": int, "image_height": int,
//     "instances": [ { "class_id": int, "class_name": string, "score": float,
//                      "mask": {"format": "rle", "counts": [int, ...]}
//                            | {"format": "png", "path": string} } ] }
//
// RLE masks may also carry "size": [height, width] as COCO exports do; it
// is checked against the manifest dimensions when present. Relative PNG/PGM
// mask paths resolve against the manifest's directory.

#ifndef MASKFX_SEGMENTATION_H_
#define MASKFX_SEGMENTATION_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maskfx/class_table.h"
#include "maskfx/image.h"

namespace maskfx {

struct InstanceAnnotation {
  int class_id = 0;
  std::string class_name;
  double score = 0.0;
  BinaryMask mask;
};

struct SegmentationManifest {
  int image_width = 0;
  int image_height = 0;
  std::vector<InstanceAnnotation> instances;
};

// COCO uncompressed RLE: alternating run lengths starting with a (possibly
// empty) run of zeros, pixels enumerated column by column.
BinaryMask DecodeRle(std::span<const int64_t> counts, int width, int height);
// Canonical encoding: no zero-length runs except a leading empty zero run.
std::vector<int64_t> EncodeRle(const BinaryMask& mask);

SegmentationManifest ParseManifest(std::string_view json,
                                   const std::filesystem::path& base_dir,
                                   const ClassTable& classes = ClassTable::Coco());
SegmentationManifest LoadManifest(const std::filesystem::path& path,
                                  const ClassTable& classes = ClassTable::Coco());
// Serializes with RLE masks.
std::string SerializeManifest(const SegmentationManifest& manifest);

// Default command template from the MASKFX_SEGMENTER environment variable,
// empty when unset.
std::string DefaultSegmenterTemplate();

// Runs `command_template` through /bin/sh with {input} and {output} replaced
// by shell-quoted paths, waits for it, then loads the manifest it wrote.
// Each call writes into its own fresh temporary directory.
SegmentationManifest RunExternalSegmenter(
    const std::filesystem::path& image_path, std::string_view command_template,
    const ClassTable& classes = ClassTable::Coco());

}  // namespace maskfx

#endif  // MASKFX_SEGMENTATION_H_
