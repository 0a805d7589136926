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

// Sliding-histogram median (Huang). The histogram follows the window along
// each row, and the median is tracked incrementally: `below` counts the
// window values strictly less than the current median.

#include <array>
#include <string>
#include <vector>

#include "maskfx/errors.h"
#include "maskfx/filters.h"

namespace maskfx {
namespace {

class WindowMedian {
 public:
  explicit WindowMedian(int count) : rank_((count - 1) / 2) {}

  void Reset() {
    hist_.fill(0);
    median_ = 0;
    below_ = 0;
  }
  void Add(uint8_t v) {
    ++hist_[v];
    if (v < median_) ++below_;
  }
  void Remove(uint8_t v) {
    --hist_[v];
    if (v < median_) --below_;
  }
  uint8_t Median() {
    while (below_ > rank_) {
      --median_;
      below_ -= hist_[median_];
    }
    while (below_ + hist_[median_] <= rank_) {
      below_ += hist_[median_];
      ++median_;
    }
    return static_cast<uint8_t>(median_);
  }

 private:
  std::array<int, 256> hist_{};
  int rank_;
  int median_ = 0;
  int below_ = 0;
};

}  // namespace

RasterImage MedianBlur(const RasterImage& image, int radius) {
  if (radius < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "median radius must be >= 1, got " + std::to_string(radius));
  }
  const int width = image.width();
  const int height = image.height();
  const int window = 2 * radius + 1;
  RasterImage out(width, height);
  std::vector<int> rows(window);
  WindowMedian median(window * window);

  for (int c = 0; c < 3; ++c) {
    auto value = [&](int x, int y) {
      return image.Row(y)[static_cast<size_t>(x) * 3 + c];
    };
    for (int y = 0; y < height; ++y) {
      for (int k = 0; k < window; ++k) rows[k] = ReflectIndex(y - radius + k, height);
      auto add_column = [&](int x) {
        for (int yy : rows) median.Add(value(x, yy));
      };
      auto remove_column = [&](int x) {
        for (int yy : rows) median.Remove(value(x, yy));
      };
      median.Reset();
      for (int dx = -radius; dx <= radius; ++dx) add_column(ReflectIndex(dx, width));
      uint8_t* dst = out.Row(y);
      dst[c] = median.Median();
      for (int x = 1; x < width; ++x) {
        remove_column(ReflectIndex(x - 1 - radius, width));
        add_column(ReflectIndex(x + radius, width));
        dst[static_cast<size_t>(x) * 3 + c] = median.Median();
      }
    }
  }
  return out;
}

}  // namespace maskfx
