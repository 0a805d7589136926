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

#include <atomic>
#include <cstdlib>
#include <string>

#include "maskfx/errors.h"
#include "maskfx/simd/kernels.h"

namespace maskfx::simd {
namespace {

bool CpuHasAvx2() {
#if defined(MASKFX_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* InitialTable() {
  Level level = DetectedLevel();
  if (const char* env = std::getenv("MASKFX_SIMD")) {
    std::string value = env;
    if (value == "scalar") level = Level::kScalar;
    // "avx2" or anything else keeps the detected level; an unsupported
    // request never selects code the CPU cannot run.
  }
  return &KernelsFor(level);
}

std::atomic<const KernelTable*>& ActiveTable() {
  static std::atomic<const KernelTable*> table{InitialTable()};
  return table;
}

}  // namespace

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kScalar: return "scalar";
    case Level::kAvx2: return "avx2";
  }
  return "unknown";
}

Level DetectedLevel() {
  static const Level level = CpuHasAvx2() ? Level::kAvx2 : Level::kScalar;
  return level;
}

bool LevelSupported(Level level) {
  return level == Level::kScalar || DetectedLevel() == Level::kAvx2;
}

std::vector<Level> SupportedLevels() {
  std::vector<Level> levels = {Level::kScalar};
  if (LevelSupported(Level::kAvx2)) levels.push_back(Level::kAvx2);
  return levels;
}

const KernelTable& KernelsFor(Level level) {
#if defined(MASKFX_HAVE_AVX2)
  if (level == Level::kAvx2) {
    if (!LevelSupported(level)) {
      throw Error(ErrorCode::kInvalidArgument, "AVX2 not supported by this CPU");
    }
    return internal::Avx2Kernels();
  }
#else
  if (level == Level::kAvx2) {
    throw Error(ErrorCode::kInvalidArgument, "built without AVX2 kernels");
  }
#endif
  return internal::ScalarKernels();
}

const KernelTable& Kernels() {
  return *ActiveTable().load(std::memory_order_acquire);
}

Level ActiveLevel() { return Kernels().level; }

void SetActiveLevel(Level level) {
  if (!LevelSupported(level)) level = Level::kScalar;
  ActiveTable().store(&KernelsFor(level), std::memory_order_release);
}

}  // namespace maskfx::simd
