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

// Keyword-addressed filter registry.
//
// Built-in keywords: gray, bilateral, edge-preserve, median-blur,
// gaussian-blur, detail-enhancement, pencil-sketch, gray-blur, preserve.
// Applications add their own with RegisterFilter(). A spec string has the
// form `keyword[:name=value,name=value]`, e.g. "gaussian-blur:sigma=3.5".

#ifndef MASKFX_FILTER_REGISTRY_H_
#define MASKFX_FILTER_REGISTRY_H_

#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "maskfx/image.h"

namespace maskfx {

using FilterParams = std::map<std::string, double, std::less<>>;

struct ParamSchema {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  bool min_exclusive = false;  // legal range is (min, max] instead of [min, max]
  bool integer = false;
  double default_value = 0.0;
  std::string description;

  bool Accepts(double value) const;
  std::string RangeText() const;
};

struct FilterSpec {
  std::string keyword;
  FilterParams params;

  bool operator==(const FilterSpec&) const = default;
};

// `params` handed to the transform always holds every schema parameter:
// user values where given, defaults elsewhere.
using FilterTransform =
    std::function<RasterImage(const RasterImage&, const FilterParams&)>;

struct FilterDescriptor {
  std::string keyword;
  std::string description;
  std::vector<ParamSchema> params;
  FilterTransform transform;
};

FilterSpec ParseFilterSpec(std::string_view text);
std::string FormatFilterSpec(const FilterSpec& spec);

class FilterRegistry {
 public:
  FilterRegistry() = default;
  FilterRegistry(const FilterRegistry& other);
  FilterRegistry& operator=(const FilterRegistry&) = delete;

  static FilterRegistry WithBuiltins();
  // Process-wide registry used by ApplyFilter and the CLI/service.
  static FilterRegistry& Global();

  // Throws kDuplicateFilter if the keyword is taken.
  void Register(FilterDescriptor descriptor);

  std::vector<std::string> Keywords() const;
  std::vector<FilterDescriptor> Descriptors() const;
  std::optional<FilterDescriptor> Find(std::string_view keyword) const;

  // Checks the spec against its schema and fills in defaults. Throws
  // kUnknownFilter (message lists the registered keywords),
  // kUnknownParameter or kParameterOutOfRange naming the offender.
  FilterParams Resolve(const FilterSpec& spec) const;
  RasterImage Apply(const FilterSpec& spec, const RasterImage& image) const;

 private:
  FilterDescriptor Lookup(std::string_view keyword) const;

  mutable std::shared_mutex mu_;
  std::map<std::string, FilterDescriptor, std::less<>> filters_;
};

RasterImage ApplyFilter(const FilterSpec& spec, const RasterImage& image);
void RegisterFilter(FilterDescriptor descriptor);
std::vector<std::string> ListFilters();

}  // namespace maskfx

#endif  // MASKFX_FILTER_REGISTRY_H_
