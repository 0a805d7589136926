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

#include "maskfx/filter_registry.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <mutex>
#include <utility>

#include "maskfx/errors.h"
#include "maskfx/filters.h"

namespace maskfx {
namespace {

std::string FormatNumber(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

int AsInt(const FilterParams& p, const char* name) {
  return static_cast<int>(p.at(name));
}

ParamSchema Sigma(double default_value, const char* what = "Gaussian sigma (pixels)") {
  return {"sigma", 0.0, 64.0, true, false, default_value, what};
}

std::vector<FilterDescriptor> Builtins() {
  std::vector<FilterDescriptor> out;
  out.push_back({"gray", "Convert image color-map to gray", {},
                 [](const RasterImage& im, const FilterParams&) { return ToGray(im); }});
  out.push_back({"bilateral",
                 "A nonlinear noise reduction filter",
                 {{"sigma_space", 0.0, 32.0, true, false, 5.0, "spatial sigma (pixels)"},
                  {"sigma_range", 0.0, 1e6, true, false, 40.0,
                   "range sigma (8-bit intensity)"}},
                 [](const RasterImage& im, const FilterParams& p) {
                   return Bilateral(im, p.at("sigma_space"), p.at("sigma_range"));
                 }});
  out.push_back({"edge-preserve",
                 "Edge-preserve smoothing filter",
                 {{"radius", 1.0, 64.0, false, true, 8.0, "window radius (pixels)"},
                  {"epsilon", 0.0, 1e9, true, false, 400.0,
                   "regularization (squared 8-bit intensity)"}},
                 [](const RasterImage& im, const FilterParams& p) {
                   return EdgePreserve(im, AsInt(p, "radius"), p.at("epsilon"));
                 }});
  out.push_back({"median-blur",
                 "A nonlinear denoising filter",
                 {{"radius", 1.0, 32.0, false, true, 3.0, "window radius (pixels)"}},
                 [](const RasterImage& im, const FilterParams& p) {
                   return MedianBlur(im, AsInt(p, "radius"));
                 }});
  out.push_back({"gaussian-blur", "Blurring by a Gaussian function", {Sigma(5.0)},
                 [](const RasterImage& im, const FilterParams& p) {
                   return GaussianBlur(im, p.at("sigma"));
                 }});
  out.push_back({"detail-enhancement",
                 "Enhancing details of the image",
                 {{"amount", 0.0, 10.0, false, false, 1.5, "detail gain"},
                  {"radius", 1.0, 64.0, false, true, 8.0, "base window radius (pixels)"},
                  {"epsilon", 0.0, 1e9, true, false, 400.0,
                   "base regularization (squared 8-bit intensity)"}},
                 [](const RasterImage& im, const FilterParams& p) {
                   return DetailEnhance(im, p.at("amount"), AsInt(p, "radius"),
                                        p.at("epsilon"));
                 }});
  out.push_back({"pencil-sketch", "Convert image to Pencil drawing like version",
                 {Sigma(8.0, "blur sigma of the dodge layer (pixels)")},
                 [](const RasterImage& im, const FilterParams& p) {
                   return PencilSketch(im, p.at("sigma"));
                 }});
  out.push_back({"gray-blur",
                 "Convert image color-map to gray and blur it by a Gaussian function",
                 {Sigma(5.0)},
                 [](const RasterImage& im, const FilterParams& p) {
                   return GrayBlur(im, p.at("sigma"));
                 }});
  out.push_back({"preserve", "Preserve image as exactly it is", {},
                 [](const RasterImage& im, const FilterParams&) { return Preserve(im); }});
  return out;
}

}  // namespace

bool ParamSchema::Accepts(double value) const {
  if (!std::isfinite(value)) return false;
  if (min_exclusive ? value <= min : value < min) return false;
  if (value > max) return false;
  return !integer || value == std::floor(value);
}

std::string ParamSchema::RangeText() const {
  return std::string(min_exclusive ? "(" : "[") + FormatNumber(min) + ", " +
         FormatNumber(max) + "]" + (integer ? " integer" : "");
}

FilterSpec ParseFilterSpec(std::string_view text) {
  FilterSpec spec;
  size_t colon = text.find(':');
  spec.keyword = std::string(text.substr(0, colon));
  if (spec.keyword.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty filter keyword in '" +
                                                 std::string(text) + "'");
  }
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    size_t comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "filter parameter '" + std::string(item) +
                      "' must look like name=value");
    }
    std::string name(item.substr(0, eq));
    std::string_view number = item.substr(eq + 1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
      throw Error(ErrorCode::kParameterOutOfRange,
                  "parameter '" + name + "' has non-numeric value '" +
                      std::string(number) + "'");
    }
    spec.params[name] = value;
  }
  return spec;
}

std::string FormatFilterSpec(const FilterSpec& spec) {
  std::string out = spec.keyword;
  char sep = ':';
  for (const auto& [name, value] : spec.params) {
    out += sep;
    out += name + "=" + FormatNumber(value);
    sep = ',';
  }
  return out;
}

FilterRegistry::FilterRegistry(const FilterRegistry& other) {
  std::shared_lock lock(other.mu_);
  filters_ = other.filters_;
}

FilterRegistry FilterRegistry::WithBuiltins() {
  FilterRegistry registry;
  for (FilterDescriptor& d : Builtins()) registry.Register(std::move(d));
  return registry;
}

FilterRegistry& FilterRegistry::Global() {
  static FilterRegistry* registry = new FilterRegistry(WithBuiltins());
  return *registry;
}

void FilterRegistry::Register(FilterDescriptor descriptor) {
  if (descriptor.keyword.empty() || !descriptor.transform) {
    throw Error(ErrorCode::kInvalidArgument,
                "filter descriptor needs a keyword and a transform");
  }
  std::unique_lock lock(mu_);
  if (filters_.count(descriptor.keyword)) {
    throw Error(ErrorCode::kDuplicateFilter,
                "filter '" + descriptor.keyword + "' is already registered");
  }
  std::string key = descriptor.keyword;
  filters_.emplace(std::move(key), std::move(descriptor));
}

std::vector<std::string> FilterRegistry::Keywords() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> out;
  for (const auto& [keyword, d] : filters_) out.push_back(keyword);
  return out;
}

std::vector<FilterDescriptor> FilterRegistry::Descriptors() const {
  std::shared_lock lock(mu_);
  std::vector<FilterDescriptor> out;
  for (const auto& [keyword, d] : filters_) out.push_back(d);
  return out;
}

std::optional<FilterDescriptor> FilterRegistry::Find(std::string_view keyword) const {
  std::shared_lock lock(mu_);
  auto it = filters_.find(keyword);
  if (it == filters_.end()) return std::nullopt;
  return it->second;
}

FilterDescriptor FilterRegistry::Lookup(std::string_view keyword) const {
  if (std::optional<FilterDescriptor> d = Find(keyword)) return std::move(*d);
  std::string known;
  for (const std::string& k : Keywords()) known += (known.empty() ? "" : ", ") + k;
  throw Error(ErrorCode::kUnknownFilter, "unknown filter '" + std::string(keyword) +
                                             "'; registered filters: " + known);
}

FilterParams FilterRegistry::Resolve(const FilterSpec& spec) const {
  FilterDescriptor d = Lookup(spec.keyword);
  for (const auto& [name, value] : spec.params) {
    auto it = std::find_if(d.params.begin(), d.params.end(),
                           [&](const ParamSchema& s) { return s.name == name; });
    if (it == d.params.end()) {
      throw Error(ErrorCode::kUnknownParameter,
                  "filter '" + spec.keyword + "' has no parameter '" + name + "'");
    }
    if (!it->Accepts(value)) {
      throw Error(ErrorCode::kParameterOutOfRange,
                  "parameter '" + name + "' of filter '" + spec.keyword + "' = " +
                      FormatNumber(value) + " is outside " + it->RangeText());
    }
  }
  FilterParams resolved;
  for (const ParamSchema& s : d.params) {
    auto it = spec.params.find(s.name);
    resolved[s.name] = it != spec.params.end() ? it->second : s.default_value;
  }
  return resolved;
}

RasterImage FilterRegistry::Apply(const FilterSpec& spec,
                                  const RasterImage& image) const {
  FilterParams params = Resolve(spec);
  FilterDescriptor d = Lookup(spec.keyword);
  RasterImage out = d.transform(image, params);
  if (out.width() != image.width() || out.height() != image.height()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "filter '" + spec.keyword + "' changed the image dimensions");
  }
  return out;
}

RasterImage ApplyFilter(const FilterSpec& spec, const RasterImage& image) {
  return FilterRegistry::Global().Apply(spec, image);
}

void RegisterFilter(FilterDescriptor descriptor) {
  FilterRegistry::Global().Register(std::move(descriptor));
}

std::vector<std::string> ListFilters() { return FilterRegistry::Global().Keywords(); }

}  // namespace maskfx
