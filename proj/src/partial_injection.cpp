// Copyright 2026 The simroot Authors
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

#include "simroot/partial_injection.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "simroot/decomposition.hpp"
#include "simroot/error.hpp"

namespace simroot {

GroundSet::GroundSet(std::vector<Digit> digits) : digits_(std::move(digits)) {
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
  if (!digits_.empty() && digits_.front() == 0) {
    throw GroundError("digit 0 is not a valid point");
  }
}

GroundSet GroundSet::range(Digit n) {
  std::vector<Digit> digits(n);
  for (Digit i = 0; i < n; ++i) digits[i] = i + 1;
  return GroundSet(std::move(digits));
}

std::size_t GroundSet::index_of(Digit d) const noexcept {
  auto it = std::lower_bound(digits_.begin(), digits_.end(), d);
  if (it == digits_.end() || *it != d) return npos;
  return static_cast<std::size_t>(it - digits_.begin());
}

GroundSet GroundSet::united(const GroundSet& other) const {
  std::vector<Digit> merged;
  merged.reserve(size() + other.size());
  std::set_union(digits_.begin(), digits_.end(), other.digits_.begin(),
                 other.digits_.end(), std::back_inserter(merged));
  GroundSet result;
  result.digits_ = std::move(merged);
  return result;
}

PartialInjection::PartialInjection(GroundSet ground)
    : ground_(std::move(ground)), images_(ground_.size(), undefined) {}

PartialInjection::PartialInjection(GroundSet ground, std::vector<Index> images,
                                   bool)
    : ground_(std::move(ground)), images_(std::move(images)) {}

PartialInjection::PartialInjection(
    GroundSet ground, std::span<const std::pair<Digit, Digit>> graph)
    : PartialInjection(std::move(ground)) {
  std::vector<bool> hit(size(), false);
  for (auto [source, target] : graph) {
    const std::size_t s = ground_.index_of(source);
    const std::size_t t = ground_.index_of(target);
    if (s == GroundSet::npos || t == GroundSet::npos) {
      throw GroundError("pair " + std::to_string(source) + "->" +
                        std::to_string(target) + " leaves the ground set");
    }
    if (images_[s] != undefined) {
      throw OverlapError("digit " + std::to_string(source) +
                         " is mapped twice");
    }
    if (hit[t]) {
      throw OverlapError("digit " + std::to_string(target) +
                         " is hit twice");
    }
    images_[s] = static_cast<Index>(t);
    hit[t] = true;
  }
}

PartialInjection PartialInjection::from_images(GroundSet ground,
                                               std::vector<Index> images) {
  if (images.size() != ground.size()) {
    throw GroundMismatch("image table does not match ground size");
  }
  std::vector<bool> hit(images.size(), false);
  for (Index target : images) {
    if (target == undefined) continue;
    if (target >= images.size()) {
      throw GroundError("image index out of range");
    }
    if (hit[target]) throw OverlapError("image table is not injective");
    hit[target] = true;
  }
  return PartialInjection(std::move(ground), std::move(images), true);
}

std::optional<Digit> PartialInjection::operator()(Digit d) const {
  const std::size_t i = ground_.index_of(d);
  if (i == GroundSet::npos || images_[i] == undefined) return std::nullopt;
  return ground_[images_[i]];
}

std::size_t PartialInjection::rank() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(images_.begin(), images_.end(),
                    [](Index t) { return t != undefined; }));
}

std::vector<std::pair<Digit, Digit>> PartialInjection::graph() const {
  std::vector<std::pair<Digit, Digit>> pairs;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != undefined) {
      pairs.emplace_back(ground_[i], ground_[images_[i]]);
    }
  }
  return pairs;
}

std::uint64_t PartialInjection::code() const noexcept {
  const std::uint64_t radix = images_.size() + 1;
  std::uint64_t key = 0;
  for (Index t : images_) key = key * radix + (t == undefined ? 0 : t + 1);
  return key;
}

PartialInjection compose(const PartialInjection& f, const PartialInjection& g) {
  if (!(f.ground() == g.ground())) {
    throw GroundMismatch("cannot compose elements on different ground sets");
  }
  const auto fi = f.images();
  const auto gi = g.images();
  std::vector<PartialInjection::Index> out(fi.size());
  for (std::size_t x = 0; x < fi.size(); ++x) {
    out[x] = fi[x] == PartialInjection::undefined ? PartialInjection::undefined
                                                  : gi[fi[x]];
  }
  return PartialInjection::from_images(f.ground(), std::move(out));
}

namespace {

PartialInjection power_pointwise(const PartialInjection& f, unsigned k) {
  const auto images = f.images();
  std::vector<PartialInjection::Index> out(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    PartialInjection::Index y = static_cast<PartialInjection::Index>(x);
    for (unsigned step = 0; step < k && y != PartialInjection::undefined;
         ++step) {
      y = images[y];
    }
    out[x] = y;
  }
  return PartialInjection::from_images(f.ground(), std::move(out));
}

}  // namespace

PartialInjection power(const PartialInjection& f, unsigned k) {
  if (k == 0) throw KInvalid("exponent must be at least 1");
  PartialInjection result = power_pointwise(f, k);
  assert(result == power_by_components(f, k));
  return result;
}

PartialInjection inverse(const PartialInjection& f) {
  const auto images = f.images();
  std::vector<PartialInjection::Index> out(images.size(),
                                           PartialInjection::undefined);
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] != PartialInjection::undefined) {
      out[images[x]] = static_cast<PartialInjection::Index>(x);
    }
  }
  return PartialInjection::from_images(f.ground(), std::move(out));
}

bool is_idempotent(const PartialInjection& f) { return compose(f, f) == f; }

}  // namespace simroot

std::size_t std::hash<simroot::PartialInjection>::operator()(
    const simroot::PartialInjection& f) const noexcept {
  std::size_t seed = f.size();
  for (auto d : f.ground().digits()) {
    seed ^= d + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed ^ std::hash<std::uint64_t>{}(f.code());
}
