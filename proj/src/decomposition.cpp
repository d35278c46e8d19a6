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

#include "simroot/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "simroot/error.hpp"

namespace simroot {

namespace {

void require_distinct(std::span<const Digit> digits, const char* kind) {
  if (digits.empty()) {
    throw std::invalid_argument(std::string(kind) + " must not be empty");
  }
  std::vector<Digit> sorted(digits.begin(), digits.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == 0) {
    throw std::invalid_argument(std::string(kind) + " contains digit 0");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument(std::string(kind) + " repeats a digit");
  }
}

}  // namespace

PathComponent::PathComponent(std::vector<Digit> digits)
    : digits_(std::move(digits)) {
  require_distinct(digits_, "path");
}

Digit PathComponent::min_digit() const noexcept {
  return *std::min_element(digits_.begin(), digits_.end());
}

CycleComponent::CycleComponent(std::vector<Digit> digits)
    : digits_(std::move(digits)) {
  require_distinct(digits_, "cycle");
  std::rotate(digits_.begin(), std::min_element(digits_.begin(), digits_.end()),
              digits_.end());
}

void Decomposition::canonicalize() {
  auto by_min = [](const auto& a, const auto& b) {
    return a.min_digit() < b.min_digit();
  };
  std::sort(cycles.begin(), cycles.end(), by_min);
  std::sort(paths.begin(), paths.end(), by_min);
}

std::vector<Digit> Decomposition::digits() const {
  std::vector<Digit> all;
  for (const auto& c : cycles) all.insert(all.end(), c.digits().begin(), c.digits().end());
  for (const auto& p : paths) all.insert(all.end(), p.digits().begin(), p.digits().end());
  std::sort(all.begin(), all.end());
  return all;
}

Decomposition decompose(const PartialInjection& f) {
  using Index = PartialInjection::Index;
  const auto images = f.images();
  const auto& ground = f.ground();
  const std::size_t n = images.size();

  std::vector<bool> has_preimage(n, false);
  for (Index t : images) {
    if (t != PartialInjection::undefined) has_preimage[t] = true;
  }

  Decomposition d;
  std::vector<bool> visited(n, false);
  // Chains start exactly at the points nothing maps to.
  for (std::size_t start = 0; start < n; ++start) {
    if (has_preimage[start]) continue;
    std::vector<Digit> digits;
    for (Index x = static_cast<Index>(start); x != PartialInjection::undefined;
         x = images[x]) {
      visited[x] = true;
      digits.push_back(ground[x]);
    }
    d.paths.emplace_back(std::move(digits));
  }
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<Digit> digits;
    for (Index x = static_cast<Index>(start); !visited[x]; x = images[x]) {
      visited[x] = true;
      digits.push_back(ground[x]);
    }
    d.cycles.emplace_back(std::move(digits));
  }
  d.canonicalize();
  return d;
}

PartialInjection recompose(const Decomposition& d, const GroundSet& ground) {
  std::vector<bool> used(ground.size(), false);
  auto claim = [&](Digit digit) {
    const std::size_t i = ground.index_of(digit);
    if (i == GroundSet::npos) {
      throw GroundError("digit " + std::to_string(digit) +
                        " is not in the ground set");
    }
    if (used[i]) {
      throw OverlapError("digit " + std::to_string(digit) +
                         " appears in more than one component");
    }
    used[i] = true;
  };

  std::vector<std::pair<Digit, Digit>> graph;
  for (const auto& c : d.cycles) {
    const auto digits = c.digits();
    for (std::size_t i = 0; i < digits.size(); ++i) {
      claim(digits[i]);
      graph.emplace_back(digits[i], digits[(i + 1) % digits.size()]);
    }
  }
  for (const auto& p : d.paths) {
    const auto digits = p.digits();
    for (std::size_t i = 0; i < digits.size(); ++i) {
      claim(digits[i]);
      if (i + 1 < digits.size()) graph.emplace_back(digits[i], digits[i + 1]);
    }
  }
  return PartialInjection(ground, graph);
}

Decomposition path_power(const PathComponent& p, unsigned k) {
  if (k == 0) throw KInvalid("exponent must be at least 1");
  const auto digits = p.digits();
  const std::size_t count = std::min<std::size_t>(k, digits.size());
  Decomposition d;
  for (std::size_t start = 0; start < count; ++start) {
    std::vector<Digit> part;
    for (std::size_t i = start; i < digits.size(); i += k) {
      part.push_back(digits[i]);
    }
    d.paths.emplace_back(std::move(part));
  }
  d.canonicalize();
  return d;
}

Decomposition cycle_power(const CycleComponent& c, unsigned k) {
  if (k == 0) throw KInvalid("exponent must be at least 1");
  const auto digits = c.digits();
  const std::size_t length = digits.size();
  const std::size_t count = std::gcd(length, static_cast<std::size_t>(k));
  const std::size_t stride = k % length;
  Decomposition d;
  for (std::size_t start = 0; start < count; ++start) {
    std::vector<Digit> part;
    std::size_t i = start;
    for (std::size_t step = 0; step < length / count; ++step) {
      part.push_back(digits[i]);
      i = (i + stride) % length;
    }
    d.cycles.emplace_back(std::move(part));
  }
  d.canonicalize();
  return d;
}

PartialInjection power_by_components(const PartialInjection& f, unsigned k) {
  const Decomposition d = decompose(f);
  Decomposition powered;
  for (const auto& c : d.cycles) {
    auto part = cycle_power(c, k);
    powered.cycles.insert(powered.cycles.end(), part.cycles.begin(),
                          part.cycles.end());
  }
  for (const auto& p : d.paths) {
    auto part = path_power(p, k);
    powered.paths.insert(powered.paths.end(), part.paths.begin(),
                         part.paths.end());
  }
  return recompose(powered, f.ground());
}

}  // namespace simroot
