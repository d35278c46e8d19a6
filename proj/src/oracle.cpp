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

#include "simroot/oracle.hpp"

#include <optional>
#include <stdexcept>
#include <variant>

#include "simroot/decomposition.hpp"
#include "simroot/error.hpp"
#include "simroot/interlacing.hpp"

namespace simroot {

namespace {

using Index = PartialInjection::Index;
constexpr Index kUndefined = PartialInjection::undefined;

void raw_power(std::span<const Index> images, unsigned k, std::vector<Index>& out) {
  out.resize(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    Index y = static_cast<Index>(x);
    for (unsigned step = 0; step < k && y != kUndefined; ++step) y = images[y];
    out[x] = y;
  }
}

std::uint64_t raw_code(std::span<const Index> images) {
  const std::uint64_t radix = images.size() + 1;
  std::uint64_t key = 0;
  for (Index t : images) key = key * radix + (t == kUndefined ? 0 : t + 1);
  return key;
}

}  // namespace

ElementStream::ElementStream(GroundSet ground, std::size_t cap)
    : ground_(std::move(ground)),
      images_(ground_.size(), kUndefined),
      used_(ground_.size(), false) {
  if (ground_.size() > cap) {
    throw CapExceeded("exhaustive enumeration", ground_.size(), cap);
  }
}

bool ElementStream::next() {
  if (exhausted_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  const std::size_t n = images_.size();
  for (std::size_t i = n; i-- > 0;) {
    std::size_t candidate = 0;
    if (images_[i] != kUndefined) {
      used_[images_[i]] = false;
      candidate = images_[i] + 1;
    }
    while (candidate < n && used_[candidate]) ++candidate;
    if (candidate < n) {
      images_[i] = static_cast<Index>(candidate);
      used_[candidate] = true;
      return true;  // positions after i are already undefined
    }
    images_[i] = kUndefined;
  }
  exhausted_ = true;
  return false;
}

PartialInjection ElementStream::current() const {
  return PartialInjection::from_images(ground_, images_);
}

std::vector<PartialInjection> enumerate_all(const GroundSet& ground, std::size_t cap) {
  std::vector<PartialInjection> all;
  for (ElementStream s(ground, cap); s.next();) all.push_back(s.current());
  return all;
}

RootCount brute_force_count(const PartialInjection& f, unsigned k, std::size_t cap) {
  if (k == 0) throw KInvalid("k must be at least 1");
  const auto target = f.images();
  std::vector<Index> powered;
  std::uint64_t count = 0;
  for (ElementStream s(f.ground(), cap); s.next();) {
    raw_power(s.images(), k, powered);
    if (std::equal(powered.begin(), powered.end(), target.begin(), target.end())) {
      ++count;
    }
  }
  return count;
}

std::unordered_map<std::uint64_t, std::uint64_t> brute_force_root_table(
    const GroundSet& ground, unsigned k, std::size_t cap) {
  if (k == 0) throw KInvalid("k must be at least 1");
  std::unordered_map<std::uint64_t, std::uint64_t> table;
  std::vector<Index> powered;
  for (ElementStream s(ground, cap); s.next();) {
    raw_power(s.images(), k, powered);
    ++table[raw_code(powered)];
  }
  return table;
}

void for_each_root(const PartialInjection& f, unsigned k,
                   const std::function<bool(const PartialInjection&)>& visit,
                   std::size_t cap) {
  if (k == 0) throw KInvalid("k must be at least 1");
  const Decomposition d = decompose(f);
  const std::size_t n = d.component_count();
  const std::size_t cycle_count = d.cycles.size();
  SetPartitionStream stream(n, cap);

  using Choices = std::variant<std::vector<CycleComponent>, std::vector<PathComponent>>;
  std::vector<std::optional<Choices>> cache(std::size_t{1} << n);
  auto interlacings = [&](std::size_t mask) -> const Choices& {
    auto& slot = cache[mask];
    if (slot) return *slot;
    std::vector<CycleComponent> cycles;
    std::vector<PathComponent> paths;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      if (i < cycle_count) {
        cycles.push_back(d.cycles[i]);
      } else {
        paths.push_back(d.paths[i - cycle_count]);
      }
    }
    if (!cycles.empty() && !paths.empty()) {
      slot.emplace(std::vector<PathComponent>{});
    } else if (!cycles.empty()) {
      slot.emplace(enumerate_cycle_interlacings(cycles, k));
    } else {
      slot.emplace(enumerate_path_interlacings(paths, k));
    }
    return *slot;
  };
  auto choice_count = [](const Choices& c) {
    return std::visit([](const auto& v) { return v.size(); }, c);
  };

  std::vector<std::size_t> masks;
  std::vector<const Choices*> groups;
  while (stream.next()) {
    masks.assign(stream.block_count(), 0);
    const auto labels = stream.labels();
    for (std::size_t i = 0; i < n; ++i) masks[labels[i]] |= std::size_t{1} << i;

    groups.clear();
    bool feasible = true;
    for (std::size_t mask : masks) {
      const Choices& c = interlacings(mask);
      if (choice_count(c) == 0) {
        feasible = false;
        break;
      }
      groups.push_back(&c);
    }
    if (!feasible) continue;

    std::vector<std::size_t> pick(groups.size(), 0);
    for (;;) {
      Decomposition root;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        std::visit(
            [&](const auto& options) {
              using T = typename std::decay_t<decltype(options)>::value_type;
              if constexpr (std::is_same_v<T, CycleComponent>) {
                root.cycles.push_back(options[pick[g]]);
              } else {
                root.paths.push_back(options[pick[g]]);
              }
            },
            *groups[g]);
      }
      PartialInjection alpha = recompose(root, f.ground());
      if (!(power(alpha, k) == f)) {
        throw std::logic_error("enumerated element is not a k-th root");
      }
      if (!visit(alpha)) return;

      // Last group varies fastest.
      std::size_t g = groups.size();
      while (g-- > 0) {
        if (++pick[g] < choice_count(*groups[g])) break;
        pick[g] = 0;
      }
      if (g == static_cast<std::size_t>(-1)) break;
    }
  }
}

std::vector<PartialInjection> enumerate_roots(const PartialInjection& f, unsigned k,
                                              std::size_t cap) {
  std::vector<PartialInjection> roots;
  for_each_root(
      f, k,
      [&](const PartialInjection& alpha) {
        roots.push_back(alpha);
        return true;
      },
      cap);
  return roots;
}

}  // namespace simroot
