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

#include "simroot/interlacing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simroot {

namespace {

bool all_equal(std::span<const unsigned> values) {
  return std::adjacent_find(values.begin(), values.end(),
                            std::not_equal_to<>()) == values.end();
}

template <typename Component>
Decomposition as_decomposition(std::span<const Component> components) {
  Decomposition d;
  if constexpr (std::is_same_v<Component, PathComponent>) {
    d.paths.assign(components.begin(), components.end());
  } else {
    d.cycles.assign(components.begin(), components.end());
  }
  d.canonicalize();
  return d;
}

std::vector<unsigned> cycle_lengths(std::span<const CycleComponent> cycles) {
  std::vector<unsigned> lengths;
  for (const auto& c : cycles) lengths.push_back(static_cast<unsigned>(c.length()));
  return lengths;
}

}  // namespace

PathLengthProfile::PathLengthProfile(std::vector<unsigned> lengths)
    : lengths_(std::move(lengths)) {
  if (lengths_.empty()) {
    throw std::invalid_argument("path length profile must be nonempty");
  }
  if (std::find(lengths_.begin(), lengths_.end(), 0u) != lengths_.end()) {
    throw std::invalid_argument("path lengths must be positive");
  }
}

PathLengthProfile PathLengthProfile::of(std::span<const PathComponent> paths) {
  std::vector<unsigned> lengths;
  for (const auto& p : paths) lengths.push_back(static_cast<unsigned>(p.length()));
  return PathLengthProfile(std::move(lengths));
}

RootCount phi_paths(const PathLengthProfile& profile, unsigned k) {
  const auto lengths = profile.lengths();
  const std::size_t n = lengths.size();
  const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
  if (*hi == 1) return n <= k ? factorial(static_cast<unsigned>(n)) : RootCount(0);
  if (n != k || *hi - *lo > 1) return 0;
  const auto long_count =
      *hi == *lo ? 0u
                 : static_cast<unsigned>(std::count(lengths.begin(), lengths.end(), *hi));
  return factorial(long_count) * factorial(k - long_count);
}

RootCount phi_cycles(std::span<const unsigned> lengths, unsigned k) {
  if (lengths.empty() || !all_equal(lengths)) return 0;
  const std::size_t d = lengths.size();
  const std::size_t length = lengths.front();
  if (std::gcd(d * length, static_cast<std::size_t>(k)) != d) return 0;
  RootCount ways = factorial(static_cast<unsigned>(d - 1));
  for (std::size_t i = 1; i < d; ++i) ways *= length;
  return ways;
}

std::vector<PathComponent> enumerate_path_interlacings(
    std::span<const PathComponent> paths, unsigned k) {
  std::vector<PathComponent> result;
  if (paths.empty()) return result;
  const PathLengthProfile profile = PathLengthProfile::of(paths);
  if (phi_paths(profile, k) == 0) return result;

  const auto lengths = profile.lengths();
  const unsigned longest = *std::max_element(lengths.begin(), lengths.end());

  if (longest == 1) {
    std::vector<Digit> digits;
    for (const auto& p : paths) digits.push_back(p.digits().front());
    std::sort(digits.begin(), digits.end());
    do {
      result.emplace_back(digits);
    } while (std::next_permutation(digits.begin(), digits.end()));
  } else {
    std::vector<const PathComponent*> long_paths;
    std::vector<const PathComponent*> short_paths;
    const bool uniform = all_equal(lengths);
    for (const auto& p : paths) {
      (uniform || p.length() < longest ? short_paths : long_paths).push_back(&p);
    }
    auto by_head = [](const PathComponent* a, const PathComponent* b) {
      return a->digits().front() < b->digits().front();
    };
    std::sort(long_paths.begin(), long_paths.end(), by_head);
    std::sort(short_paths.begin(), short_paths.end(), by_head);

    do {
      do {
        // Round r takes the r-th digit of each path in head order.
        std::vector<const PathComponent*> order(long_paths);
        order.insert(order.end(), short_paths.begin(), short_paths.end());
        std::vector<Digit> digits;
        for (unsigned round = 0; round < longest; ++round) {
          for (const PathComponent* p : order) {
            if (round < p->length()) digits.push_back(p->digits()[round]);
          }
        }
        result.emplace_back(std::move(digits));
      } while (std::next_permutation(short_paths.begin(), short_paths.end(), by_head));
    } while (std::next_permutation(long_paths.begin(), long_paths.end(), by_head));
  }

  const Decomposition target = as_decomposition(paths);
  for (const auto& alpha : result) {
    if (!(path_power(alpha, k) == target)) {
      throw std::logic_error("constructed path is not a k-interlacing");
    }
  }
  return result;
}

std::vector<CycleComponent> enumerate_cycle_interlacings(
    std::span<const CycleComponent> cycles, unsigned k) {
  std::vector<CycleComponent> result;
  if (cycles.empty()) return result;
  const auto lengths = cycle_lengths(cycles);
  if (phi_cycles(lengths, k) == 0) return result;

  std::vector<CycleComponent> sorted(cycles.begin(), cycles.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.min_digit() < b.min_digit();
  });
  const std::size_t d = sorted.size();
  const std::size_t length = lengths.front();
  const std::size_t total = d * length;
  const std::size_t stride = k % total;

  // Residue class j of the k-th power occupies j, j+k, j+2k, ... (mod total).
  std::vector<std::vector<std::size_t>> slots(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t at = j;
    for (std::size_t step = 0; step < length; ++step) {
      slots[j].push_back(at);
      at = (at + stride) % total;
    }
  }

  std::vector<std::size_t> rest(d - 1);
  std::iota(rest.begin(), rest.end(), std::size_t{1});
  std::vector<Digit> beta(total);
  for (std::size_t s = 0; s < length; ++s) beta[slots[0][s]] = sorted[0].digits()[s];
  do {
    std::vector<std::size_t> offset(d - 1, 0);
    for (;;) {
      for (std::size_t j = 1; j < d; ++j) {
        const auto digits = sorted[rest[j - 1]].digits();
        for (std::size_t s = 0; s < length; ++s) {
          beta[slots[j][s]] = digits[(s + offset[j - 1]) % length];
        }
      }
      result.emplace_back(beta);

      std::size_t carry = 0;
      while (carry < offset.size() && ++offset[carry] == length) {
        offset[carry++] = 0;
      }
      if (carry == offset.size()) break;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));

  const Decomposition target = as_decomposition(cycles);
  for (const auto& beta_cycle : result) {
    if (!(cycle_power(beta_cycle, k) == target)) {
      throw std::logic_error("constructed cycle is not a k-interlacing");
    }
  }
  return result;
}

}  // namespace simroot
