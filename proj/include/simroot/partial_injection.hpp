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

#ifndef SIMROOT_PARTIAL_INJECTION_HPP
#define SIMROOT_PARTIAL_INJECTION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace simroot {

/// A point of the ground set. Always >= 1.
using Digit = std::uint32_t;

/// Finite sorted set of positive digits an element lives on.
class GroundSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  GroundSet() = default;

  /// Sorts and deduplicates; throws GroundError on a zero digit.
  explicit GroundSet(std::vector<Digit> digits);

  /// {1, ..., n}.
  static GroundSet range(Digit n);

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  std::span<const Digit> digits() const noexcept { return digits_; }
  Digit operator[](std::size_t index) const { return digits_[index]; }

  /// Position of `d`, or npos.
  std::size_t index_of(Digit d) const noexcept;
  bool contains(Digit d) const noexcept { return index_of(d) != npos; }

  GroundSet united(const GroundSet& other) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<Digit> digits_;
};

/// A partial one-to-one map on a ground set.
///
/// Stored densely: entry i holds the ground position that ground[i] maps to,
/// or `undefined`. Values are immutable once constructed.
class PartialInjection {
 public:
  using Index = std::uint32_t;
  static constexpr Index undefined = static_cast<Index>(-1);

  PartialInjection() = default;

  /// The empty map on `ground`.
  explicit PartialInjection(GroundSet ground);

  /// Builds from (source, target) pairs. Throws GroundError when a digit is
  /// not in `ground` and OverlapError when sources or targets repeat.
  PartialInjection(GroundSet ground,
                   std::span<const std::pair<Digit, Digit>> graph);

  /// Builds from positional images (see class comment).
  static PartialInjection from_images(GroundSet ground,
                                      std::vector<Index> images);

  const GroundSet& ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return images_.size(); }
  std::span<const Index> images() const noexcept { return images_; }

  std::optional<Digit> operator()(Digit d) const;

  /// Number of points where the map is defined.
  std::size_t rank() const noexcept;

  std::vector<std::pair<Digit, Digit>> graph() const;

  /// Mixed-radix key over (undefined, 0..n-1); injective for a fixed ground
  /// of at most 15 digits.
  std::uint64_t code() const noexcept;

  friend bool operator==(const PartialInjection&,
                         const PartialInjection&) = default;

 private:
  PartialInjection(GroundSet ground, std::vector<Index> images, bool);

  GroundSet ground_;
  std::vector<Index> images_;
};

/// Diagrammatic product: the result maps x to g(f(x)). Throws GroundMismatch.
PartialInjection compose(const PartialInjection& f, const PartialInjection& g);

/// k-fold self-composition. Throws KInvalid for k == 0.
PartialInjection power(const PartialInjection& f, unsigned k);

/// The unique b with f = f b f and b = b f b.
PartialInjection inverse(const PartialInjection& f);

bool is_idempotent(const PartialInjection& f);

}  // namespace simroot

template <>
struct std::hash<simroot::PartialInjection> {
  std::size_t operator()(const simroot::PartialInjection& f) const noexcept;
};

#endif  // SIMROOT_PARTIAL_INJECTION_HPP
