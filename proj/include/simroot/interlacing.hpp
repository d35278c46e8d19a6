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

#ifndef SIMROOT_INTERLACING_HPP
#define SIMROOT_INTERLACING_HPP

#include <span>
#include <vector>

#include "simroot/decomposition.hpp"
#include "simroot/partitions.hpp"

namespace simroot {

// A k-interlacing of disjoint components is a single path (or cycle) on
// exactly their digits whose k-th power is their product.

/// Lengths of a nonempty set of disjoint paths.
class PathLengthProfile {
 public:
  /// Throws std::invalid_argument when empty or when a length is zero.
  explicit PathLengthProfile(std::vector<unsigned> lengths);
  static PathLengthProfile of(std::span<const PathComponent> paths);

  std::span<const unsigned> lengths() const noexcept { return lengths_; }
  std::size_t size() const noexcept { return lengths_.size(); }

 private:
  std::vector<unsigned> lengths_;
};

/// Number of k-interlacings of paths with the given lengths.
///
/// - all lengths 1 and at most k paths: n!
/// - exactly k paths with lengths in {l, l-1}, m of them long: m!(k-m)!
///   (all equal lengths count as m = 0, giving k!)
/// - otherwise 0
RootCount phi_paths(const PathLengthProfile& profile, unsigned k);

/// Number of k-interlacings of cycles with the given lengths: d cycles of a
/// common length l interlace iff gcd(d l, k) = d, in l^(d-1) (d-1)! ways.
RootCount phi_cycles(std::span<const unsigned> lengths, unsigned k);

/// Every path whose k-th power is the product of `paths`. Ordered
/// lexicographically by the head digits chosen for the long paths, then the
/// short ones.
std::vector<PathComponent> enumerate_path_interlacings(
    std::span<const PathComponent> paths, unsigned k);

/// Every cycle whose k-th power is the product of `cycles`.
std::vector<CycleComponent> enumerate_cycle_interlacings(
    std::span<const CycleComponent> cycles, unsigned k);

}  // namespace simroot

#endif  // SIMROOT_INTERLACING_HPP
