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

#ifndef SIMROOT_DECOMPOSITION_HPP
#define SIMROOT_DECOMPOSITION_HPP

#include <cstddef>
#include <vector>

#include "simroot/partial_injection.hpp"

namespace simroot {

/// [a1 a2 ... al]: maps each digit to the next, the last one to nothing.
/// A single digit [a] is an isolated point of the ground set.
class PathComponent {
 public:
  /// Throws std::invalid_argument when empty or when a digit repeats.
  explicit PathComponent(std::vector<Digit> digits);

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t length() const noexcept { return digits_.size(); }
  Digit min_digit() const noexcept;

  friend bool operator==(const PathComponent&, const PathComponent&) = default;

 private:
  std::vector<Digit> digits_;
};

/// (a1 a2 ... al): cyclic permutation of its digits, stored rotated so the
/// smallest digit comes first.
class CycleComponent {
 public:
  explicit CycleComponent(std::vector<Digit> digits);

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t length() const noexcept { return digits_.size(); }
  Digit min_digit() const noexcept { return digits_.front(); }

  friend bool operator==(const CycleComponent&,
                         const CycleComponent&) = default;

 private:
  std::vector<Digit> digits_;
};

/// Disjoint paths and cycles. `canonicalize()` sorts each kind by minimum
/// digit; operations in this library always return canonical values.
struct Decomposition {
  std::vector<CycleComponent> cycles;
  std::vector<PathComponent> paths;

  void canonicalize();
  std::size_t component_count() const noexcept {
    return cycles.size() + paths.size();
  }
  /// All digits, ascending. Does not check disjointness.
  std::vector<Digit> digits() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Orbit decomposition. recompose(decompose(f), f.ground()) == f.
Decomposition decompose(const PartialInjection& f);

/// Union of component graphs on `ground`. Throws OverlapError when two
/// components share a digit and GroundError when a digit is not in `ground`.
PartialInjection recompose(const Decomposition& d, const GroundSet& ground);

/// Stride-k split: min(k, length) paths, the i-th one reading
/// a_i, a_{i+k}, a_{i+2k}, ...
Decomposition path_power(const PathComponent& p, unsigned k);

/// gcd(length, k) cycles of length length / gcd, by stride-k traversal.
Decomposition cycle_power(const CycleComponent& c, unsigned k);

/// Componentwise power, recomposed. Agrees with power(f, k).
PartialInjection power_by_components(const PartialInjection& f, unsigned k);

}  // namespace simroot

#endif  // SIMROOT_DECOMPOSITION_HPP
