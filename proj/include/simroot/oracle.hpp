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

#ifndef SIMROOT_ORACLE_HPP
#define SIMROOT_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "simroot/partial_injection.hpp"
#include "simroot/partitions.hpp"

namespace simroot {

// Ground truth by exhaustion. Nothing here uses the counting formulas.

inline constexpr std::size_t kOracleGroundCap = 8;

/// Every partial injection on a ground set, each exactly once. The empty map
/// comes first; position i steps through undefined, 0, 1, ..., n-1.
class ElementStream {
 public:
  /// Throws CapExceeded when |ground| > cap.
  explicit ElementStream(GroundSet ground, std::size_t cap = kOracleGroundCap);

  bool next();
  /// Image table of the current element (see PartialInjection).
  std::span<const PartialInjection::Index> images() const noexcept { return images_; }
  PartialInjection current() const;

 private:
  GroundSet ground_;
  std::vector<PartialInjection::Index> images_;
  std::vector<bool> used_;
  bool started_ = false;
  bool exhausted_ = false;
};

/// Materializes the stream; sized sum_j C(n,j)^2 j!.
std::vector<PartialInjection> enumerate_all(const GroundSet& ground,
                                            std::size_t cap = kOracleGroundCap);

/// Number of a on f's ground with a^k = f, by testing every candidate.
RootCount brute_force_count(const PartialInjection& f, unsigned k,
                            std::size_t cap = kOracleGroundCap);

/// For every element f of SIM(ground), the number of its k-th roots, in one
/// pass over the candidates. Keyed by PartialInjection::code(); elements
/// without roots are absent.
std::unordered_map<std::uint64_t, std::uint64_t> brute_force_root_table(
    const GroundSet& ground, unsigned k, std::size_t cap = kOracleGroundCap);

/// Streams every k-th root of f: for each set partition of f's components
/// into groups with nonzero interlacing counts, every choice of one
/// interlacing per group. Stops early when `visit` returns false. Each root
/// is checked against f before it is emitted. Throws CapExceeded above
/// `cap` components.
void for_each_root(const PartialInjection& f, unsigned k,
                   const std::function<bool(const PartialInjection&)>& visit,
                   std::size_t cap = SetPartitionStream::default_cap);

std::vector<PartialInjection> enumerate_roots(
    const PartialInjection& f, unsigned k,
    std::size_t cap = SetPartitionStream::default_cap);

}  // namespace simroot

#endif  // SIMROOT_ORACLE_HPP
