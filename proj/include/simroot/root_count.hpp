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

#ifndef SIMROOT_ROOT_COUNT_HPP
#define SIMROOT_ROOT_COUNT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "simroot/partial_injection.hpp"
#include "simroot/partitions.hpp"

namespace simroot {

/// Paths of weakly varying length: multiplicities[i] paths of length
/// top_length - i, for i = 0..m-1.
struct BlockProfile {
  unsigned top_length = 0;
  std::vector<unsigned> multiplicities;

  /// top_length >= m >= 1 and every multiplicity >= 1.
  bool valid() const noexcept;
  std::size_t class_count() const noexcept { return multiplicities.size(); }
  unsigned min_length() const noexcept;
  unsigned path_count() const noexcept;
  /// One entry per path, longest first.
  std::vector<unsigned> lengths() const;

  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
};

/// Groups path lengths into maximal blocks (consecutive distinct lengths
/// differ by 1 inside a block, by at least 2 between blocks). Longest block
/// first.
std::vector<BlockProfile> split_into_blocks(std::span<const unsigned> path_lengths);

/// r_k(f), the exact number of partial injections a on f's ground with
/// a^k = f. Throws KInvalid for k == 0.
RootCount count_kth_roots(const PartialInjection& f, unsigned k);

/// Roots of a cycle-free element with the given path lengths (isolated
/// points count as length-1 paths): the product over blocks.
RootCount count_roots_path_part(std::span<const unsigned> path_lengths, unsigned k);

/// Roots of a single block. Closed forms for one length class, partition
/// chain sums otherwise. Invalid profiles count 0.
RootCount count_roots_path_block(const BlockProfile& block, unsigned k);

/// n paths of one common length >= 2: n!/(n/k)! when k | n, else 0.
/// Throws std::invalid_argument when length < 2.
RootCount count_roots_equal_length(unsigned n, unsigned length, unsigned k);

/// n isolated points: sum over lambda |- n, max lambda <= k, of
/// n! / prod freq(a, lambda)!.
RootCount count_roots_singletons(unsigned n, unsigned k);

/// n1 paths of length l and n2 of length l-1, with l-1 >= 2: sum over
/// lambda |- n1, max lambda <= k, len(lambda) <= n/k, of
/// n1! n2! / ((n/k - len(lambda))! prod freq!). Zero unless k | n1 + n2.
RootCount count_roots_two_lengths(unsigned n1, unsigned n2, unsigned k);

/// Partition chain sum for a block whose shortest paths have length >= 2.
///
/// lambda_1 |- n_1 splits the longest class among the interlacing groups it
/// enters (part a: a long paths plus k - a of the next class). Whatever is
/// left of class i + 1 is split by lambda_{i+1}, and the remainder of the
/// last class must form groups of exactly k.
RootCount count_roots_chain(const BlockProfile& block, unsigned k);

/// Partition chain sum for a block that reaches down to isolated points; the
/// last partition splits the remaining points into groups of at most k.
RootCount count_roots_chain_to_points(const BlockProfile& block, unsigned k);

/// Roots inside the symmetric group on the cycles' digits: product over
/// distinct lengths l (c_l cycles each) of the sum over partitions of c_l
/// into parts a with gcd(a l, k) = a of the set-partition count times
/// prod l^(a-1) (a-1)!.
RootCount count_roots_cycle_part(std::span<const unsigned> cycle_lengths, unsigned k);

/// Direct sum over all set partitions of the components of f of the product
/// of per-group interlacing counts. Exponential; throws CapExceeded above
/// `cap` components.
RootCount count_roots_generic(const PartialInjection& f, unsigned k,
                              std::size_t cap = SetPartitionStream::default_cap);

}  // namespace simroot

#endif  // SIMROOT_ROOT_COUNT_HPP
