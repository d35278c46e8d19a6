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

#ifndef SIMROOT_PARTITIONS_HPP
#define SIMROOT_PARTITIONS_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace simroot {

using BigInt = boost::multiprecision::cpp_int;

/// Exact number of roots (or interlacings). Never negative.
using RootCount = BigInt;

/// Multiset of positive parts, stored in non-increasing order. The empty
/// partition is the unique partition of zero.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  /// Throws std::invalid_argument on a zero part.
  explicit IntegerPartition(std::vector<unsigned> parts);

  std::span<const unsigned> parts() const noexcept { return parts_; }
  unsigned sum() const noexcept;
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned max_part() const noexcept {
    return parts_.empty() ? 0 : parts_.front();
  }
  std::size_t freq(unsigned a) const noexcept;

  friend bool operator==(const IntegerPartition&,
                         const IntegerPartition&) = default;

 private:
  friend class PartitionStream;
  std::vector<unsigned> parts_;
};

/// prod over distinct parts a of freq(a, lambda)!.
BigInt multiplicity_factorial_product(const IntegerPartition& lambda);

/// Partitions of n with every part <= max_part and at most max_len parts,
/// in reverse-lexicographic order:
///
///   for (PartitionStream s(5, 3); s.next();) use(s.current());
class PartitionStream {
 public:
  static constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

  PartitionStream(unsigned n, unsigned max_part,
                  std::size_t max_len = unbounded);

  bool next();
  const IntegerPartition& current() const noexcept { return current_; }

 private:
  bool first();
  bool fill_from(std::size_t position, unsigned remainder, unsigned bound);

  unsigned n_;
  unsigned max_part_;
  std::size_t max_len_;
  bool started_ = false;
  bool exhausted_ = false;
  IntegerPartition current_;
};

/// Every partition the stream would yield, materialized.
std::vector<IntegerPartition> integer_partitions(
    unsigned n, unsigned max_part,
    std::size_t max_len = PartitionStream::unbounded);

/// Set partitions of {0, ..., n-1} as restricted growth strings: label[0] is
/// 0 and label[i] <= 1 + max(label[0..i-1]). Yields Bell(n) strings.
class SetPartitionStream {
 public:
  static constexpr std::size_t default_cap = 12;

  /// Throws CapExceeded when n > cap.
  explicit SetPartitionStream(std::size_t n, std::size_t cap = default_cap);

  bool next();
  std::span<const std::size_t> labels() const noexcept { return labels_; }
  std::size_t block_count() const noexcept;
  std::vector<std::vector<std::size_t>> blocks() const;

 private:
  std::size_t n_;
  bool started_ = false;
  bool exhausted_ = false;
  std::vector<std::size_t> labels_;
  // prefix_max_[i] = max(labels_[0..i-1]); prefix_max_[0] unused.
  std::vector<std::size_t> prefix_max_;
};

/// Splits `items` by a label string from SetPartitionStream.
template <typename T>
std::vector<std::vector<T>> apply_labels(std::span<const std::size_t> labels,
                                         std::span<const T> items) {
  std::vector<std::vector<T>> blocks;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= blocks.size()) blocks.resize(labels[i] + 1);
    blocks[labels[i]].push_back(items[i]);
  }
  return blocks;
}

BigInt factorial(unsigned n);

/// n! / (p1! p2! ... (n - sum p)!). Throws std::invalid_argument when the
/// parts sum above n.
BigInt multinomial(unsigned n, std::span<const unsigned> parts);

/// 0!, 1!, ..., n! computed once.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned n);
  const BigInt& operator[](unsigned i) const { return values_.at(i); }
  unsigned max() const noexcept {
    return static_cast<unsigned>(values_.size() - 1);
  }

 private:
  std::vector<BigInt> values_;
};

}  // namespace simroot

#endif  // SIMROOT_PARTITIONS_HPP
