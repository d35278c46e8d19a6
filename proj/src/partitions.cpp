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

#include "simroot/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "simroot/error.hpp"

namespace simroot {

IntegerPartition::IntegerPartition(std::vector<unsigned> parts)
    : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end()) {
    throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned IntegerPartition::sum() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::size_t IntegerPartition::freq(unsigned a) const noexcept {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), a));
}

BigInt multiplicity_factorial_product(const IntegerPartition& lambda) {
  BigInt product = 1;
  const auto parts = lambda.parts();
  std::size_t run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
    product *= run;
  }
  return product;
}

PartitionStream::PartitionStream(unsigned n, unsigned max_part,
                                 std::size_t max_len)
    : n_(n), max_part_(max_part), max_len_(max_len) {}

bool PartitionStream::fill_from(std::size_t position, unsigned remainder,
                                unsigned bound) {
  auto& parts = current_.parts_;
  parts.resize(position);
  if (remainder == 0) return true;
  if (bound == 0) return false;
  const std::size_t needed = (remainder + bound - 1) / bound;
  if (max_len_ != unbounded &&
      (position > max_len_ || needed > max_len_ - position)) {
    return false;
  }
  while (remainder > 0) {
    const unsigned part = std::min(bound, remainder);
    parts.push_back(part);
    remainder -= part;
  }
  return true;
}

bool PartitionStream::first() { return fill_from(0, n_, max_part_); }

bool PartitionStream::next() {
  if (exhausted_) return false;
  if (!started_) {
    started_ = true;
    exhausted_ = !first();
    return !exhausted_;
  }
  auto& parts = current_.parts_;
  unsigned suffix = 0;
  for (std::size_t i = parts.size(); i-- > 0;) {
    suffix += parts[i];
    const unsigned lowered = parts[i] - 1;
    if (lowered == 0) continue;
    parts[i] = lowered;
    if (fill_from(i + 1, suffix - lowered, lowered)) return true;
    parts.resize(i + 1);
    parts[i] = lowered + 1;
  }
  exhausted_ = true;
  return false;
}

std::vector<IntegerPartition> integer_partitions(unsigned n, unsigned max_part,
                                                 std::size_t max_len) {
  std::vector<IntegerPartition> all;
  for (PartitionStream s(n, max_part, max_len); s.next();) {
    all.push_back(s.current());
  }
  return all;
}

SetPartitionStream::SetPartitionStream(std::size_t n, std::size_t cap) : n_(n) {
  if (n > cap) throw CapExceeded("set partition enumeration", n, cap);
}

bool SetPartitionStream::next() {
  if (exhausted_) return false;
  if (!started_) {
    started_ = true;
    labels_.assign(n_, 0);
    prefix_max_.assign(n_, 0);
    return true;
  }
  for (std::size_t i = n_; i-- > 1;) {
    if (labels_[i] <= prefix_max_[i]) {
      ++labels_[i];
      for (std::size_t j = i + 1; j < n_; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = std::max(prefix_max_[j - 1], labels_[j - 1]);
      }
      return true;
    }
  }
  exhausted_ = true;
  return false;
}

std::size_t SetPartitionStream::block_count() const noexcept {
  if (labels_.empty()) return 0;
  return 1 + *std::max_element(labels_.begin(), labels_.end());
}

std::vector<std::vector<std::size_t>> SetPartitionStream::blocks() const {
  std::vector<std::size_t> items(n_);
  std::iota(items.begin(), items.end(), std::size_t{0});
  return apply_labels<std::size_t>(labels_, items);
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt multinomial(unsigned n, std::span<const unsigned> parts) {
  unsigned used = 0;
  for (unsigned p : parts) used += p;
  if (used > n) throw std::invalid_argument("multinomial parts exceed n");
  BigInt denominator = factorial(n - used);
  for (unsigned p : parts) denominator *= factorial(p);
  return factorial(n) / denominator;
}

FactorialTable::FactorialTable(unsigned n) : values_(n + 1) {
  values_[0] = 1;
  for (unsigned i = 1; i <= n; ++i) values_[i] = values_[i - 1] * i;
}

}  // namespace simroot
