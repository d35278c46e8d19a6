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

#include "simroot/root_count.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "simroot/decomposition.hpp"
#include "simroot/error.hpp"
#include "simroot/interlacing.hpp"

namespace simroot {

namespace {

void require_k(unsigned k) {
  if (k == 0) throw KInvalid("k must be at least 1");
}

// Sum over partition chains lambda_1, ..., lambda_m of a block; see
// count_roots_chain and count_roots_chain_to_points.
class ChainSum {
 public:
  ChainSum(const BlockProfile& block, unsigned k, bool points_last)
      : block_(block),
        k_(k),
        points_last_(points_last),
        factorials_(block.path_count()) {
    numerator_ = 1;
    for (unsigned n : block.multiplicities) numerator_ *= factorials_[n];
  }

  RootCount run() {
    visit(0, block_.multiplicities.front(), BigInt(1));
    return total_;
  }

 private:
  void visit(std::size_t i, unsigned available, const BigInt& denominator) {
    if (i + 1 == block_.class_count()) {
      if (points_last_) {
        for (PartitionStream s(available, k_); s.next();) {
          total_ += numerator_ /
                    (denominator * multiplicity_factorial_product(s.current()));
        }
      } else if (available % k_ == 0) {
        total_ += numerator_ / (denominator * factorials_[available / k_]);
      }
      return;
    }
    const unsigned next = block_.multiplicities[i + 1];
    const std::size_t max_len = (next + available) / k_;
    for (PartitionStream s(available, k_, max_len); s.next();) {
      const auto& lambda = s.current();
      const unsigned remaining =
          available + next - k_ * static_cast<unsigned>(lambda.length());
      visit(i + 1, remaining,
            denominator * multiplicity_factorial_product(lambda));
    }
  }

  const BlockProfile& block_;
  unsigned k_;
  bool points_last_;
  FactorialTable factorials_;
  BigInt numerator_;
  BigInt total_ = 0;
};

}  // namespace

bool BlockProfile::valid() const noexcept {
  if (multiplicities.empty() || top_length < multiplicities.size()) return false;
  return std::find(multiplicities.begin(), multiplicities.end(), 0u) ==
         multiplicities.end();
}

unsigned BlockProfile::min_length() const noexcept {
  return top_length + 1 - static_cast<unsigned>(multiplicities.size());
}

unsigned BlockProfile::path_count() const noexcept {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0u);
}

std::vector<unsigned> BlockProfile::lengths() const {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    out.insert(out.end(), multiplicities[i], top_length - static_cast<unsigned>(i));
  }
  return out;
}

std::vector<BlockProfile> split_into_blocks(std::span<const unsigned> path_lengths) {
  std::vector<unsigned> sorted(path_lengths.begin(), path_lengths.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<BlockProfile> blocks;
  for (std::size_t i = 0; i < sorted.size();) {
    const unsigned length = sorted[i];
    if (length == 0) throw std::invalid_argument("path lengths must be positive");
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == length) ++j;
    const auto count = static_cast<unsigned>(j - i);
    if (!blocks.empty() && blocks.back().min_length() == length + 1) {
      blocks.back().multiplicities.push_back(count);
    } else {
      blocks.push_back(BlockProfile{length, {count}});
    }
    i = j;
  }
  return blocks;
}

RootCount count_kth_roots(const PartialInjection& f, unsigned k) {
  require_k(k);
  const Decomposition d = decompose(f);
  std::vector<unsigned> cycle_lengths;
  std::vector<unsigned> path_lengths;
  for (const auto& c : d.cycles) cycle_lengths.push_back(static_cast<unsigned>(c.length()));
  for (const auto& p : d.paths) path_lengths.push_back(static_cast<unsigned>(p.length()));

  RootCount cycles = count_roots_cycle_part(cycle_lengths, k);
  if (cycles == 0) return 0;
  return cycles * count_roots_path_part(path_lengths, k);
}

RootCount count_roots_path_part(std::span<const unsigned> path_lengths, unsigned k) {
  require_k(k);
  RootCount product = 1;
  for (const auto& block : split_into_blocks(path_lengths)) {
    product *= count_roots_path_block(block, k);
    if (product == 0) break;
  }
  return product;
}

RootCount count_roots_path_block(const BlockProfile& block, unsigned k) {
  require_k(k);
  if (!block.valid()) return 0;
  if (block.class_count() == 1) {
    const unsigned n = block.multiplicities.front();
    return block.top_length > 1 ? count_roots_equal_length(n, block.top_length, k)
                                : count_roots_singletons(n, k);
  }
  return block.min_length() >= 2 ? count_roots_chain(block, k)
                                 : count_roots_chain_to_points(block, k);
}

RootCount count_roots_equal_length(unsigned n, unsigned length, unsigned k) {
  require_k(k);
  if (length < 2) throw std::invalid_argument("equal-length form needs length >= 2");
  if (n % k != 0) return 0;
  BigInt result = 1;
  for (unsigned i = n / k + 1; i <= n; ++i) result *= i;
  return result;
}

RootCount count_roots_singletons(unsigned n, unsigned k) {
  require_k(k);
  const BigInt n_factorial = factorial(n);
  RootCount total = 0;
  for (PartitionStream s(n, k); s.next();) {
    total += n_factorial / multiplicity_factorial_product(s.current());
  }
  return total;
}

RootCount count_roots_two_lengths(unsigned n1, unsigned n2, unsigned k) {
  require_k(k);
  const unsigned n = n1 + n2;
  if (n % k != 0) return 0;
  const unsigned groups = n / k;
  const FactorialTable fact(n);
  const BigInt numerator = fact[n1] * fact[n2];
  RootCount total = 0;
  for (PartitionStream s(n1, k, groups); s.next();) {
    const auto& lambda = s.current();
    total += numerator / (fact[groups - static_cast<unsigned>(lambda.length())] *
                          multiplicity_factorial_product(lambda));
  }
  return total;
}

RootCount count_roots_chain(const BlockProfile& block, unsigned k) {
  require_k(k);
  if (!block.valid()) return 0;
  if (block.path_count() % k != 0) return 0;
  return ChainSum(block, k, false).run();
}

RootCount count_roots_chain_to_points(const BlockProfile& block, unsigned k) {
  require_k(k);
  if (!block.valid()) return 0;
  return ChainSum(block, k, true).run();
}

RootCount count_roots_cycle_part(std::span<const unsigned> cycle_lengths, unsigned k) {
  require_k(k);
  std::map<unsigned, unsigned> classes;
  for (unsigned length : cycle_lengths) ++classes[length];

  RootCount product = 1;
  for (const auto [length, count] : classes) {
    // Group sizes a that can fuse into one cycle, largest first.
    std::vector<unsigned> sizes;
    for (unsigned a = count; a >= 1; --a) {
      if (std::gcd(static_cast<std::size_t>(a) * length, static_cast<std::size_t>(k)) == a) {
        sizes.push_back(a);
      }
    }
    const FactorialTable fact(count);
    std::vector<BigInt> weight(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      weight[i] = fact[sizes[i] - 1];
      for (unsigned e = 1; e < sizes[i]; ++e) weight[i] *= length;
    }

    RootCount sum = 0;
    std::function<void(std::size_t, unsigned, const BigInt&, const BigInt&)> choose =
        [&](std::size_t i, unsigned left, const BigInt& num, const BigInt& den) {
          if (left == 0) {
            sum += num / den;
            return;
          }
          if (i == sizes.size()) return;
          const unsigned a = sizes[i];
          BigInt n = num;
          BigInt d = den;
          for (unsigned t = 0; t * a <= left; ++t) {
            if (t > 0) {
              n *= weight[i];
              d *= fact[a] * t;
            }
            choose(i + 1, left - t * a, n, d);
          }
        };
    choose(0, count, fact[count], BigInt(1));
    product *= sum;
    if (product == 0) break;
  }
  return product;
}

RootCount count_roots_generic(const PartialInjection& f, unsigned k, std::size_t cap) {
  require_k(k);
  const Decomposition d = decompose(f);
  const std::size_t n = d.component_count();
  SetPartitionStream stream(n, cap);

  // Component i < cycles.size() is a cycle, the rest are paths.
  const std::size_t cycle_count = d.cycles.size();
  std::vector<RootCount> phi(std::size_t{1} << n, 0);
  for (std::size_t mask = 1; mask < phi.size(); ++mask) {
    std::vector<unsigned> cycle_lengths;
    std::vector<unsigned> path_lengths;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      if (i < cycle_count) {
        cycle_lengths.push_back(static_cast<unsigned>(d.cycles[i].length()));
      } else {
        path_lengths.push_back(static_cast<unsigned>(d.paths[i - cycle_count].length()));
      }
    }
    if (!cycle_lengths.empty() && !path_lengths.empty()) continue;
    phi[mask] = cycle_lengths.empty() ? phi_paths(PathLengthProfile(path_lengths), k)
                                      : phi_cycles(cycle_lengths, k);
  }

  RootCount total = 0;
  std::vector<std::size_t> masks;
  while (stream.next()) {
    masks.assign(stream.block_count(), 0);
    const auto labels = stream.labels();
    for (std::size_t i = 0; i < n; ++i) masks[labels[i]] |= std::size_t{1} << i;
    RootCount term = 1;
    for (std::size_t mask : masks) {
      if (phi[mask] == 0) {
        term = 0;
        break;
      }
      term *= phi[mask];
    }
    total += term;
  }
  return total;
}

}  // namespace simroot
