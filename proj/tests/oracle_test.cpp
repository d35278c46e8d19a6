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

#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "simroot/error.hpp"
#include "simroot/notation.hpp"
#include "simroot/root_count.hpp"

using namespace simroot;

namespace {

std::uint64_t sim_size(unsigned n) {
  // sum_j C(n,j)^2 j!
  std::uint64_t total = 0;
  for (unsigned j = 0; j <= n; ++j) {
    std::uint64_t binom = 1;
    for (unsigned i = 0; i < j; ++i) binom = binom * (n - i) / (i + 1);
    std::uint64_t fact = 1;
    for (unsigned i = 2; i <= j; ++i) fact *= i;
    total += binom * binom * fact;
  }
  return total;
}

}  // namespace

TEST(ElementStreamTest, SizesAndDistinctness) {
  EXPECT_EQ(enumerate_all(GroundSet{}).size(), 1u);
  EXPECT_EQ(enumerate_all(GroundSet::range(1)).size(), 2u);
  EXPECT_EQ(enumerate_all(GroundSet::range(2)).size(), 7u);
  for (unsigned n = 0; n <= 7; ++n) {
    std::unordered_set<PartialInjection> seen;
    std::uint64_t count = 0;
    for (ElementStream s(GroundSet::range(n)); s.next();) {
      seen.insert(s.current());
      ++count;
    }
    EXPECT_EQ(count, sim_size(n)) << n;
    EXPECT_EQ(seen.size(), count);
  }
  EXPECT_THROW(ElementStream(GroundSet::range(9)), CapExceeded);
}

TEST(BruteForceTest, Examples) {
  EXPECT_EQ(brute_force_count(PartialInjection(GroundSet::range(2)), 2), 3);
  EXPECT_EQ(brute_force_count(parse("[1 2 3 4][5]"), 2), 0);
  EXPECT_EQ(brute_force_count(parse("(1 2)(3 4)"), 2), 2);
  EXPECT_THROW(brute_force_count(PartialInjection(GroundSet::range(9)), 2), CapExceeded);
}

TEST(BruteForceTest, RootTableAgreesWithPerElementCounts) {
  const GroundSet ground = GroundSet::range(4);
  for (unsigned k = 1; k <= 4; ++k) {
    const auto table = brute_force_root_table(ground, k);
    std::uint64_t total = 0;
    for (const auto& f : enumerate_all(ground)) {
      const auto it = table.find(f.code());
      const std::uint64_t expected = it == table.end() ? 0 : it->second;
      total += expected;
      ASSERT_EQ(brute_force_count(f, k), expected);
    }
    EXPECT_EQ(total, sim_size(4));
  }
}

TEST(EnumerateRootsTest, Examples) {
  const auto sigma = parse("[1 2 3][4 5 6][7 8]");
  const auto roots = enumerate_roots(sigma, 3);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(format(roots[0]), "[1 4 7 2 5 8 3 6]");

  EXPECT_EQ(enumerate_roots(PartialInjection(GroundSet::range(3)), 3).size(), 13u);

  const auto f = parse("(2)(3 4)[1 5]");
  const auto first = enumerate_roots(f, 1);
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0], f);
}

TEST(EnumerateRootsTest, StopsWhenAsked) {
  int seen = 0;
  for_each_root(PartialInjection(GroundSet::range(5)), 3, [&](const PartialInjection&) {
    return ++seen < 4;
  });
  EXPECT_EQ(seen, 4);
}

TEST(EnumerateRootsTest, ExhaustiveAgreementUpTo5Points) {
  for (unsigned n = 0; n <= 5; ++n) {
    const GroundSet ground = GroundSet::range(n);
    for (unsigned k = 1; k <= 8; ++k) {
      const auto table = brute_force_root_table(ground, k);
      for (const auto& f : enumerate_all(ground)) {
        const auto roots = enumerate_roots(f, k);
        const std::unordered_set<PartialInjection> unique(roots.begin(), roots.end());
        ASSERT_EQ(unique.size(), roots.size()) << f;
        const auto it = table.find(f.code());
        ASSERT_EQ(roots.size(), it == table.end() ? 0 : it->second) << f << " k=" << k;
        for (const auto& alpha : roots) ASSERT_EQ(power(alpha, k), f);
      }
    }
  }
}

TEST(EnumerateRootsTest, RandomSamplesOn6And7Points) {
  std::mt19937 rng(99);
  for (unsigned n : {6u, 7u}) {
    const auto all = enumerate_all(GroundSet::range(n));
    for (int trial = 0; trial < 15; ++trial) {
      // Squares and cubes of random elements always have roots.
      const unsigned k = 2 + rng() % 3;
      const auto& base = all[rng() % all.size()];
      for (const auto& f : {base, power(base, k)}) {
        const auto roots = enumerate_roots(f, k);
        const std::unordered_set<PartialInjection> unique(roots.begin(), roots.end());
        ASSERT_EQ(unique.size(), roots.size());
        ASSERT_EQ(roots.size(), count_kth_roots(f, k)) << f << " k=" << k;
        ASSERT_EQ(brute_force_count(f, k), roots.size()) << f << " k=" << k;
      }
    }
  }
}
