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

#include "simroot/decomposition.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "simroot/error.hpp"
#include "simroot/notation.hpp"
#include "simroot/oracle.hpp"

using namespace simroot;

TEST(PathPowerTest, StrideSplit) {
  EXPECT_EQ(format(path_power(PathComponent({1, 2, 3, 4, 5, 6, 7, 8}), 3)),
            "[1 4 7][2 5 8][3 6]");
  EXPECT_EQ(format(path_power(PathComponent({1, 2, 3, 4}), 2)), "[1 3][2 4]");
  EXPECT_EQ(format(path_power(PathComponent({1}), 5)), "[1]");
}

TEST(PathPowerTest, ProducesMinOfKAndLengthPaths) {
  for (unsigned length = 1; length <= 9; ++length) {
    std::vector<Digit> digits(length);
    std::iota(digits.begin(), digits.end(), 1u);
    for (unsigned k = 1; k <= 11; ++k) {
      const auto d = path_power(PathComponent(digits), k);
      ASSERT_EQ(d.paths.size(), std::min(length, k));
      const unsigned q = length % k;
      const unsigned p = length / k;
      std::size_t longer = 0;
      for (const auto& path : d.paths) {
        ASSERT_TRUE(path.length() == p || path.length() == p + 1);
        longer += path.length() == p + 1;
      }
      EXPECT_EQ(longer, q);
    }
  }
}

TEST(CyclePowerTest, Examples) {
  EXPECT_EQ(format(cycle_power(CycleComponent({1, 2, 3, 4, 5, 6}), 4)),
            "(1 5 3)(2 6 4)");
  EXPECT_EQ(format(cycle_power(CycleComponent({3, 1, 2}), 1)), "(1 2 3)");
  EXPECT_EQ(format(cycle_power(CycleComponent({1, 2, 3}), 3)), "(1)(2)(3)");
}

TEST(CycleComponentTest, RotatesMinimumFirst) {
  CycleComponent c({4, 2, 7});
  EXPECT_EQ(c.digits()[0], 2u);
  EXPECT_EQ(c.digits()[1], 7u);
  EXPECT_THROW(CycleComponent({1, 1}), std::invalid_argument);
  EXPECT_THROW(PathComponent({}), std::invalid_argument);
}

TEST(DecomposeTest, Examples) {
  const PartialInjection intro(GroundSet::range(4),
                               std::vector<std::pair<Digit, Digit>>{{2, 2}, {3, 4}, {4, 3}});
  EXPECT_EQ(format(decompose(intro)), "(2)(3 4)[1]");
  EXPECT_EQ(format(decompose(PartialInjection(GroundSet::range(2)))), "[1][2]");
  const PartialInjection chain(GroundSet::range(3),
                               std::vector<std::pair<Digit, Digit>>{{1, 2}});
  EXPECT_EQ(format(decompose(chain)), "[1 2][3]");
}

TEST(DecomposeTest, CanonicalOrderSortsByMinimumDigit) {
  // Path [5 1] has minimum 1 even though it starts at 5.
  const auto d = decompose(parse("[3 4][5 1 2](7 6)"));
  ASSERT_EQ(d.paths.size(), 2u);
  EXPECT_EQ(d.paths[0].digits()[0], 5u);
  EXPECT_EQ(format(d), "(6 7)[5 1 2][3 4]");
}

TEST(RecomposeTest, Examples) {
  Decomposition d;
  d.paths.emplace_back(std::vector<Digit>{1, 2});
  d.cycles.emplace_back(std::vector<Digit>{3});
  const auto f = recompose(d, GroundSet::range(3));
  EXPECT_EQ(f(1), 2u);
  EXPECT_EQ(f(3), 3u);
  EXPECT_FALSE(f(2).has_value());

  EXPECT_EQ(recompose(Decomposition{}, GroundSet::range(2)),
            PartialInjection(GroundSet::range(2)));

  Decomposition overlap;
  overlap.paths.emplace_back(std::vector<Digit>{1, 2});
  overlap.paths.emplace_back(std::vector<Digit>{2, 3});
  EXPECT_THROW(recompose(overlap, GroundSet::range(3)), OverlapError);
  EXPECT_THROW(recompose(d, GroundSet::range(2)), GroundError);
}

TEST(DecomposeTest, RoundTripsAndCoversGroundExhaustively) {
  for (Digit n = 0; n <= 6; ++n) {
    const GroundSet ground = GroundSet::range(n);
    for (ElementStream s(ground); s.next();) {
      const auto f = s.current();
      const auto d = decompose(f);
      const auto digits = d.digits();
      ASSERT_TRUE(std::equal(digits.begin(), digits.end(), ground.digits().begin(),
                             ground.digits().end()))
          << f;
      ASSERT_EQ(recompose(d, ground), f);
      ASSERT_EQ(decompose(recompose(d, ground)), d);
      for (std::size_t i = 1; i < d.cycles.size(); ++i)
        ASSERT_LT(d.cycles[i - 1].min_digit(), d.cycles[i].min_digit());
      for (std::size_t i = 1; i < d.paths.size(); ++i)
        ASSERT_LT(d.paths[i - 1].min_digit(), d.paths[i].min_digit());
    }
  }
}

TEST(DecomposeTest, WorksOnSparseGround) {
  const auto f = parse("[10 30](20)");
  EXPECT_EQ(f.ground(), GroundSet({10, 20, 30}));
  EXPECT_EQ(format(f), "(20)[10 30]");
}
