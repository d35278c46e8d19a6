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

#include "simroot/partial_injection.hpp"

#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "simroot/decomposition.hpp"
#include "simroot/error.hpp"
#include "simroot/notation.hpp"
#include "simroot/oracle.hpp"

using namespace simroot;

namespace {

PartialInjection on(Digit n, std::vector<std::pair<Digit, Digit>> graph) {
  return PartialInjection(GroundSet::range(n), graph);
}

}  // namespace

TEST(GroundSetTest, SortsAndDeduplicates) {
  GroundSet g({5, 2, 5, 9});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0], 2u);
  EXPECT_EQ(g.index_of(9), 2u);
  EXPECT_EQ(g.index_of(3), GroundSet::npos);
  EXPECT_THROW(GroundSet({0, 1}), GroundError);
  EXPECT_EQ(GroundSet({1, 4}).united(GroundSet({2, 4})), GroundSet({1, 2, 4}));
}

TEST(PartialInjectionTest, RejectsNonInjectiveGraphs) {
  EXPECT_THROW(on(3, {{1, 2}, {1, 3}}), OverlapError);
  EXPECT_THROW(on(3, {{1, 3}, {2, 3}}), OverlapError);
  EXPECT_THROW(on(3, {{1, 4}}), GroundError);
  EXPECT_THROW(PartialInjection::from_images(GroundSet::range(2), {1, 1}),
               OverlapError);
}

TEST(PartialInjectionTest, Evaluates) {
  const auto f = on(4, {{2, 2}, {3, 4}, {4, 3}});
  EXPECT_FALSE(f(1).has_value());
  EXPECT_EQ(f(2), 2u);
  EXPECT_EQ(f(3), 4u);
  EXPECT_FALSE(f(7).has_value());
  EXPECT_EQ(f.rank(), 3u);
  EXPECT_EQ(f.graph().size(), 3u);
}

TEST(ComposeTest, Examples) {
  // [1 2] then [2 3]: 1 -> 2 -> 3.
  EXPECT_EQ(compose(on(3, {{1, 2}}), on(3, {{2, 3}})), on(3, {{1, 3}}));
  EXPECT_EQ(compose(on(2, {{1, 2}, {2, 1}}), on(2, {{1, 2}, {2, 1}})),
            on(2, {{1, 1}, {2, 2}}));
  EXPECT_EQ(compose(on(1, {}), on(1, {})), on(1, {}));
}

TEST(ComposeTest, IsDiagrammatic) {
  const auto f = on(3, {{1, 2}});
  const auto g = on(3, {{2, 3}});
  EXPECT_EQ(compose(g, f), on(3, {}));
}

TEST(ComposeTest, RejectsDifferentGrounds) {
  EXPECT_THROW(compose(on(2, {}), on(3, {})), GroundMismatch);
}

TEST(ComposeTest, AssociativeOnSim3) {
  const auto all = enumerate_all(GroundSet::range(3));
  for (const auto& f : all)
    for (const auto& g : all)
      for (const auto& h : all)
        ASSERT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
}

TEST(InverseSemigroupTest, AxiomsHoldOnSimUpTo4) {
  for (Digit n = 0; n <= 4; ++n) {
    const auto all = enumerate_all(GroundSet::range(n));
    std::vector<PartialInjection> idempotents;
    for (const auto& a : all) {
      const auto b = inverse(a);
      EXPECT_EQ(compose(compose(a, b), a), a);
      EXPECT_EQ(compose(compose(b, a), b), b);
      if (is_idempotent(a)) idempotents.push_back(a);
    }
    EXPECT_EQ(idempotents.size(), std::size_t{1} << n);
    for (const auto& e : idempotents)
      for (const auto& g : idempotents)
        EXPECT_EQ(compose(e, g), compose(g, e));
  }
}

TEST(InverseSemigroupTest, InverseIsUnique) {
  const auto all = enumerate_all(GroundSet::range(3));
  for (const auto& a : all) {
    int found = 0;
    for (const auto& b : all) {
      if (compose(compose(a, b), a) == a && compose(compose(b, a), b) == b) ++found;
    }
    EXPECT_EQ(found, 1) << a;
  }
}

TEST(PowerTest, WorkedExamples) {
  EXPECT_EQ(format(power(parse("[1 4 7 2 5 8 3 6]"), 3)), "[1 2 3][4 5 6][7 8]");
  EXPECT_EQ(format(power(parse("(1 2 3 4 5 6)"), 4)), "(1 5 3)(2 6 4)");
}

TEST(PowerTest, FirstPowerIsIdentityAndZeroIsRejected) {
  const auto f = parse("(2)(3 4)[1 5]");
  EXPECT_EQ(power(f, 1), f);
  EXPECT_THROW(power(f, 0), KInvalid);
}

TEST(PowerTest, MatchesComponentwisePowersExhaustively) {
  for (Digit n = 0; n <= 6; ++n) {
    for (ElementStream s(GroundSet::range(n)); s.next();) {
      const auto f = s.current();
      PartialInjection running = f;
      for (unsigned k = 1; k <= 10; ++k) {
        ASSERT_EQ(power(f, k), running) << f << " k=" << k;
        ASSERT_EQ(power_by_components(f, k), running) << f << " k=" << k;
        running = compose(running, f);
      }
    }
  }
}

TEST(PartialInjectionTest, CodeIsInjectiveOnSim4) {
  std::vector<std::uint64_t> codes;
  for (const auto& f : enumerate_all(GroundSet::range(4))) codes.push_back(f.code());
  std::sort(codes.begin(), codes.end());
  EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
}
