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

#include "simroot/interlacing.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "simroot/notation.hpp"

using namespace simroot;

namespace {

std::vector<PathComponent> paths_of(std::string_view text) {
  return parse_components(text).paths;
}

std::vector<CycleComponent> cycles_of(std::string_view text) {
  return parse_components(text).cycles;
}

template <typename C>
std::vector<std::string> formatted(const std::vector<C>& components) {
  std::vector<std::string> out;
  for (const auto& c : components) {
    Decomposition d;
    if constexpr (std::is_same_v<C, PathComponent>) d.paths.push_back(c); else d.cycles.push_back(c);
    out.push_back(format(d));
  }
  return out;
}

// Consecutive digits 1, 2, ... laid out into components of the given lengths.
std::vector<std::vector<Digit>> layout(const std::vector<unsigned>& lengths) {
  std::vector<std::vector<Digit>> out;
  Digit next = 1;
  for (unsigned length : lengths) {
    std::vector<Digit> digits(length);
    for (auto& d : digits) d = next++;
    out.push_back(digits);
  }
  return out;
}

// Oracle: try every arrangement of the digits as a single path (or as a
// single cycle, minimum digit first) and keep those whose pointwise k-th
// power equals the target.
std::set<std::vector<Digit>> brute_force_interlacings(const Decomposition& target,
                                                      unsigned k, bool cycle) {
  std::vector<Digit> digits = target.digits();
  const GroundSet ground(digits);
  const PartialInjection expected = recompose(target, ground);
  std::set<std::vector<Digit>> found;
  auto consider = [&](const std::vector<Digit>& order) {
    Decomposition d;
    if (cycle) d.cycles.emplace_back(order); else d.paths.emplace_back(order);
    if (power(recompose(d, ground), k) == expected) found.insert(order);
  };
  if (cycle) {
    std::vector<Digit> rest(digits.begin() + 1, digits.end());
    do {
      std::vector<Digit> order{digits.front()};
      order.insert(order.end(), rest.begin(), rest.end());
      consider(order);
    } while (std::next_permutation(rest.begin(), rest.end()));
  } else {
    do consider(digits); while (std::next_permutation(digits.begin(), digits.end()));
  }
  return found;
}

}  // namespace

TEST(PhiPathsTest, Examples) {
  EXPECT_EQ(phi_paths(PathLengthProfile({3, 3, 2}), 3), 2);
  EXPECT_EQ(phi_paths(PathLengthProfile({1, 1}), 3), 2);
  EXPECT_EQ(phi_paths(PathLengthProfile({3, 2}), 3), 0);
  EXPECT_EQ(phi_paths(PathLengthProfile({2, 2}), 2), 2);
  EXPECT_EQ(phi_paths(PathLengthProfile({1, 1, 1}), 2), 0);
  EXPECT_EQ(phi_paths(PathLengthProfile({4, 2}), 2), 0);
  EXPECT_EQ(phi_paths(PathLengthProfile({5}), 1), 1);
  EXPECT_THROW(PathLengthProfile({}), std::invalid_argument);
}

TEST(PhiCyclesTest, Examples) {
  const std::vector<unsigned> three_three{3, 3};
  const std::vector<unsigned> one{1};
  const std::vector<unsigned> two{2};
  const std::vector<unsigned> mixed{2, 1};
  EXPECT_EQ(phi_cycles(three_three, 4), 3);
  EXPECT_EQ(phi_cycles(one, 7), 1);
  EXPECT_EQ(phi_cycles(two, 2), 0);
  EXPECT_EQ(phi_cycles(mixed, 2), 0);
}

TEST(EnumeratePathInterlacingsTest, Examples) {
  using S = std::vector<std::string>;
  EXPECT_EQ(formatted(enumerate_path_interlacings(paths_of("[1 2 3][4 5 6][7 8]"), 3)),
            (S{"[1 4 7 2 5 8 3 6]", "[4 1 7 5 2 8 6 3]"}));
  EXPECT_EQ(formatted(enumerate_path_interlacings(paths_of("[1][2]"), 2)),
            (S{"[1 2]", "[2 1]"}));
  EXPECT_TRUE(enumerate_path_interlacings(paths_of("[1 2][3 4]"), 3).empty());
}

TEST(EnumerateCycleInterlacingsTest, Examples) {
  using S = std::vector<std::string>;
  const auto fused = formatted(enumerate_cycle_interlacings(cycles_of("(1 5 3)(2 6 4)"), 4));
  EXPECT_EQ(fused.size(), 3u);
  EXPECT_NE(std::find(fused.begin(), fused.end(), "(1 2 3 4 5 6)"), fused.end());
  EXPECT_EQ(formatted(enumerate_cycle_interlacings(cycles_of("(1)"), 3)), (S{"(1)"}));
  const auto two = formatted(enumerate_cycle_interlacings(cycles_of("(1 2)(3 4)"), 2));
  EXPECT_EQ(std::set<std::string>(two.begin(), two.end()),
            (std::set<std::string>{"(1 3 2 4)", "(1 4 2 3)"}));
}

TEST(EnumeratePathInterlacingsTest, AgreesWithBruteForceUpTo8Digits) {
  for (unsigned total = 1; total <= 8; ++total) {
    for (const auto& lambda : integer_partitions(total, total)) {
      const std::vector<unsigned> lengths(lambda.parts().begin(), lambda.parts().end());
      Decomposition target;
      for (auto& digits : layout(lengths)) target.paths.emplace_back(digits);
      for (unsigned k = 1; k <= 8; ++k) {
        const auto expected = brute_force_interlacings(target, k, false);
        const auto got = enumerate_path_interlacings(target.paths, k);
        std::set<std::vector<Digit>> unique;
        for (const auto& p : got) {
          unique.emplace(p.digits().begin(), p.digits().end());
          ASSERT_EQ(path_power(p, k), target);
        }
        ASSERT_EQ(unique.size(), got.size());
        ASSERT_EQ(unique, expected) << format(target) << " k=" << k;
        ASSERT_EQ(phi_paths(PathLengthProfile(lengths), k), got.size());

        const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
        const bool exists = (lengths.size() == k && *hi - *lo <= 1) ||
                            (*hi == 1 && lengths.size() <= k);
        ASSERT_EQ(!expected.empty(), exists);
      }
    }
  }
}

TEST(EnumerateCycleInterlacingsTest, AgreesWithBruteForceUpTo8Digits) {
  for (unsigned total = 1; total <= 8; ++total) {
    for (const auto& lambda : integer_partitions(total, total)) {
      const std::vector<unsigned> lengths(lambda.parts().begin(), lambda.parts().end());
      Decomposition target;
      for (auto& digits : layout(lengths)) target.cycles.emplace_back(digits);
      target.canonicalize();
      for (unsigned k = 1; k <= 8; ++k) {
        const auto expected = brute_force_interlacings(target, k, true);
        const auto got = enumerate_cycle_interlacings(target.cycles, k);
        std::set<std::vector<Digit>> unique;
        for (const auto& c : got) {
          unique.emplace(c.digits().begin(), c.digits().end());
          ASSERT_EQ(cycle_power(c, k), target);
        }
        ASSERT_EQ(unique.size(), got.size());
        ASSERT_EQ(unique, expected) << format(target) << " k=" << k;
        ASSERT_EQ(phi_cycles(lengths, k), got.size());
      }
    }
  }
}

TEST(EnumeratePathInterlacingsTest, OrderIsDeterministic) {
  const auto paths = paths_of("[7 8][1 2 3][4 5 6]");
  EXPECT_EQ(formatted(enumerate_path_interlacings(paths, 3)),
            formatted(enumerate_path_interlacings(paths_of("[1 2 3][4 5 6][7 8]"), 3)));
}
