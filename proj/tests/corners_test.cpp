// Copyright 2026 The percop Authors.
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

#include "percop/corners.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_util.hpp"

namespace percop {
namespace {

// All k-covers by plain enumeration of k-subsets as bitmasks.
std::set<std::tuple<int, int, std::uint64_t>> brute_corners(
    const PeriodicGraph& pg, int k) {
  std::set<std::tuple<int, int, std::uint64_t>> out;
  const int n = pg.order();
  const int p = pg.period();
  for (int t = 0; t < p; ++t)
    for (int x = 0; x < n; ++x)
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (std::popcount(m) != std::min(k, n - 1) || ((m >> x) & 1)) continue;
        std::uint64_t cover = 0;
        for (int y = 0; y < n; ++y)
          if ((m >> y) & 1) cover |= testing::raw_closed(pg.snapshot(t + 1), y);
        std::uint64_t need = testing::raw_closed(pg.snapshot(t), x);
        if ((need & ~cover) == 0) out.emplace(t, x, m);
      }
  return out;
}

std::set<std::tuple<int, int, std::uint64_t>> as_set(
    const std::vector<CornerWitness>& ws) {
  std::set<std::tuple<int, int, std::uint64_t>> out;
  for (const auto& w : ws) {
    std::uint64_t m = 0;
    for (int y : w.covers) m |= std::uint64_t{1} << y;
    out.emplace(w.t, w.corner, m);
  }
  return out;
}

TEST(Corners, HandCheckedExample) {
  enum { a, b, c };
  PeriodicGraph fig({Graph(3, {{b, c}}), Graph(3, {{a, b}, {a, c}})});
  auto ws = find_temporal_corners(fig);
  bool found = false;
  for (const auto& w : ws)
    if (w.t == 0 && w.corner == c && w.covers == std::vector<int>{a}) found = true;
  EXPECT_TRUE(found);
}

TEST(Corners, CompleteGraphEverythingIsCorner) {
  PeriodicGraph k5 = PeriodicGraph::constant(complete_graph(5), 1);
  EXPECT_EQ(find_temporal_corners(k5).size(), 20U);
}

TEST(Corners, MatchBruteForce) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 5;
    int p = 1 + trial % 3;
    PeriodicGraph pg = testing::random_periodic(rng, n, p, 0.45);
    for (int k = 1; k <= 3; ++k) {
      auto ws = find_k_temporal_corners(pg, k);
      EXPECT_EQ(as_set(ws), brute_corners(pg, k));
      std::set<std::pair<int, int>> nodes;
      for (const auto& w : ws) nodes.emplace(w.t, w.corner);
      EXPECT_EQ(static_cast<int>(nodes.size()), count_k_temporal_corners(pg, k));
      EXPECT_EQ(!ws.empty(), has_k_temporal_corner(pg, k));
      for (const auto& w : ws) EXPECT_TRUE(is_corner_witness(pg, w));
    }
    EXPECT_EQ(as_set(find_temporal_corners(pg)), as_set(find_k_temporal_corners(pg, 1)));
  }
}

TEST(Corners, WitnessesExtendToLargerCovers) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    PeriodicGraph pg = testing::random_periodic(rng, 6, 2, 0.4);
    auto bigger = as_set(find_k_temporal_corners(pg, 2));
    for (const auto& w : find_k_temporal_corners(pg, 1)) {
      for (int extra = 0; extra < 6; ++extra) {
        if (extra == w.corner || extra == w.covers[0]) continue;
        std::uint64_t m = (std::uint64_t{1} << w.covers[0]) | (std::uint64_t{1} << extra);
        EXPECT_TRUE(bigger.count({w.t, w.corner, m}));
      }
    }
  }
}

PeriodicGraph circulant(std::initializer_list<int> steps) {
  std::vector<Graph> snaps;
  for (int s : steps) snaps.push_back(circulant_cycle(11, s));
  return PeriodicGraph(snaps);
}

// Consecutive steps a, b with a = +-2b (mod 11) leave a 2-corner even though
// a != b.
TEST(Corners, CirculantDoublingStepsCreateTwoCorner) {
  EXPECT_FALSE(find_k_temporal_corners(circulant({2, 1}), 2).empty());
  EXPECT_FALSE(find_k_temporal_corners(circulant({2, 3, 5, 1, 4}), 2).empty());
  EXPECT_TRUE(find_k_temporal_corners(circulant({1, 3}), 2).empty());
}

TEST(Corners, CirculantStepsWithoutTwoCorner) {
  PeriodicGraph pg = circulant({5, 2, 3, 1, 4});
  EXPECT_TRUE(find_k_temporal_corners(pg, 2).empty());
  bool found = false;
  for (const auto& w : find_k_temporal_corners(pg, 3))
    if (w.t == 3 && w.covers == std::vector<int>{0, 2, 9}) found = true;
  EXPECT_TRUE(found);
}

TEST(Corners, BudgetGuard) {
  PeriodicGraph big = PeriodicGraph::constant(Graph(60), 1);
  EXPECT_THROW(find_k_temporal_corners(big, 6), Error);
  EXPECT_THROW(find_k_temporal_corners(big, 0), Error);
}

}  // namespace
}  // namespace percop
