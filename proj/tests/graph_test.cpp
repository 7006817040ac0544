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

#include "percop/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>

#include "test_util.hpp"

namespace percop {
namespace {

// Shortest cycle by trying every simple cycle through DFS; exponential but
// fine for n <= 10.
int brute_girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::function<void(int, int)> dfs = [&](int start, int u) {
    for (int v : g.neighbors(u)) {
      if (v == start && path.size() >= 3) {
        int len = static_cast<int>(path.size());
        if (best == 0 || len < best) best = len;
      }
      if (v > start && !used[v]) {
        used[v] = true;
        path.push_back(v);
        dfs(start, v);
        path.pop_back();
        used[v] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    path = {s};
    dfs(s, s);
    used[s] = false;
  }
  return best;
}

int brute_domination(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t covered = 0;
    for (int u = 0; u < n; ++u)
      if ((mask >> u) & 1) covered |= testing::raw_closed(g, u);
    if (covered == (std::uint64_t{1} << n) - 1)
      best = std::min(best, static_cast<int>(std::popcount(mask)));
  }
  return best;
}

TEST(Graph, ClosedNeighborhoodContainsVertex) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testing::random_graph(rng, 9, 0.4);
    for (int u = 0; u < g.order(); ++u) {
      EXPECT_TRUE(g.closed_neighborhood(u).contains(u));
      EXPECT_EQ(g.degree(u), g.closed_neighborhood(u).size() - 1);
      EXPECT_EQ(g.closed_neighborhood(u).bits(), testing::raw_closed(g, u));
    }
  }
}

TEST(Graph, RejectsSelfLoopAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.size(), 1U);
}

TEST(Graph, ComposeJoinAndUnion) {
  Graph joined = compose(petersen_graph(), Graph(1), ComposeMode::kJoin, 10);
  EXPECT_EQ(joined.order(), 11);
  EXPECT_EQ(joined.degree(10), 10);
  EXPECT_EQ(joined.size(), 25U);

  Graph u = compose(Graph(1), Graph(1), ComposeMode::kUnion, 1);
  EXPECT_EQ(u.order(), 2);
  EXPECT_EQ(u.size(), 0U);

  try {
    compose(Graph(3), Graph(2), ComposeMode::kUnion, 2);
    FAIL() << "expected collision";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVertexCollision);
    EXPECT_NE(std::string(e.what()).find("vertex collision"), std::string::npos);
  }
}

TEST(Graph, PetersenShape) {
  Graph p = petersen_graph();
  EXPECT_EQ(p.size(), 15U);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  EXPECT_EQ(diameter(p), 2);
  EXPECT_EQ(p.label(0), "a");
  EXPECT_EQ(p.label(9), "j");
}

TEST(Graph, Girth) {
  EXPECT_EQ(girth(cycle_graph(4)), 4);
  EXPECT_EQ(girth(petersen_graph()), 5);
  EXPECT_EQ(brute_girth(petersen_graph()), 5);
  EXPECT_FALSE(girth(path_graph(6)).has_value());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(rng, 8, 0.3);
    int expected = brute_girth(g);
    auto got = girth(g);
    if (expected == 0) {
      EXPECT_FALSE(got.has_value());
    } else {
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(*got, expected);
    }
  }
}

TEST(Graph, DominationNumber) {
  EXPECT_EQ(domination_number(complete_graph(6)), 1);
  Graph matching(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  EXPECT_EQ(domination_number(matching), 4);
  EXPECT_EQ(brute_domination(matching), 4);
  EXPECT_EQ(domination_number(petersen_graph()), 3);
  EXPECT_THROW(domination_number(Graph(21)), Error);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(rng, 10, 0.25);
    EXPECT_EQ(domination_number(g), brute_domination(g));
  }
}

TEST(Graph, RadiusAndDiameter) {
  EXPECT_EQ(radius(path_graph(9)), 4);
  EXPECT_EQ(radius(Graph(1)), 0);
  EXPECT_EQ(radius(bfs_tree(petersen_graph(), 0)), 2);
  EXPECT_THROW(radius(Graph(2)), Error);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_connected_graph(rng, 9, 0.3);
    int r = radius(g);
    int d = diameter(g);
    EXPECT_LE(r, d);
    EXPECT_LE(d, 2 * r);
  }
}

TEST(Graph, Retractions) {
  enum { a, b, c, d, u };
  Graph g(5, {{a, b}, {b, c}, {c, d}, {d, a}, {b, u}, {u, c}});
  Retraction r{g, VertexSet{a, b, c, d}, {a, b, c, d, b}};
  EXPECT_TRUE(check_retraction(r));
  Retraction bad{g, VertexSet{a, b, c, d}, {a, b, c, d, a}};
  EXPECT_FALSE(check_retraction(bad));
  Retraction identity{g, g.vertices(), {0, 1, 2, 3, 4}};
  EXPECT_TRUE(check_retraction(identity));
  Retraction partial{g, VertexSet{a, b}, {a, b, c}};
  EXPECT_THROW(check_retraction(partial), Error);
  Retraction outside{g, VertexSet{a, b}, {a, b, 9, a, a}};
  EXPECT_THROW(check_retraction(outside), Error);
}

TEST(Graph, RetractionHomomorphismProperty) {
  std::mt19937_64 rng(17);
  int found = 0;
  for (int trial = 0; trial < 3000 && found < 50; ++trial) {
    Graph g = testing::random_connected_graph(rng, 6, 0.5);
    std::vector<int> map(6);
    std::uniform_int_distribution<int> pick(0, 5);
    VertexSet target;
    for (int v = 0; v < 3; ++v) target.insert(v);
    for (int v = 0; v < 6; ++v) map[v] = v < 3 ? v : pick(rng) % 3;
    Retraction r{g, target, map};
    if (!check_retraction(r)) continue;
    ++found;
    for (const Edge& e : g.edges()) {
      int x = map[e.u];
      int y = map[e.v];
      EXPECT_TRUE(x == y || g.has_edge(x, y));
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Graph, Dismantle) {
  EXPECT_FALSE(dismantle(Graph()));
  EXPECT_TRUE(dismantle(Graph(1)));
  EXPECT_TRUE(dismantle(path_graph(7)));
  EXPECT_TRUE(dismantle(bfs_tree(petersen_graph(), 3)));
  EXPECT_FALSE(dismantle(cycle_graph(4)));
  EXPECT_FALSE(dismantle(petersen_graph()));
  EXPECT_TRUE(dismantle(complete_graph(5)));
}

TEST(Graph, SpanningTreeCover) {
  auto check = [](const Graph& g) {
    auto trees = spanning_tree_cover(g);
    Graph uni(g.order());
    for (const Graph& t : trees) {
      EXPECT_TRUE(is_tree(t));
      EXPECT_EQ(t.order(), g.order());
      for (const Edge& e : t.edges()) {
        EXPECT_TRUE(g.has_edge(e.u, e.v));
        uni.add_edge(e.u, e.v);
      }
    }
    EXPECT_TRUE(uni.same_edges(g));
    return trees;
  };
  auto pet = check(petersen_graph());
  EXPECT_GE(pet.size(), 2U);
  EXPECT_EQ(radius(pet.front()), radius(petersen_graph()));
  auto tree = check(path_graph(5));
  ASSERT_EQ(tree.size(), 1U);
  EXPECT_TRUE(tree.front().same_edges(path_graph(5)));
  EXPECT_EQ(check(cycle_graph(4)).size(), 2U);
  EXPECT_THROW(spanning_tree_cover(Graph(3)), Error);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    check(testing::random_connected_graph(rng, 8, 0.5));
  }
}

TEST(Graph, Hypercube) {
  Graph q = hypercube(3);
  EXPECT_EQ(q.size(), 12U);
  EXPECT_EQ(q.label(1), "001");
  EXPECT_EQ(q.label(4), "100");
  EXPECT_EQ(girth(q), 4);
}

}  // namespace
}  // namespace percop
