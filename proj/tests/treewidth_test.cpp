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

#include "percop/treewidth.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "test_util.hpp"

namespace percop {
namespace {

// Branch and bound over elimination orderings on an explicit adjacency
// matrix.
int brute_treewidth(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  int best = n - 1;
  std::vector<bool> gone(n, false);
  std::function<void(int, int)> go = [&](int left, int width) {
    if (width >= best) return;
    if (left == 0) {
      best = width;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (!gone[w] && adj[v][w]) nb.push_back(w);
      auto saved = adj;
      for (int a : nb)
        for (int b : nb)
          if (a != b) adj[a][b] = true;
      gone[v] = true;
      go(left - 1, std::max(width, static_cast<int>(nb.size())));
      gone[v] = false;
      adj = saved;
    }
  };
  go(n, 0);
  return best;
}

PeriodicGraph rotation() {
  Graph q = hypercube(3);
  std::vector<Graph> snaps;
  for (int t = 0; t < 3; ++t) {
    Graph g(8);
    for (const Edge& e : q.edges())
      if ((e.u ^ e.v) == (1 << (2 - t))) g.add_edge(e.u, e.v);
    snaps.push_back(g);
  }
  return PeriodicGraph(snaps);
}

// Components of g - cut restricted to `side` never meet `other`.
bool separates(const Graph& g, VertexSet cut, VertexSet side, VertexSet other) {
  Graph h = g.induced(g.vertices() - cut);
  auto keep = (g.vertices() - cut).to_vector();
  for (const VertexSet& comp : components(h)) {
    bool a = false;
    bool b = false;
    for (int i : comp) {
      a = a || side.contains(keep[i]);
      b = b || other.contains(keep[i]);
    }
    if (a && b) return false;
  }
  return true;
}

TEST(Treewidth, KnownValues) {
  EXPECT_EQ(exact_treewidth(path_graph(7)).width, 1);
  EXPECT_EQ(exact_treewidth(bfs_tree(petersen_graph(), 0)).width, 1);
  EXPECT_EQ(exact_treewidth(complete_graph(11)).width, 10);
  EXPECT_EQ(exact_treewidth(petersen_graph()).width, 4);
  EXPECT_EQ(brute_treewidth(petersen_graph()), 4);
  EXPECT_EQ(exact_treewidth(cycle_graph(6)).width, 2);
  EXPECT_EQ(exact_treewidth(hypercube(3)).width, 3);
  EXPECT_EQ(exact_treewidth(Graph(3)).width, 0);
  EXPECT_THROW(exact_treewidth(Graph(14)), Error);
}

TEST(Treewidth, MatchesBruteForce) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + trial % 7;
    Graph g = testing::random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    TreewidthResult r = exact_treewidth(g);
    EXPECT_EQ(r.width, brute_treewidth(g));
    EXPECT_TRUE(is_valid(r.decomposition, g));
    EXPECT_EQ(r.decomposition.width(), r.width);
  }
}

TEST(Treewidth, ValidationReportsViolations) {
  Graph p4 = path_graph(4);
  TreeDecomposition td{{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}},
                       {{0, 1}, {1, 2}}};
  EXPECT_TRUE(is_valid(td, p4));
  EXPECT_TRUE(is_smooth(td));
  TreeDecomposition missing{{VertexSet{0, 1}, VertexSet{2, 3}}, {{0, 1}}};
  EXPECT_FALSE(is_valid(missing, p4));
  TreeDecomposition broken{{VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{1, 2}},
                           {{0, 1}, {1, 2}}};
  auto v = decomposition_violations(broken, p4);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().find("not connected"), std::string::npos);
  EXPECT_THROW(smooth(broken, p4), Error);
}

TEST(Treewidth, SmoothKeepsSmoothInputs) {
  Graph k4 = complete_graph(4);
  TreeDecomposition one{{k4.vertices()}, {}};
  TreeDecomposition s = smooth(one, k4);
  EXPECT_EQ(s.bags, one.bags);
  Graph p4 = path_graph(4);
  TreeDecomposition td{{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}},
                       {{0, 1}, {1, 2}}};
  EXPECT_EQ(smooth(td, p4).bags.size(), 3U);
  EXPECT_TRUE(is_smooth(smooth(td, p4)));
}

TEST(Treewidth, SmoothPostconditions) {
  Graph pet = petersen_graph();
  TreeDecomposition s = smooth(exact_treewidth(pet).decomposition, pet);
  EXPECT_TRUE(is_valid(s, pet));
  for (const VertexSet& b : s.bags) EXPECT_EQ(b.size(), 5);
  for (auto [x, y] : s.tree) EXPECT_EQ((s.bags[x] & s.bags[y]).size(), 4);

  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(rng, 3 + trial % 8, 0.35);
    TreewidthResult r = exact_treewidth(g);
    TreeDecomposition sm = smooth(r.decomposition, g);
    EXPECT_TRUE(is_valid(sm, g));
    EXPECT_TRUE(is_smooth(sm));
    EXPECT_EQ(sm.width(), r.width);
  }
}

TEST(Treewidth, AdjacentBagsSeparate) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_connected_graph(rng, 8, 0.35);
    TreeDecomposition td = smooth(exact_treewidth(g).decomposition, g);
    auto adj = td.adjacency();
    for (auto [x, y] : td.tree) {
      auto side = [&](int root, int avoid) {
        VertexSet out;
        std::vector<std::pair<int, int>> st{{root, avoid}};
        while (!st.empty()) {
          auto [a, from] = st.back();
          st.pop_back();
          out |= td.bags[a];
          for (int b : adj[a])
            if (b != from) st.emplace_back(b, a);
        }
        return out;
      };
      VertexSet cut = td.bags[x] & td.bags[y];
      EXPECT_TRUE(separates(g, cut, side(x, y) - cut, side(y, x) - cut));
    }
  }
}

TEST(BagStrategy, WinsOnRotationWithFourCops) {
  PeriodicGraph pg = rotation();
  BagPolicy policy = bag_strategy(pg);
  EXPECT_EQ(policy.cops(), 4);
  PolicyVerdict v = verify_policy(pg, policy, 4);
  EXPECT_TRUE(v.wins);
}

TEST(BagStrategy, TwoCopsOnTreeFootprints) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    Graph tree = bfs_tree(testing::random_connected_graph(rng, 8, 0.4), 0);
    PeriodicGraph pg = testing::random_periodic_over(rng, tree, 1 + trial % 3);
    BagPolicy policy = bag_strategy(pg);
    EXPECT_EQ(policy.cops(), 2);
    EXPECT_TRUE(verify_policy(pg, policy, 2).wins);
  }
}

TEST(BagStrategy, FiveCopsOnPetersenFootprints) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 5; ++trial) {
    PeriodicGraph pg = testing::random_periodic_over(rng, petersen_graph(), 3);
    BagPolicy policy = bag_strategy(pg);
    EXPECT_EQ(policy.cops(), 5);
    PolicyVerdict v = verify_policy(pg, policy, 5);
    EXPECT_TRUE(v.wins);
    EXPECT_TRUE(is_k_copwin(pg, 5).copwin());
  }
}

TEST(BagStrategy, RejectsNonSmooth) {
  Graph p3 = path_graph(3);
  PeriodicGraph pg = PeriodicGraph::constant(p3, 2);
  TreeDecomposition rough{{VertexSet{0, 1}, VertexSet{1}, VertexSet{1, 2}},
                          {{0, 1}, {1, 2}}};
  EXPECT_THROW(bag_strategy(pg, rough), Error);
}

}  // namespace
}  // namespace percop
