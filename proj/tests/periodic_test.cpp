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

#include "percop/periodic.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace percop {
namespace {

// Earliest arrival by BFS over explicit (time, vertex) pairs.
long long expanded_arrival(const PeriodicGraph& pg, long long t0, int u, int v) {
  const int n = pg.order();
  std::vector<bool> at(n, false);
  at[u] = true;
  for (long long s = 0; s <= static_cast<long long>(n) * pg.period(); ++s) {
    if (at[v]) return t0 + s;
    const Graph& g = pg.snapshot(t0 + s);
    std::vector<bool> next(n, false);
    for (int x = 0; x < n; ++x) {
      if (!at[x]) continue;
      next[x] = true;
      for (const Edge& e : g.edges()) {
        if (e.u == x) next[e.v] = true;
        if (e.v == x) next[e.u] = true;
      }
    }
    at = next;
  }
  return -1;
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

TEST(Periodic, ValidatesShape) {
  EXPECT_THROW(PeriodicGraph(std::vector<Graph>{}), Error);
  EXPECT_THROW(PeriodicGraph({Graph(3), Graph(4)}), Error);
  PeriodicGraph pg({Graph(3), Graph(3, {{0, 1}})});
  EXPECT_EQ(pg.period(), 2);
  EXPECT_TRUE(pg.snapshot(5).has_edge(0, 1));
  EXPECT_FALSE(pg.snapshot(-2).has_edge(0, 1));
}

TEST(Periodic, Footprint) {
  PeriodicGraph pg = rotation();
  Graph f = footprint(pg);
  EXPECT_EQ(f.size(), 12U);
  EXPECT_TRUE(f.same_edges(hypercube(3)));
  Graph pet = petersen_graph();
  EXPECT_TRUE(footprint(PeriodicGraph::constant(pet, 1)).same_edges(pet));
}

TEST(Periodic, ArenaStructure) {
  enum { a, b, c };
  PeriodicGraph fig({Graph(3, {{b, c}}), Graph(3, {{a, b}, {a, c}})});
  Arena arena = build_arena(fig);
  EXPECT_EQ(arena.out_vertices(0, c), (VertexSet{b, c}));
  EXPECT_EQ(arena.out_vertices(1, a), (VertexSet{a, b, c}));
  EXPECT_TRUE(arena.has_edge({0, c}, {1, b}));
  EXPECT_FALSE(arena.has_edge({0, c}, {0, b}));
  EXPECT_FALSE(arena.has_edge({0, c}, {1, a}));

  Arena single = build_arena(PeriodicGraph::constant(Graph(1), 1));
  EXPECT_EQ(single.edge_count(), 1U);
  EXPECT_TRUE(single.has_edge({0, 0}, {0, 0}));

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    PeriodicGraph pg = testing::random_periodic(rng, 7, 3, 0.3);
    Arena ar = build_arena(pg);
    std::size_t expected = 0;
    for (const Graph& g : pg.snapshots()) expected += 7 + 2 * g.size();
    EXPECT_EQ(ar.edge_count(), expected);
    for (int t = 0; t < 3; ++t)
      for (int u = 0; u < 7; ++u) {
        EXPECT_TRUE(ar.has_edge({t, u}, {(t + 1) % 3, u}));
        EXPECT_EQ(ar.out_vertices(t, u).bits(),
                  testing::raw_closed(pg.snapshot(t), u));
      }
  }
}

TEST(Periodic, TemporalConnectivityMatchesJourneys) {
  EXPECT_TRUE(is_temporally_connected(rotation()));
  EXPECT_FALSE(is_temporally_connected(PeriodicGraph({Graph(2), Graph(2)})));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 600; ++trial) {
    int n = 2 + trial % 4;
    int p = 1 + trial % 3;
    PeriodicGraph pg = testing::random_periodic(rng, n, p, 0.25);
    bool all = true;
    for (int t = 0; t < p; ++t)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (expanded_arrival(pg, t, u, v) < 0) all = false;
    EXPECT_EQ(is_temporally_connected(pg), all);
  }
}

TEST(Periodic, ForemostJourney) {
  PeriodicGraph path = PeriodicGraph::constant(path_graph(3), 1);
  auto j = foremost_journey(path, 0, 0, 2);
  ASSERT_TRUE(j.has_value());
  EXPECT_EQ(j->arrival(), 2);
  EXPECT_EQ(j->vertices, (std::vector<int>{0, 1, 2}));

  auto same = foremost_journey(path, 4, 1, 1);
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(same->arrival(), 4);
  EXPECT_EQ(same->vertices.size(), 1U);

  auto rot = foremost_journey(rotation(), 0, 0, 7);
  ASSERT_TRUE(rot.has_value());
  EXPECT_EQ(rot->arrival(), 3);
  EXPECT_EQ(rot->vertices, (std::vector<int>{0, 4, 6, 7}));

  EXPECT_FALSE(foremost_journey(PeriodicGraph({Graph(2), Graph(2)}), 0, 0, 1));

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    Graph f = testing::random_connected_graph(rng, 6, 0.4);
    PeriodicGraph pg = testing::random_periodic_over(rng, f, 3);
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v) {
        long long t0 = trial % 5;
        auto jr = foremost_journey(pg, t0, u, v);
        ASSERT_TRUE(jr.has_value());
        EXPECT_LE(jr->arrival() - t0, 6 * 3);
        EXPECT_EQ(jr->arrival(), expanded_arrival(pg, t0, u, v));
        for (std::size_t i = 0; i + 1 < jr->vertices.size(); ++i) {
          EXPECT_TRUE(pg.closed_neighborhood(t0 + i, jr->vertices[i])
                          .contains(jr->vertices[i + 1]));
        }
      }
  }
}

TEST(Periodic, InducedCommutesWithFootprint) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    PeriodicGraph pg = testing::random_periodic(rng, 7, 3, 0.4);
    VertexSet keep = VertexSet::from_bits(rng() & 0x7F);
    if (keep.empty()) keep.insert(0);
    auto sub = induced(pg, keep);
    EXPECT_EQ(sub.original, keep.to_vector());
    EXPECT_TRUE(footprint(sub.graph).same_edges(footprint(pg).induced(keep)));
    for (int t = 0; t < 3; ++t) {
      std::size_t count = 0;
      for (const Edge& e : pg.snapshot(t).edges())
        if (keep.contains(e.u) && keep.contains(e.v)) ++count;
      EXPECT_EQ(sub.graph.snapshot(t).size(), count);
    }
  }
  PeriodicGraph r = rotation();
  EXPECT_EQ(induced(r, r.vertices()).graph, r);
  EXPECT_THROW(induced(r, VertexSet{}), Error);
}

TEST(Periodic, Padding) {
  PeriodicGraph pg = rotation();
  EXPECT_EQ(pad(pg, 8, 0), pg);
  PeriodicGraph padded = pad(pg, 11, 2);
  EXPECT_EQ(padded.order(), 11);
  EXPECT_EQ(padded.period(), 3);
  Graph expected = compose(footprint(pg), Graph(0), ComposeMode::kUnion, 11);
  expected.add_edge(2, 8);
  expected.add_edge(8, 9);
  expected.add_edge(9, 10);
  EXPECT_TRUE(footprint(padded).same_edges(expected));
  for (const Graph& g : padded.snapshots()) {
    EXPECT_TRUE(g.has_edge(2, 8) && g.has_edge(8, 9) && g.has_edge(9, 10));
  }
  EXPECT_THROW(pad(PeriodicGraph::constant(Graph(3), 1), 5, 0), Error);
  EXPECT_THROW(pad(pg, 7, 0), Error);

  auto map = padding_collapse_map(11, 8, 2);
  for (const Graph& g : padded.snapshots()) {
    EXPECT_TRUE(check_retraction({g, VertexSet::prefix(8), map}));
  }
}

}  // namespace
}  // namespace percop
