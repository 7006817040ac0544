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

#include "percop/constructions.hpp"

#include <gtest/gtest.h>

#include "percop/corners.hpp"
#include "percop/treewidth.hpp"

namespace percop {
namespace {

TEST(Constructions, RotationPartitionsTheCube) {
  ConstructionSpecimen s = q3_rotation();
  const PeriodicGraph& pg = s.instance;
  EXPECT_EQ(pg.period(), 3);
  Graph uni(8);
  std::size_t total = 0;
  for (const Graph& g : pg.snapshots()) {
    EXPECT_EQ(g.size(), 4U);
    for (int v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 1);
    for (const Edge& e : g.edges()) uni.add_edge(e.u, e.v);
    total += g.size();
  }
  EXPECT_EQ(total, 12U);
  EXPECT_TRUE(uni.same_edges(hypercube(3)));
  // Snapshot t flips label character t.
  for (int t = 0; t < 3; ++t)
    for (const Edge& e : pg.snapshot(t).edges()) {
      std::string a = pg.labels()[e.u];
      std::string b = pg.labels()[e.v];
      for (int c = 0; c < 3; ++c) EXPECT_EQ(a[c] != b[c], c == t);
    }
}

TEST(Constructions, Bowtie) {
  ConstructionSpecimen s = bowtie_221();
  for (const Graph& g : s.instance.snapshots()) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.size(), 7U);
    EXPECT_FALSE(dismantle(g));
  }
  EXPECT_TRUE(footprint(s.instance).same_edges(bowtie_graph()));
  EXPECT_FALSE(dismantle(bowtie_graph()));
}

TEST(Constructions, Petersen132) {
  ConstructionSpecimen s = petersen_132();
  const PeriodicGraph& pg = s.instance;
  EXPECT_EQ(pg.period(), 50);
  Graph f = footprint(pg);
  EXPECT_TRUE(f.same_edges(compose(petersen_graph(), Graph(1), ComposeMode::kJoin, 10)));
  EXPECT_EQ(f.degree(10), 10);
  for (int t = 0; t < 50; ++t) {
    EXPECT_TRUE(is_connected(pg.snapshot(t)));
    if (t % 5 == 0) {
      EXPECT_EQ(pg.snapshot(t).size(), 16U);
      EXPECT_TRUE(pg.snapshot(t).has_edge(10, t / 5));
    }
  }
}

TEST(Constructions, Petersen231) {
  ConstructionSpecimen s = petersen_231();
  const PeriodicGraph& pg = s.instance;
  Graph f = footprint(pg);
  EXPECT_EQ(f.order(), 12);
  EXPECT_EQ(domination_number(f), 2);
  EXPECT_EQ(f.degree(10), 5);
  EXPECT_EQ(f.degree(11), 5);
  int run = 0;
  int longest = 0;
  for (int t = 0; t < 2 * pg.period(); ++t) {
    run = is_tree(pg.snapshot(t)) ? run + 1 : 0;
    longest = std::max(longest, run);
  }
  EXPECT_GE(longest, 9);
  for (const Graph& g : pg.snapshots()) EXPECT_TRUE(is_connected(g));
}

TEST(Constructions, Petersen311) {
  ConstructionSpecimen s = petersen_311();
  EXPECT_TRUE(footprint(s.instance).same_edges(petersen_graph()));
  for (const Graph& g : s.instance.snapshots()) EXPECT_TRUE(is_tree(g));
  const Graph& t0 = s.instance.snapshot(0);
  for (int t = 0; t <= radius(t0); ++t) EXPECT_TRUE(s.instance.snapshot(t).same_edges(t0));
}

TEST(Constructions, CirculantPreconditions) {
  EXPECT_THROW(circulant_123({1, 2, 3, 4}), Error);
  EXPECT_THROW(circulant_123({1, 1, 2, 3, 4}), Error);
  EXPECT_THROW(circulant_123({1, 2, 3, 4, 1}), Error);
  EXPECT_THROW(circulant_123({1, 2, 3, 4, 6}), Error);
  EXPECT_THROW(circulant_123({1, 2, 1, 2, 3, 4, 3}), Error);
  ConstructionSpecimen s = circulant_123();
  EXPECT_TRUE(footprint(s.instance).same_edges(complete_graph(11)));
  for (const Graph& g : s.instance.snapshots()) {
    EXPECT_EQ(g.size(), 11U);
    EXPECT_TRUE(is_connected(g));
  }
  EXPECT_FALSE(has_k_temporal_corner(s.instance, 2));
}

TEST(Constructions, ExtendOdd) {
  ConstructionSpecimen s = circulant_123();
  EXPECT_EQ(extend_odd(s, 0).instance, s.instance);
  ConstructionSpecimen e = extend_odd(s, 2);
  EXPECT_EQ(e.instance.period(), 9);
  EXPECT_FALSE(has_k_temporal_corner(e.instance, 2));
  EXPECT_TRUE(e.instance.snapshot(7).same_edges(s.instance.snapshot(3)));
  EXPECT_THROW(extend_odd(bowtie_221(), 1), Error);
}

TEST(Constructions, AllTemporallyConnected) {
  for (const auto& name : construction_names()) {
    ConstructionSpecimen s = make_construction(name);
    EXPECT_EQ(s.name, name);
    EXPECT_TRUE(is_temporally_connected(s.instance)) << name;
  }
  EXPECT_THROW(make_construction("nope"), Error);
}

TEST(Constructions, GoldenTriples) {
  for (const auto& name : construction_names()) {
    ConstructionSpecimen s = make_construction(name);
    Triple t = triple(s.instance);
    EXPECT_TRUE(s.expected.matches(t))
        << name << " got (" << t.footprint << "," << t.max_snapshot << ","
        << t.periodic << ")";
  }
}

TEST(Constructions, RareSnapshotsHaveCopNumberThree) {
  for (auto s : {petersen_132(), petersen_231()}) {
    int every = s.name == "petersen_132" ? 5 : 11;
    for (int t = 0; t < s.instance.period(); t += every) {
      EXPECT_EQ(static_cop_number(s.instance.snapshot(t)), 3);
    }
  }
}

}  // namespace
}  // namespace percop
