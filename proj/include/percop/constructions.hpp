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

#ifndef PERCOP_CONSTRUCTIONS_HPP_
#define PERCOP_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "percop/corners.hpp"
#include "percop/error.hpp"
#include "percop/graph.hpp"
#include "percop/periodic.hpp"
#include "percop/solver.hpp"

namespace percop {

enum class Provenance { kFullySpecified, kReconstructionRequired };

inline const char* to_string(Provenance p) {
  return p == Provenance::kFullySpecified ? "fully-specified"
                                          : "reconstruction-required";
}

// Expected (footprint, max snapshot, periodic) cop numbers; unset entries
// are not claimed.
struct ExpectedTriple {
  std::optional<int> footprint;
  std::optional<int> max_snapshot;
  std::optional<int> periodic;

  bool matches(const Triple& t) const {
    return (!footprint || *footprint == t.footprint) &&
           (!max_snapshot || *max_snapshot == t.max_snapshot) &&
           (!periodic || *periodic == t.periodic);
  }
  bool complete() const { return footprint && max_snapshot && periodic; }

  friend bool operator==(const ExpectedTriple&, const ExpectedTriple&) = default;
};

struct ConstructionSpecimen {
  std::string name;
  PeriodicGraph instance;
  ExpectedTriple expected;
  Provenance provenance = Provenance::kFullySpecified;
  std::vector<int> steps;  // circulant steps, empty otherwise
};

// Petersen vertex indices in label order.
namespace petersen {
enum : int { a, b, c, d, e, f, g, h, i, j };
inline constexpr int kOuter[5] = {a, b, c, d, e};
inline constexpr int kInner[5] = {f, g, h, i, j};
}  // namespace petersen

// Q3 on 3-bit strings; G_t holds the four edges flipping label character t.
inline ConstructionSpecimen q3_rotation() {
  Graph q = hypercube(3);
  std::vector<Graph> snaps;
  for (int t = 0; t < 3; ++t) {
    Graph g(8);
    for (const Edge& e : q.edges())
      if ((e.u ^ e.v) == (1 << (2 - t))) g.add_edge(e.u, e.v);
    g.set_labels(q.labels());
    snaps.push_back(std::move(g));
  }
  PeriodicGraph pg(std::move(snaps));
  pg.set_labels(q.labels());
  return {"q3_rotation", pg, {2, std::nullopt, 3}, Provenance::kFullySpecified, {}};
}

// Two 4-cycles (v,a1,a2,a3) and (v,b1,b2,b3) sharing v; the first half of
// the period drops a1a2, the second half drops b1b2.
inline Graph bowtie_graph() {
  enum { v, a1, a2, a3, b1, b2, b3 };
  Graph g(7, {{v, a1}, {a1, a2}, {a2, a3}, {a3, v},
              {v, b1}, {b1, b2}, {b2, b3}, {b3, v}});
  g.set_labels({"v", "a1", "a2", "a3", "b1", "b2", "b3"});
  return g;
}

inline ConstructionSpecimen bowtie_221() {
  Graph g = bowtie_graph();
  Graph first = g;
  first.remove_edge(1, 2);
  Graph second = g;
  second.remove_edge(4, 5);
  PeriodicGraph pg({first, first, first, second, second, second});
  pg.set_labels(g.labels());
  return {"bowtie_221", pg, {2, 2, 1}, Provenance::kFullySpecified, {}};
}

namespace detail {

inline std::vector<std::string> petersen_labels_plus(
    std::initializer_list<const char*> extra) {
  std::vector<std::string> ls = petersen_graph().labels();
  for (const char* s : extra) ls.emplace_back(s);
  return ls;
}

inline Graph widen(const Graph& g, int n) {
  Graph out(n);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  return out;
}

}  // namespace detail

// Petersen plus apex x (vertex 10), period 50. At t = 5j the snapshot is
// Petersen + {x, w_j} with w_j the j-th vertex in label order; otherwise it
// is the outer cycle, the five spokes and {a, x}.
inline ConstructionSpecimen petersen_132() {
  using namespace petersen;
  const int x = 10;
  Graph h(11);
  for (int k = 0; k < 5; ++k) {
    h.add_edge(kOuter[k], kOuter[(k + 1) % 5]);
    h.add_edge(kOuter[k], kInner[k]);
  }
  h.add_edge(a, x);
  std::vector<Graph> snaps;
  for (int t = 0; t < 50; ++t) {
    if (t % 5 == 0) {
      Graph g = detail::widen(petersen_graph(), 11);
      g.add_edge(x, t / 5);
      snaps.push_back(std::move(g));
    } else {
      snaps.push_back(h);
    }
  }
  PeriodicGraph pg(std::move(snaps));
  pg.set_labels(detail::petersen_labels_plus({"x"}));
  return {"petersen_132", pg, {1, 3, 2}, Provenance::kFullySpecified, {}};
}

// Footprint: Petersen, x joined to the outer cycle, y joined to the inner
// cycle. Period 55. At t = 11j the snapshot is Petersen + {x, outer_j} +
// {y, inner_j}; otherwise a spanning tree: the BFS tree of Petersen from a
// with {x, a} and {y, f}.
inline ConstructionSpecimen petersen_231() {
  using namespace petersen;
  const int x = 10;
  const int y = 11;
  Graph tree = detail::widen(bfs_tree(petersen_graph(), a), 12);
  tree.add_edge(x, a);
  tree.add_edge(y, f);
  detail::require(is_tree(tree) && eccentricity(tree, a) <= 4,
                  ErrorCode::kConstructionCheck,
                  "petersen_231 tree has no vertex within distance 4 of all");
  std::vector<Graph> snaps;
  for (int t = 0; t < 55; ++t) {
    if (t % 11 == 0) {
      Graph g = detail::widen(petersen_graph(), 12);
      g.add_edge(x, kOuter[t / 11]);
      g.add_edge(y, kInner[t / 11]);
      snaps.push_back(std::move(g));
    } else {
      snaps.push_back(tree);
    }
  }
  PeriodicGraph pg(std::move(snaps));
  pg.set_labels(detail::petersen_labels_plus({"x", "y"}));
  return {"petersen_231", pg, {2, 3, 1}, Provenance::kFullySpecified, {}};
}

// Footprint Petersen. The BFS tree T from the cover runs for r(T)+1
// snapshots, then each remaining cover tree appears once.
inline ConstructionSpecimen petersen_311() {
  Graph pet = petersen_graph();
  std::vector<Graph> cover = spanning_tree_cover(pet);
  const Graph& t0 = cover.front();
  std::vector<Graph> snaps(radius(t0) + 1, t0);
  snaps.insert(snaps.end(), cover.begin() + 1, cover.end());
  PeriodicGraph pg(std::move(snaps));
  pg.set_labels(pet.labels());
  return {"petersen_311", pg, {3, 1, 1}, Provenance::kFullySpecified, {}};
}

inline constexpr int kCirculantOrder = 11;

// Steps found by the circulant search; see the search module.
inline const std::vector<int>& default_circulant_steps() {
  static const std::vector<int> steps{5, 2, 3, 1, 4};
  return steps;
}

// G_t is the cycle on Z_11 joining u and u + s_t.
inline ConstructionSpecimen circulant_123(const std::vector<int>& steps) {
  const int p = static_cast<int>(steps.size());
  auto check = [](bool ok, const std::string& what) {
    detail::require(ok, ErrorCode::kConstructionCheck, "circulant_123: " + what);
  };
  check(p >= 5 && p % 2 == 1, "period must be odd and >= 5");
  std::set<int> used;
  for (int t = 0; t < p; ++t) {
    check(steps[t] >= 1 && steps[t] <= 5, "steps must lie in 1..5");
    check(steps[t] != steps[(t + 1) % p], "consecutive steps must differ");
    used.insert(steps[t]);
  }
  check(used.size() == 5, "steps must include all of 1..5");
  std::vector<Graph> snaps;
  for (int s : steps) snaps.push_back(circulant_cycle(kCirculantOrder, s));
  return {"circulant_123", PeriodicGraph(std::move(snaps)), {1, 2, 3},
          Provenance::kReconstructionRequired, steps};
}

inline ConstructionSpecimen circulant_123() {
  return circulant_123(default_circulant_steps());
}

// Appends `extra_pairs` copies of the last two snapshots.
inline ConstructionSpecimen extend_odd(const ConstructionSpecimen& base,
                                       int extra_pairs) {
  detail::require(!base.steps.empty(), ErrorCode::kInvalidArgument,
                  "extend_odd needs a circulant specimen");
  detail::require(extra_pairs >= 0, ErrorCode::kInvalidArgument,
                  "extra_pairs must be >= 0");
  if (extra_pairs == 0) return base;
  std::vector<int> steps = base.steps;
  const int p = static_cast<int>(steps.size());
  for (int i = 0; i < extra_pairs; ++i) {
    steps.push_back(base.steps[p - 2]);
    steps.push_back(base.steps[p - 1]);
  }
  ConstructionSpecimen out = circulant_123(steps);
  out.expected = base.expected;
  bool before = has_k_temporal_corner(base.instance, 2);
  detail::require(before || !has_k_temporal_corner(out.instance, 2),
                  ErrorCode::kConstructionCheck,
                  "extend_odd introduced a 2-temporal corner");
  return out;
}

// Constant sequence: footprint, snapshots and the periodic graph share c(G).
inline ConstructionSpecimen constant_specimen(const std::string& name,
                                              const Graph& g, int p, int c) {
  PeriodicGraph pg = PeriodicGraph::constant(g, p);
  if (g.has_labels()) pg.set_labels(g.labels());
  return {name, pg, {c, c, c}, Provenance::kFullySpecified, {}};
}

inline ConstructionSpecimen diagonal_111() {
  return constant_specimen("diagonal_111", path_graph(3), 2, 1);
}
inline ConstructionSpecimen diagonal_222() {
  return constant_specimen("diagonal_222", cycle_graph(4), 2, 2);
}
inline ConstructionSpecimen diagonal_333() {
  return constant_specimen("diagonal_333", petersen_graph(), 2, 3);
}

// The retract footprint: C4 (a,b,c,d) with u adjacent to b and c.
inline Graph retract_footprint() {
  enum { a, b, c, d, u };
  Graph g(5, {{a, b}, {b, c}, {c, d}, {d, a}, {b, u}, {u, c}});
  g.set_labels({"a", "b", "c", "d", "u"});
  return g;
}

inline std::vector<std::string> construction_names() {
  return {"q3_rotation",  "bowtie_221",   "petersen_132", "petersen_231",
          "petersen_311", "circulant_123", "diagonal_111", "diagonal_222",
          "diagonal_333"};
}

inline ConstructionSpecimen make_construction(const std::string& name) {
  static const std::vector<std::pair<std::string, std::function<ConstructionSpecimen()>>>
      table{{"q3_rotation", [] { return q3_rotation(); }},
            {"bowtie_221", [] { return bowtie_221(); }},
            {"petersen_132", [] { return petersen_132(); }},
            {"petersen_231", [] { return petersen_231(); }},
            {"petersen_311", [] { return petersen_311(); }},
            {"circulant_123", [] { return circulant_123(); }},
            {"diagonal_111", [] { return diagonal_111(); }},
            {"diagonal_222", [] { return diagonal_222(); }},
            {"diagonal_333", [] { return diagonal_333(); }}};
  for (const auto& [key, make] : table)
    if (key == name) return make();
  detail::fail(ErrorCode::kInvalidArgument, "unknown construction: " + name);
}

}  // namespace percop

#endif  // PERCOP_CONSTRUCTIONS_HPP_
