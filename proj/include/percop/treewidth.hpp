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

#ifndef PERCOP_TREEWIDTH_HPP_
#define PERCOP_TREEWIDTH_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "percop/error.hpp"
#include "percop/graph.hpp"
#include "percop/periodic.hpp"
#include "percop/solver.hpp"
#include "percop/vertex_set.hpp"

namespace percop {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree;  // edges between bag indices

  int width() const {
    int w = 0;
    for (const VertexSet& b : bags) w = std::max(w, b.size());
    return w - 1;
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [x, y] : tree) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }
};

// Human-readable list of violated conditions; empty iff td is a tree
// decomposition of g.
inline std::vector<std::string> decomposition_violations(
    const TreeDecomposition& td, const Graph& g) {
  std::vector<std::string> out;
  const int m = static_cast<int>(td.bags.size());
  if (m == 0) {
    out.push_back("no bags");
    return out;
  }
  if (static_cast<int>(td.tree.size()) != m - 1) {
    out.push_back("bag graph has " + std::to_string(td.tree.size()) +
                  " edges, a tree on " + std::to_string(m) + " bags needs " +
                  std::to_string(m - 1));
  }
  Graph t(m);
  for (auto [x, y] : td.tree) {
    if (x < 0 || y < 0 || x >= m || y >= m || x == y) {
      out.push_back("bad tree edge");
      return out;
    }
    t.add_edge(x, y);
  }
  if (!is_tree(t)) out.push_back("bag graph is not a tree");
  VertexSet all;
  for (const VertexSet& b : td.bags) {
    if (!b.is_subset_of(g.vertices())) out.push_back("bag holds a non-vertex");
    all |= b;
  }
  for (int v : g.vertices() - all) {
    out.push_back("vertex " + std::to_string(v) + " is in no bag");
  }
  for (const Edge& e : g.edges()) {
    bool covered = std::any_of(td.bags.begin(), td.bags.end(), [&](VertexSet b) {
      return b.contains(e.u) && b.contains(e.v);
    });
    if (!covered) {
      out.push_back("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    "} is in no bag");
    }
  }
  if (!is_tree(t)) return out;
  for (int v : all) {
    VertexSet holding;
    for (int x = 0; x < m; ++x)
      if (td.bags[x].contains(v)) holding.insert(x);
    if (!is_connected(t.induced(holding))) {
      out.push_back("bags holding vertex " + std::to_string(v) +
                    " are not connected");
    }
  }
  return out;
}

inline bool is_valid(const TreeDecomposition& td, const Graph& g) {
  return decomposition_violations(td, g).empty();
}

inline void validate(const TreeDecomposition& td, const Graph& g) {
  auto v = decomposition_violations(td, g);
  if (v.empty()) return;
  std::string msg = "invalid tree decomposition:";
  for (const auto& s : v) msg += " " + s + ";";
  detail::fail(ErrorCode::kInvalidDecomposition, msg);
}

// Decomposition induced by eliminating vertices in `order`: the bag of v is
// v plus its later neighbors in the filled graph.
inline TreeDecomposition decomposition_from_ordering(
    const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<VertexSet> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    VertexSet later;
    for (int w : adj[v])
      if (pos[w] > i) later.insert(w);
    for (int a : later)
      for (int b : later)
        if (a != b) adj[a].insert(b);
    td.bags[i] = later | VertexSet::single(v);
    int parent = -1;
    for (int w : later)
      if (parent < 0 || pos[w] < parent) parent = pos[w];
    if (parent < 0) {
      roots.push_back(i);
    } else {
      td.tree.emplace_back(i, parent);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) {
    td.tree.emplace_back(roots[r - 1], roots[r]);
  }
  return td;
}

inline constexpr int kMaxExactTreewidth = 13;

struct TreewidthResult {
  int width = 0;
  std::vector<int> ordering;
  TreeDecomposition decomposition;
};

// Exact treewidth by dynamic programming over eliminated vertex sets:
// TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v)
// are the vertices outside S + v reachable from v through S.
inline TreewidthResult exact_treewidth(const Graph& g) {
  const int n = g.order();
  detail::require(n >= 1, ErrorCode::kInvalidArgument, "graph must have a vertex");
  detail::require(n <= kMaxExactTreewidth, ErrorCode::kLimitExceeded,
                  "exact treewidth limited to n <= 13");
  const VertexSet all = g.vertices();
  auto q_size = [&](VertexSet s, int v) {
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    VertexSet out;
    while (!frontier.empty()) {
      VertexSet next;
      for (int u : frontier) next |= g.neighbors(u);
      next -= seen;
      seen |= next;
      out |= next - s;
      frontier = next & s;
    }
    return out.size();
  };
  const std::size_t full = std::size_t{1} << n;
  std::vector<int> tw(full, std::numeric_limits<int>::max());
  std::vector<std::int8_t> last(full, -1);
  tw[0] = std::numeric_limits<int>::min();
  for (std::size_t s = 1; s < full; ++s) {
    VertexSet set = VertexSet::from_bits(s);
    for (int v : set) {
      VertexSet rest = set - VertexSet::single(v);
      int val = std::max(tw[rest.bits()], q_size(rest, v));
      if (val < tw[s]) {
        tw[s] = val;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  TreewidthResult res;
  res.width = tw[all.bits()];
  std::vector<int> rev;
  for (VertexSet s = all; !s.empty(); s.erase(last[s.bits()])) {
    rev.push_back(last[s.bits()]);
  }
  res.ordering.assign(rev.rbegin(), rev.rend());
  res.decomposition = decomposition_from_ordering(g, res.ordering);
  return res;
}

// Every bag has k+1 vertices and adjacent bags share exactly k.
inline bool is_smooth(const TreeDecomposition& td) {
  const int k = td.width();
  for (const VertexSet& b : td.bags)
    if (b.size() != k + 1) return false;
  for (auto [x, y] : td.tree)
    if ((td.bags[x] & td.bags[y]).size() != k) return false;
  return true;
}

namespace detail {

// Mutable bag tree used while smoothing.
struct BagTree {
  std::vector<VertexSet> bags;
  std::vector<std::vector<int>> adj;
  std::vector<bool> alive;

  explicit BagTree(const TreeDecomposition& td)
      : bags(td.bags), adj(td.adjacency()), alive(td.bags.size(), true) {}

  void unlink(int x, int y) {
    std::erase(adj[x], y);
    std::erase(adj[y], x);
  }
  void link(int x, int y) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  // Merges x into y.
  void contract(int x, int y) {
    unlink(x, y);
    for (int z : std::vector<int>(adj[x])) {
      unlink(x, z);
      link(y, z);
    }
    alive[x] = false;
  }
  int add(VertexSet b) {
    bags.push_back(b);
    adj.emplace_back();
    alive.push_back(true);
    return static_cast<int>(bags.size()) - 1;
  }

  // Renumbers live bags in BFS order from the lowest live index.
  TreeDecomposition freeze() const {
    const int m = static_cast<int>(bags.size());
    std::vector<int> id(m, -1);
    TreeDecomposition td;
    for (int s = 0; s < m; ++s) {
      if (!alive[s] || id[s] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      id[s] = static_cast<int>(td.bags.size());
      td.bags.push_back(bags[s]);
      if (id[s] > 0) td.tree.emplace_back(id[s] - 1, id[s]);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        std::vector<int> nb = adj[x];
        std::sort(nb.begin(), nb.end());
        for (int y : nb) {
          if (id[y] >= 0) continue;
          id[y] = static_cast<int>(td.bags.size());
          td.bags.push_back(bags[y]);
          td.tree.emplace_back(id[x], id[y]);
          q.push(y);
        }
      }
    }
    return td;
  }
};

}  // namespace detail

// Same-width decomposition with all bags of size k+1 and adjacent
// intersections of size exactly k.
inline TreeDecomposition smooth(const TreeDecomposition& input, const Graph& g) {
  validate(input, g);
  const int k = input.width();
  detail::BagTree bt(input);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < static_cast<int>(bt.bags.size()) && !changed; ++x) {
      if (!bt.alive[x]) continue;
      for (int y : bt.adj[x]) {
        if (bt.bags[x].is_subset_of(bt.bags[y])) {
          bt.contract(x, y);
          changed = true;
        } else if (bt.bags[y].is_subset_of(bt.bags[x])) {
          bt.contract(y, x);
          changed = true;
        }
        if (changed) break;
      }
    }
    for (int x = 0; x < static_cast<int>(bt.bags.size()) && !changed; ++x) {
      if (!bt.alive[x] || bt.bags[x].size() == k + 1 || bt.adj[x].empty()) continue;
      int y = bt.adj[x].front();
      bt.bags[x].insert((bt.bags[y] - bt.bags[x]).front());
      changed = true;
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < static_cast<int>(bt.bags.size()); ++x) {
    if (!bt.alive[x]) continue;
    for (int y : bt.adj[x])
      if (x < y) edges.emplace_back(x, y);
  }
  for (auto [x, y] : edges) {
    VertexSet drop = bt.bags[x] - bt.bags[y];
    VertexSet gain = bt.bags[y] - bt.bags[x];
    if (drop.size() <= 1) continue;
    bt.unlink(x, y);
    VertexSet cur = bt.bags[x];
    int prev = x;
    auto d = drop.to_vector();
    auto a = gain.to_vector();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      cur.erase(d[i]);
      cur.insert(a[i]);
      int mid = bt.add(cur);
      bt.link(prev, mid);
      prev = mid;
    }
    bt.link(prev, y);
  }
  TreeDecomposition out = bt.freeze();
  validate(out, g);
  detail::require(out.width() == k && is_smooth(out), ErrorCode::kInvalidDecomposition,
                  "smoothing failed to reach a smooth decomposition");
  return out;
}

// ---------------------------------------------------------------------------
// The bag strategy with width+1 cops.

// Cops hold a bag B_x. Once the robber's side x1 is known, the one cop on
// B_x - B_x1 walks along foremost journeys to the vertex of B_x1 - B_x while
// the others hold B_x & B_x1. Memory packs x and x1 + 1 (0 for none).
class BagPolicy final : public CopPolicy {
 public:
  BagPolicy(PeriodicGraph pg, TreeDecomposition td)
      : pg_(std::move(pg)), td_(std::move(td)), adj_(td_.adjacency()) {
    Graph f = footprint(pg_);
    validate(td_, f);
    detail::require(is_smooth(td_), ErrorCode::kInvalidDecomposition,
                    "bag strategy needs a smooth decomposition");
    region_.resize(td_.bags.size());
    for (int x = 0; x < static_cast<int>(td_.bags.size()); ++x) {
      region_[x].resize(adj_[x].size());
      for (std::size_t i = 0; i < adj_[x].size(); ++i) {
        region_[x][i] = subtree_vertices(adj_[x][i], x);
      }
    }
  }

  int cops() const override { return td_.width() + 1; }
  PolicyOrigin origin() const override { return PolicyOrigin::kBagStrategy; }

  PolicyMove start() const override {
    return {pack(0, -1), td_.bags[0].to_vector()};
  }

  PolicyMove decide(std::uint64_t memory, int layer, const CopSet& cops,
                    int robber) const override {
    for (std::size_t i = 0; i < cops.size(); ++i) {
      if (pg_.closed_neighborhood(layer, cops[i]).contains(robber)) {
        CopSet next = cops;
        next[i] = robber;
        std::sort(next.begin(), next.end());
        return {memory, next};
      }
    }
    int x = static_cast<int>(memory >> 32);
    int x1 = static_cast<int>(memory & 0xFFFFFFFFU) - 1;
    VertexSet occupied;
    for (int c : cops) occupied.insert(c);
    if (x1 >= 0 && occupied == td_.bags[x1]) {
      x = x1;
      x1 = -1;
    }
    if (x1 < 0) {
      for (std::size_t i = 0; i < adj_[x].size(); ++i) {
        if (region_[x][i].contains(robber)) x1 = adj_[x][i];
      }
      if (x1 < 0) return {pack(x, -1), cops};
    }
    VertexSet keep = td_.bags[x] & td_.bags[x1];
    int target = (td_.bags[x1] - td_.bags[x]).front();
    CopSet next;
    int traveler = -1;
    for (int c : cops) {
      if (keep.contains(c)) {
        keep.erase(c);
        next.push_back(c);
      } else {
        traveler = c;
      }
    }
    if (traveler >= 0) {
      int step = traveler;
      auto j = foremost_journey(pg_, layer, traveler, target);
      if (j && j->vertices.size() > 1) step = j->vertices[1];
      next.push_back(step);
    }
    std::sort(next.begin(), next.end());
    return {pack(x, x1), next};
  }

  const TreeDecomposition& decomposition() const { return td_; }

 private:
  static std::uint64_t pack(int x, int x1) {
    return (static_cast<std::uint64_t>(x) << 32) |
           static_cast<std::uint64_t>(x1 + 1);
  }

  // Vertices in bags of the component of T - avoid containing `root`.
  VertexSet subtree_vertices(int root, int avoid) const {
    VertexSet out;
    std::vector<std::pair<int, int>> stack{{root, avoid}};
    while (!stack.empty()) {
      auto [x, from] = stack.back();
      stack.pop_back();
      out |= td_.bags[x];
      for (int y : adj_[x])
        if (y != from) stack.emplace_back(y, x);
    }
    return out;
  }

  PeriodicGraph pg_;
  TreeDecomposition td_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<VertexSet>> region_;
};

inline BagPolicy bag_strategy(const PeriodicGraph& pg, const TreeDecomposition& td) {
  return BagPolicy(pg, td);
}

// Smooth exact decomposition of the footprint and its bag policy.
inline BagPolicy bag_strategy(const PeriodicGraph& pg) {
  Graph f = footprint(pg);
  return BagPolicy(pg, smooth(exact_treewidth(f).decomposition, f));
}

}  // namespace percop

#endif  // PERCOP_TREEWIDTH_HPP_
