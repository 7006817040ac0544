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

#ifndef PERCOP_GRAPH_HPP_
#define PERCOP_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "percop/error.hpp"
#include "percop/vertex_set.hpp"

namespace percop {

struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on 0..n-1. Reflexivity is a game-rule
// convention: no self-loops are stored, closed neighborhoods add the vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = VertexSet::kCapacity;

  Graph() = default;
  explicit Graph(int n) : adj_(check_order(n)) {}
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::prefix(order()); }

  std::size_t size() const {
    std::size_t twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    detail::require(u != v, ErrorCode::kInvalidArgument,
                    "self-loop forbidden");
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }

  VertexSet neighbors(int u) const { return adj_[u]; }
  VertexSet closed_neighborhood(int u) const {
    return adj_[u] | VertexSet::single(u);
  }
  int degree(int u) const { return adj_[u].size(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
      for (int v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  void set_labels(std::vector<std::string> labels) {
    detail::require(labels.empty() || labels.size() == adj_.size(),
                    ErrorCode::kInvalidArgument,
                    "label count must equal vertex count");
    labels_ = std::move(labels);
  }
  std::string label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  // Subgraph induced by `keep`, relabeled 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const {
    std::vector<int> old_of = keep.to_vector();
    std::vector<int> new_of(order(), -1);
    for (int i = 0; i < static_cast<int>(old_of.size()); ++i) {
      new_of[old_of[i]] = i;
    }
    Graph out(static_cast<int>(old_of.size()));
    for (const Edge& e : edges()) {
      if (keep.contains(e.u) && keep.contains(e.v)) {
        out.add_edge(new_of[e.u], new_of[e.v]);
      }
    }
    if (has_labels()) {
      std::vector<std::string> ls;
      for (int v : old_of) ls.push_back(labels_[v]);
      out.set_labels(std::move(ls));
    }
    return out;
  }

  // Same edge structure (labels ignored).
  bool same_edges(const Graph& other) const { return adj_ == other.adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t check_order(int n) {
    detail::require(n >= 0 && n <= kMaxVertices, ErrorCode::kLimitExceeded,
                    "graph order must be in [0, 64], got " + std::to_string(n));
    return static_cast<std::size_t>(n);
  }
  void check_vertex(int v) const {
    detail::require(v >= 0 && v < order(), ErrorCode::kInvalidArgument,
                    "vertex " + std::to_string(v) + " out of range");
  }

  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Named graphs.

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

// Cycle on Z_n joining u to u + step.
inline Graph circulant_cycle(int n, int step) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    int v = (u + step) % n;
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

// Vertices a..j: outer cycle (a,b,c,d,e), spokes af bg ch di ej, inner
// cycle (f,h,j,g,i).
inline Graph petersen_graph() {
  enum { a, b, c, d, e, f, g, h, i, j };
  Graph p(10, {{a, b}, {b, c}, {c, d}, {d, e}, {e, a},
               {a, f}, {b, g}, {c, h}, {d, i}, {e, j},
               {f, h}, {h, j}, {j, g}, {g, i}, {i, f}});
  p.set_labels({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"});
  return p;
}

// Vertex i is labeled by its d-bit binary expansion, most significant bit
// first, so label character t corresponds to bit (d - 1 - t).
inline Graph hypercube(int d) {
  const int n = 1 << d;
  Graph g(n);
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) {
    std::string s;
    for (int t = 0; t < d; ++t) s += ((u >> (d - 1 - t)) & 1) ? '1' : '0';
    labels.push_back(s);
    for (int b = 0; b < d; ++b) {
      int v = u ^ (1 << b);
      if (u < v) g.add_edge(u, v);
    }
  }
  g.set_labels(std::move(labels));
  return g;
}

// ---------------------------------------------------------------------------
// Composition.

enum class ComposeMode { kUnion, kJoin };

// Places g2 on vertices offset..offset+|g2|-1 next to g1 on 0..|g1|-1. Join
// additionally connects every vertex of g1 to every vertex of g2.
inline Graph compose(const Graph& g1, const Graph& g2, ComposeMode mode,
                     int offset) {
  detail::require(offset >= g1.order(), ErrorCode::kVertexCollision,
                  "vertex collision: offset " + std::to_string(offset) +
                      " overlaps the first graph's range");
  Graph out(offset + g2.order());
  for (const Edge& e : g1.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) out.add_edge(e.u + offset, e.v + offset);
  if (mode == ComposeMode::kJoin) {
    for (int x = 0; x < g1.order(); ++x)
      for (int y = 0; y < g2.order(); ++y) out.add_edge(x, y + offset);
  }
  if (g1.has_labels() || g2.has_labels()) {
    std::vector<std::string> ls(out.order());
    for (int v = 0; v < out.order(); ++v) ls[v] = std::to_string(v);
    for (int v = 0; v < g1.order(); ++v) ls[v] = g1.label(v);
    for (int v = 0; v < g2.order(); ++v) ls[v + offset] = g2.label(v);
    out.set_labels(std::move(ls));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distances and connectivity.

inline constexpr int kUnreachable = -1;

inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

inline VertexSet component_of(const Graph& g, int source) {
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier) next |= g.neighbors(u);
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet c = component_of(g, left.front());
    out.push_back(c);
    left -= c;
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.order() > 0 && component_of(g, 0) == g.vertices();
}

inline bool is_forest(const Graph& g) {
  return g.size() + components(g).size() == static_cast<std::size_t>(g.order());
}

inline bool is_tree(const Graph& g) { return is_connected(g) && is_forest(g); }

inline int eccentricity(const Graph& g, int v) {
  std::vector<int> d = bfs_distances(g, v);
  int ecc = 0;
  for (int x : d) {
    detail::require(x != kUnreachable, ErrorCode::kUndefined,
                    "eccentricity undefined on a disconnected graph");
    ecc = std::max(ecc, x);
  }
  return ecc;
}

// r(H) = min over x of max over y of d(x, y).
inline int radius(const Graph& g) {
  detail::require(is_connected(g), ErrorCode::kUndefined,
                  "radius undefined: graph is disconnected");
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, eccentricity(g, v));
  return best;
}

inline int diameter(const Graph& g) {
  detail::require(is_connected(g), ErrorCode::kUndefined,
                  "diameter undefined: graph is disconnected");
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), kUnreachable);
    std::vector<int> parent(g.order(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          int len = dist[u] + dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Domination.

inline constexpr int kMaxExactDomination = 20;

namespace detail {

inline bool dominate_with(const std::vector<VertexSet>& closed, VertexSet goal,
                          VertexSet covered, int budget) {
  if (covered == goal) return true;
  if (budget == 0) return false;
  // Some dominator must cover the lowest uncovered vertex.
  int w = (goal - covered).front();
  for (int d : closed[w]) {
    if (dominate_with(closed, goal, covered | closed[d], budget - 1)) {
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Minimum size of a set D with the union of N[d] over D equal to V.
inline int domination_number(const Graph& g) {
  detail::require(g.order() <= kMaxExactDomination, ErrorCode::kLimitExceeded,
                  "exact domination limit exceeded (n = " +
                      std::to_string(g.order()) + " > 20)");
  std::vector<VertexSet> closed(g.order());
  for (int v = 0; v < g.order(); ++v) closed[v] = g.closed_neighborhood(v);
  for (int k = 0; k <= g.order(); ++k) {
    if (detail::dominate_with(closed, g.vertices(), {}, k)) return k;
  }
  return g.order();
}

// ---------------------------------------------------------------------------
// Retractions and dismantling.

struct Retraction {
  Graph source;
  VertexSet target;
  std::vector<int> map;
};

// True iff `map` is the identity on `target`, lands in `target`, and sends
// every edge to an edge of source[target] or collapses it.
inline bool check_retraction(const Retraction& r) {
  const int n = r.source.order();
  detail::require(static_cast<int>(r.map.size()) == n,
                  ErrorCode::kInvalidArgument,
                  "retraction map is not total on the source vertices");
  for (int h : r.map) {
    detail::require(h >= 0 && h < n, ErrorCode::kInvalidArgument,
                    "retraction image outside the vertex set");
  }
  for (int v = 0; v < n; ++v) {
    if (!r.target.contains(r.map[v])) return false;
    if (r.target.contains(v) && r.map[v] != v) return false;
  }
  for (const Edge& e : r.source.edges()) {
    int a = r.map[e.u];
    int b = r.map[e.v];
    if (a != b && !r.source.has_edge(a, b)) return false;
  }
  return true;
}

// Number of vertices left once no corner remains (1 for dismantlable
// graphs); used as a graded copwin-ness measure by the search module.
inline int dismantle_residue(const Graph& g) {
  VertexSet alive = g.vertices();
  bool progress = true;
  while (alive.size() > 1 && progress) {
    progress = false;
    for (int u : alive) {
      VertexSet nu = g.closed_neighborhood(u) & alive;
      for (int v : nu - VertexSet::single(u)) {
        if (nu.is_subset_of(g.closed_neighborhood(v) & alive)) {
          alive.erase(u);
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
  }
  return alive.size();
}

// Repeatedly deletes a vertex u with N[u] inside N[v] for some other v.
// True iff a single vertex remains; the empty graph is not dismantlable.
inline bool dismantle(const Graph& g) {
  return g.order() > 0 && dismantle_residue(g) == 1;
}

// ---------------------------------------------------------------------------
// Spanning trees.

namespace detail {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace detail

// BFS tree rooted at `root`; parents are chosen as the first discovered.
inline Graph bfs_tree(const Graph& g, int root) {
  Graph t(g.order());
  VertexSet seen = VertexSet::single(root);
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u) - seen) {
      seen.insert(v);
      t.add_edge(u, v);
      q.push(v);
    }
  }
  t.set_labels(g.labels());
  return t;
}

// Spanning trees whose edge union is E(g). The first is a BFS tree from the
// lowest-index vertex of minimum eccentricity; each later tree is built by
// Kruskal with still-uncovered edges taken first.
inline std::vector<Graph> spanning_tree_cover(const Graph& g) {
  detail::require(is_connected(g), ErrorCode::kUndefined,
                  "spanning tree cover needs a connected graph");
  int center = 0;
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.order(); ++v) {
    int e = eccentricity(g, v);
    if (e < best) {
      best = e;
      center = v;
    }
  }
  std::vector<Graph> out{bfs_tree(g, center)};
  const std::vector<Edge> all = g.edges();
  std::vector<bool> covered(all.size(), false);
  auto mark = [&](const Graph& t) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (t.has_edge(all[i].u, all[i].v)) covered[i] = true;
    }
  };
  mark(out.front());
  while (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    Graph t(g.order());
    detail::DisjointSets dsu(g.order());
    for (bool pass : {false, true}) {
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (covered[i] == pass && dsu.unite(all[i].u, all[i].v)) {
          t.add_edge(all[i].u, all[i].v);
        }
      }
    }
    t.set_labels(g.labels());
    mark(t);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace percop

#endif  // PERCOP_GRAPH_HPP_
