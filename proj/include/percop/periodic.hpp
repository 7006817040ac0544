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

#ifndef PERCOP_PERIODIC_HPP_
#define PERCOP_PERIODIC_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "percop/error.hpp"
#include "percop/graph.hpp"
#include "percop/vertex_set.hpp"

namespace percop {

// [i]_p: the representative of i in Z_p, also for negative i.
inline int layer_of(long long i, int p) {
  long long r = i % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

/// A periodic temporal graph <G_0, ..., G_{p-1}> on a shared vertex set.
///
/// Snapshot access is modulo the period. Vertex labels, when present, live
/// on the periodic graph and are mirrored onto every snapshot.
class PeriodicGraph {
 public:
  PeriodicGraph() = default;
  explicit PeriodicGraph(std::vector<Graph> snapshots)
      : snapshots_(std::move(snapshots)) {
    detail::require(!snapshots_.empty(), ErrorCode::kInvalidArgument,
                    "period must be at least 1");
    const int n = snapshots_.front().order();
    for (const Graph& g : snapshots_) {
      detail::require(g.order() == n, ErrorCode::kInvalidArgument,
                      "all snapshots must share the vertex count");
    }
    set_labels(snapshots_.front().labels());
  }

  static PeriodicGraph constant(const Graph& g, int period) {
    detail::require(period >= 1, ErrorCode::kInvalidArgument,
                    "period must be at least 1");
    return PeriodicGraph(std::vector<Graph>(period, g));
  }

  int order() const { return snapshots_.front().order(); }
  int period() const { return static_cast<int>(snapshots_.size()); }
  VertexSet vertices() const { return VertexSet::prefix(order()); }

  const Graph& snapshot(long long t) const {
    return snapshots_[layer_of(t, period())];
  }
  std::span<const Graph> snapshots() const { return snapshots_; }

  // N_t[u]
  VertexSet closed_neighborhood(long long t, int u) const {
    return snapshot(t).closed_neighborhood(u);
  }

  const std::vector<std::string>& labels() const {
    return snapshots_.front().labels();
  }
  void set_labels(const std::vector<std::string>& labels) {
    for (Graph& g : snapshots_) g.set_labels(labels);
  }

  friend bool operator==(const PeriodicGraph&, const PeriodicGraph&) = default;

 private:
  std::vector<Graph> snapshots_;
};

inline Graph footprint(const PeriodicGraph& pg) {
  Graph g(pg.order());
  for (const Graph& s : pg.snapshots())
    for (const Edge& e : s.edges()) g.add_edge(e.u, e.v);
  g.set_labels(pg.labels());
  return g;
}

struct TemporalNode {
  int t = 0;
  int v = 0;

  friend constexpr auto operator<=>(const TemporalNode&,
                                    const TemporalNode&) = default;
};

// Directed layered graph on Z_p x V: (t,u) -> ([t+1]_p, v) iff v in N_t[u].
class Arena {
 public:
  Arena(int period, int order, std::vector<std::vector<VertexSet>> out)
      : period_(period), order_(order), out_(std::move(out)) {}

  int period() const { return period_; }
  int order() const { return order_; }

  // Projection of the out-neighborhood of (t,u) onto V.
  VertexSet out_vertices(int t, int u) const { return out_[t][u]; }

  bool has_edge(TemporalNode from, TemporalNode to) const {
    return to.t == layer_of(from.t + 1, period_) &&
           out_[from.t][from.v].contains(to.v);
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& layer : out_)
      for (VertexSet s : layer) total += s.size();
    return total;
  }

 private:
  int period_;
  int order_;
  std::vector<std::vector<VertexSet>> out_;
};

inline Arena build_arena(const PeriodicGraph& pg) {
  std::vector<std::vector<VertexSet>> out(pg.period());
  for (int t = 0; t < pg.period(); ++t) {
    out[t].resize(pg.order());
    for (int u = 0; u < pg.order(); ++u) {
      out[t][u] = pg.closed_neighborhood(t, u);
    }
  }
  return Arena(pg.period(), pg.order(), std::move(out));
}

// Valid for periodic graphs: temporal connectivity is footprint
// connectivity.
inline bool is_temporally_connected(const PeriodicGraph& pg) {
  return is_connected(footprint(pg));
}

// A time-respecting walk: vertices[i] -> vertices[i+1] uses N_{departure+i}.
struct Journey {
  long long departure = 0;
  std::vector<int> vertices;

  long long arrival() const {
    return departure + static_cast<long long>(vertices.size()) - 1;
  }
};

// Earliest-arrival journey from u (at time t_start) to v, searched within n*p
// steps. Ties between predecessors go to the lowest vertex index.
inline std::optional<Journey> foremost_journey(const PeriodicGraph& pg,
                                               long long t_start, int u,
                                               int v) {
  const int n = pg.order();
  const long long horizon = static_cast<long long>(n) * pg.period();
  std::vector<std::vector<int>> parent;
  VertexSet reached = VertexSet::single(u);
  long long steps = 0;
  while (!reached.contains(v)) {
    if (steps == horizon) return std::nullopt;
    std::vector<int> from(n, -1);
    VertexSet next;
    for (int x : reached) {
      for (int y : pg.closed_neighborhood(t_start + steps, x)) {
        if (from[y] == -1) from[y] = x;
        next.insert(y);
      }
    }
    parent.push_back(std::move(from));
    reached = next;
    ++steps;
  }
  Journey j;
  j.departure = t_start;
  j.vertices.assign(steps + 1, v);
  for (long long i = steps; i > 0; --i) {
    j.vertices[i - 1] = parent[i - 1][j.vertices[i]];
  }
  return j;
}

struct InducedSubgraph {
  PeriodicGraph graph;
  std::vector<int> original;  // original[new_index] = old vertex
};

inline InducedSubgraph induced(const PeriodicGraph& pg, VertexSet keep) {
  keep &= pg.vertices();
  detail::require(!keep.empty(), ErrorCode::kInvalidArgument,
                  "induced subgraph needs a nonempty vertex set");
  std::vector<Graph> snaps;
  for (const Graph& g : pg.snapshots()) snaps.push_back(g.induced(keep));
  return {PeriodicGraph(std::move(snaps)), keep.to_vector()};
}

// Appends a path of target_n - n new vertices hanging off `attach`; the
// whole path is present in every snapshot.
inline PeriodicGraph pad(const PeriodicGraph& pg, int target_n, int attach) {
  detail::require(pg.period() >= 2, ErrorCode::kInvalidArgument,
                  "padding requires period >= 2");
  detail::require(target_n >= pg.order(), ErrorCode::kInvalidArgument,
                  "padding target below current vertex count");
  detail::require(attach >= 0 && attach < pg.order(),
                  ErrorCode::kInvalidArgument, "attach vertex out of range");
  if (target_n == pg.order()) return pg;
  std::vector<Graph> snaps;
  for (const Graph& g : pg.snapshots()) {
    Graph h(target_n);
    for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
    int prev = attach;
    for (int w = pg.order(); w < target_n; ++w) {
      h.add_edge(prev, w);
      prev = w;
    }
    snaps.push_back(std::move(h));
  }
  PeriodicGraph out(std::move(snaps));
  if (!pg.labels().empty()) {
    std::vector<std::string> ls = pg.labels();
    for (int w = pg.order(); w < target_n; ++w) {
      ls.push_back("p" + std::to_string(w - pg.order() + 1));
    }
    out.set_labels(ls);
  }
  return out;
}

// Retraction of the padded graph onto its first `original_n` vertices that
// collapses the padding path onto `attach`.
inline std::vector<int> padding_collapse_map(int padded_n, int original_n,
                                             int attach) {
  std::vector<int> map(padded_n);
  for (int v = 0; v < padded_n; ++v) map[v] = v < original_n ? v : attach;
  return map;
}

}  // namespace percop

#endif  // PERCOP_PERIODIC_HPP_
