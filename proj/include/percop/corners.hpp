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

#ifndef PERCOP_CORNERS_HPP_
#define PERCOP_CORNERS_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "percop/error.hpp"
#include "percop/periodic.hpp"
#include "percop/vertex_set.hpp"

namespace percop {

// (t, corner) is a k-temporal corner of the temporal nodes ([t+1]_p, y) for
// y in covers: corner is not a cover and N_t[corner] lies inside the union
// of N_{t+1}[y].
struct CornerWitness {
  int t = 0;
  int corner = 0;
  std::vector<int> covers;

  friend auto operator<=>(const CornerWitness&, const CornerWitness&) = default;
};

inline constexpr std::uint64_t kCornerCandidateBudget = 10'000'000;

inline bool is_corner_witness(const PeriodicGraph& pg,
                              const CornerWitness& w) {
  VertexSet covered;
  for (int y : w.covers) {
    if (y == w.corner) return false;
    covered |= pg.closed_neighborhood(w.t + 1, y);
  }
  return pg.closed_neighborhood(w.t, w.corner).is_subset_of(covered);
}

// All pairs ((t,u), v) with u != v and N_t[u] inside N_{t+1}[v]. Only v with
// u in N_{t+1}[v] can qualify, so the scan is limited to those.
inline std::vector<CornerWitness> find_temporal_corners(
    const PeriodicGraph& pg) {
  std::vector<CornerWitness> out;
  for (int t = 0; t < pg.period(); ++t) {
    for (int u = 0; u < pg.order(); ++u) {
      VertexSet nu = pg.closed_neighborhood(t, u);
      for (int v : pg.snapshot(t + 1).neighbors(u)) {
        if (nu.is_subset_of(pg.closed_neighborhood(t + 1, v))) {
          out.push_back({t, u, {v}});
        }
      }
    }
  }
  return out;
}

// Number of temporal nodes (t,u) that are temporal corners of something.
inline int count_temporal_corners(const PeriodicGraph& pg) {
  int count = 0;
  for (int t = 0; t < pg.period(); ++t) {
    for (int u = 0; u < pg.order(); ++u) {
      VertexSet nu = pg.closed_neighborhood(t, u);
      for (int v : pg.snapshot(t + 1).neighbors(u)) {
        if (nu.is_subset_of(pg.closed_neighborhood(t + 1, v))) {
          ++count;
          break;
        }
      }
    }
  }
  return count;
}

namespace detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Cover sets have min(k, n-1) distinct vertices; a smaller cover extends to
// one of this size by adding unused vertices.
inline int cover_size(int n, int k) { return std::min(k, n - 1); }

// Visits every `size`-subset of `pool` in lexicographic order, stopping
// early when `visit` returns false.
template <typename Visit>
bool for_each_subset(const std::vector<int>& pool, int size, Visit&& visit) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  const int m = static_cast<int>(pool.size());
  if (size > m) return true;
  std::vector<int> chosen(size);
  while (true) {
    for (int i = 0; i < size; ++i) chosen[i] = pool[idx[i]];
    if (!visit(chosen)) return false;
    int i = size - 1;
    while (i >= 0 && idx[i] == m - size + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void check_corner_budget(const PeriodicGraph& pg, int k) {
  detail::require(k >= 1, ErrorCode::kInvalidArgument, "k must be >= 1");
  const int n = pg.order();
  const std::uint64_t candidates =
      static_cast<std::uint64_t>(pg.period()) * n *
      binomial(n - 1, cover_size(n, k));
  detail::require(candidates <= kCornerCandidateBudget,
                  ErrorCode::kLimitExceeded,
                  "k-corner candidate budget exceeded: " +
                      std::to_string(candidates) + " > 10^7");
}

}  // namespace detail

// All k-temporal corner witnesses, covers sorted, ordered by (t, corner,
// covers).
inline std::vector<CornerWitness> find_k_temporal_corners(
    const PeriodicGraph& pg, int k) {
  detail::check_corner_budget(pg, k);
  const int n = pg.order();
  std::vector<CornerWitness> out;
  if (n < 2) return out;
  const int size = detail::cover_size(n, k);
  for (int t = 0; t < pg.period(); ++t) {
    std::vector<VertexSet> next(n);
    for (int y = 0; y < n; ++y) next[y] = pg.closed_neighborhood(t + 1, y);
    for (int x = 0; x < n; ++x) {
      VertexSet nx = pg.closed_neighborhood(t, x);
      std::vector<int> pool = (pg.vertices() - VertexSet::single(x)).to_vector();
      detail::for_each_subset(pool, size, [&](const std::vector<int>& ys) {
        VertexSet covered;
        for (int y : ys) covered |= next[y];
        if (nx.is_subset_of(covered)) out.push_back({t, x, ys});
        return true;
      });
    }
  }
  return out;
}

// Number of temporal nodes that are k-temporal corners of some cover.
inline int count_k_temporal_corners(const PeriodicGraph& pg, int k) {
  if (k == 1) return count_temporal_corners(pg);
  detail::check_corner_budget(pg, k);
  const int n = pg.order();
  if (n < 2) return 0;
  const int size = detail::cover_size(n, k);
  int count = 0;
  for (int t = 0; t < pg.period(); ++t) {
    std::vector<VertexSet> next(n);
    for (int y = 0; y < n; ++y) next[y] = pg.closed_neighborhood(t + 1, y);
    for (int x = 0; x < n; ++x) {
      VertexSet nx = pg.closed_neighborhood(t, x);
      std::vector<int> pool = (pg.vertices() - VertexSet::single(x)).to_vector();
      bool hit = !detail::for_each_subset(
          pool, size, [&](const std::vector<int>& ys) {
            VertexSet covered;
            for (int y : ys) covered |= next[y];
            return !nx.is_subset_of(covered);
          });
      if (hit) ++count;
    }
  }
  return count;
}

inline bool has_k_temporal_corner(const PeriodicGraph& pg, int k) {
  return count_k_temporal_corners(pg, k) > 0;
}

}  // namespace percop

#endif  // PERCOP_CORNERS_HPP_
