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

// Shared helpers for the test suites: random instances and brute-force
// oracles that do not reuse library code paths.

#ifndef PERCOP_TESTS_TEST_UTIL_HPP_
#define PERCOP_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "percop/graph.hpp"
#include "percop/periodic.hpp"

namespace percop::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double density) {
  while (true) {
    Graph g = random_graph(rng, n, density);
    if (is_connected(g)) return g;
  }
}

// Random periodic graph whose footprint is exactly `f`: every edge of f is
// assigned to a nonempty random set of layers.
inline PeriodicGraph random_periodic_over(std::mt19937_64& rng, const Graph& f,
                                          int p) {
  std::vector<Graph> snaps(p, Graph(f.order()));
  std::uniform_int_distribution<int> mask_dist(1, (1 << p) - 1);
  for (const Edge& e : f.edges()) {
    int mask = mask_dist(rng);
    for (int t = 0; t < p; ++t)
      if ((mask >> t) & 1) snaps[t].add_edge(e.u, e.v);
  }
  return PeriodicGraph(std::move(snaps));
}

inline PeriodicGraph random_periodic(std::mt19937_64& rng, int n, int p,
                                     double density) {
  std::vector<Graph> snaps;
  for (int t = 0; t < p; ++t) snaps.push_back(random_graph(rng, n, density));
  return PeriodicGraph(std::move(snaps));
}

// Closed neighborhood as a plain bitmask, read from the edge list.
inline std::uint64_t raw_closed(const Graph& g, int u) {
  std::uint64_t m = std::uint64_t{1} << u;
  for (const Edge& e : g.edges()) {
    if (e.u == u) m |= std::uint64_t{1} << e.v;
    if (e.v == u) m |= std::uint64_t{1} << e.u;
  }
  return m;
}

}  // namespace percop::testing

#endif  // PERCOP_TESTS_TEST_UTIL_HPP_
