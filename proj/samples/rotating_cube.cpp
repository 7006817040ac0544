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

// Q3 whose edges rotate through the three dimensions: two cops catch the
// robber on the cube, but three are needed once the edges move.

#include <cstdio>

#include "percop/percop.hpp"

int main() {
  using namespace percop;
  PeriodicGraph pg = make_construction("q3_rotation").instance;
  Triple t = triple(pg);
  std::printf("footprint %d, snapshots %d, periodic %d\n", t.footprint, t.max_snapshot,
              t.periodic);

  SolveResult win = is_k_copwin(pg, t.periodic);
  Trace trace = extract_trace(win, pg, t.periodic);
  const Graph& g = pg.snapshot(0);
  std::printf("robber starts on %s\n", g.label(trace.robber_start).c_str());
  for (const TraceRound& r : trace.rounds) {
    std::printf("t=%lld cops", r.time);
    for (int c : r.cops) std::printf(" %s", g.label(c).c_str());
    std::printf(" robber %s%s\n", g.label(r.robber).c_str(), r.captured ? " (caught)" : "");
  }
  return 0;
}
