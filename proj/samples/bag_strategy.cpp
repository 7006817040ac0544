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

// Plays the tree-decomposition strategy on a periodic bow tie and checks it
// against every robber.

#include <cstdio>

#include "percop/percop.hpp"

int main() {
  using namespace percop;
  PeriodicGraph pg = make_construction("bowtie_221").instance;
  Graph f = footprint(pg);
  TreewidthResult tw = exact_treewidth(f);
  TreeDecomposition td = smooth(tw.decomposition, f);
  std::printf("treewidth %d, %zu smooth bags\n", tw.width, td.bags.size());
  for (const VertexSet& bag : td.bags) {
    std::printf("  {");
    for (int v : bag) std::printf(" %s", f.label(v).c_str());
    std::printf(" }\n");
  }
  BagPolicy policy = bag_strategy(pg, td);
  PolicyVerdict v = verify_policy(pg, policy, policy.cops());
  std::printf("%d cops %s", policy.cops(), v.wins ? "win" : "lose");
  if (v.max_capture_moves) std::printf(" within %lld moves", *v.max_capture_moves);
  std::printf(" (optimal: %d)\n", cop_number(pg));
  return 0;
}
