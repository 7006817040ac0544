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

// Circulant cycles on Z_11 have no 2-temporal corner for a good choice of
// steps, so two cops cannot win. Shows which step pairs create one.

#include <cstdio>

#include "percop/percop.hpp"

int main() {
  using namespace percop;
  // Row a, column b: does step a followed by step b leave a 2-corner?
  std::printf("    1 2 3 4 5\n");
  for (int a = 1; a <= 5; ++a) {
    std::printf("%d  ", a);
    for (int b = 1; b <= 5; ++b) {
      PeriodicGraph pg({circulant_cycle(11, a), circulant_cycle(11, b)});
      std::printf(" %c", has_k_temporal_corner(pg, 2) ? 'x' : '.');
    }
    std::printf("\n");
  }

  SearchOutcome out = search(specs::circulant_123());
  if (!out.witness) return 1;
  std::printf("search: %s, steps", to_string(out.status));
  for (int s : out.witness->steps) std::printf(" %d", s);
  std::printf(", cop number %d\n", out.certificate->triple.periodic);
  return 0;
}
