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

#ifndef PERCOP_SEARCH_HPP_
#define PERCOP_SEARCH_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "percop/constructions.hpp"
#include "percop/corners.hpp"
#include "percop/error.hpp"
#include "percop/graph.hpp"
#include "percop/periodic.hpp"
#include "percop/solver.hpp"

namespace percop {

// ---------------------------------------------------------------------------
// Deterministic randomness. The standard distributions are implementation
// defined, so sampling is done directly on mt19937_64 output.

namespace detail {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline bool chance(std::mt19937_64& rng, std::uint32_t num, std::uint32_t den) {
  return uniform_below(rng, den) < num;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs as bitmasks over vertex pairs, and vertex relabelings acting on them.

inline constexpr int kMaxPairOrder = 11;

namespace detail {

inline int pair_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline std::uint64_t pair_mask(const Graph& g) {
  std::uint64_t m = 0;
  for (const Edge& e : g.edges()) m |= std::uint64_t{1} << pair_index(g.order(), e.u, e.v);
  return m;
}

inline Graph graph_from_pairs(int n, std::uint64_t mask) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((mask >> pair_index(n, u, v)) & 1U) g.add_edge(u, v);
  return g;
}

// A vertex permutation acting on pair masks one byte at a time.
class PairPermutation {
 public:
  PairPermutation(int n, const std::vector<int>& sigma) {
    const int pairs = n * (n - 1) / 2;
    std::vector<int> image(pairs);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        image[pair_index(n, u, v)] = pair_index(n, sigma[u], sigma[v]);
    chunks_ = (pairs + 7) / 8;
    table_.assign(chunks_ * 256, 0);
    for (int c = 0; c < chunks_; ++c)
      for (int byte = 0; byte < 256; ++byte) {
        std::uint64_t out = 0;
        for (int b = 0; b < 8; ++b) {
          int idx = c * 8 + b;
          if (idx < pairs && ((byte >> b) & 1)) out |= std::uint64_t{1} << image[idx];
        }
        table_[c * 256 + byte] = out;
      }
  }

  std::uint64_t apply(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (int c = 0; c < chunks_; ++c) {
      out |= table_[c * 256 + ((mask >> (8 * c)) & 0xFF)];
    }
    return out;
  }

 private:
  int chunks_ = 0;
  std::vector<std::uint64_t> table_;
};

// All permutations of 0..n-1 preserving every graph in `keep` and fixing
// every vertex in `fixed`; the identity comes first.
inline std::vector<std::vector<int>> automorphisms(int n,
                                                  const std::vector<Graph>& keep,
                                                  VertexSet fixed) {
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> go = [&](int u) {
    if (u == n) {
      out.push_back(sigma);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[img]) continue;
      if (fixed.contains(u) && img != u) continue;
      if (!fixed.contains(u) && fixed.contains(img)) continue;
      bool ok = true;
      for (const Graph& g : keep) {
        if (g.degree(u) != g.degree(img)) ok = false;
        for (int w = 0; w < u && ok; ++w) {
          if (g.has_edge(u, w) != g.has_edge(img, sigma[w])) ok = false;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      sigma[u] = img;
      used[img] = true;
      go(u + 1);
      used[img] = false;
      sigma[u] = -1;
    }
  };
  go(0);
  return out;
}

}  // namespace detail

// Orbit-canonical test: a sequence of pair masks is canonical iff no
// relabeling in the group maps it to a lexicographically smaller sequence.
class RelabelGroup {
 public:
  RelabelGroup() = default;
  RelabelGroup(int n, const std::vector<std::vector<int>>& perms) {
    for (std::size_t i = 1; i < perms.size(); ++i) perms_.emplace_back(n, perms[i]);
  }

  std::size_t order() const { return perms_.size() + 1; }

  bool is_canonical(const std::vector<std::uint64_t>& seq) const {
    for (const auto& pp : perms_) {
      for (std::size_t i = 0; i < seq.size(); ++i) {
        std::uint64_t img = pp.apply(seq[i]);
        if (img < seq[i]) return false;
        if (img > seq[i]) break;
      }
    }
    return true;
  }

  // Number of group elements fixing seq.
  std::size_t stabilizer(const std::vector<std::uint64_t>& seq) const {
    std::size_t count = 1;
    for (const auto& pp : perms_) {
      bool same = true;
      for (std::size_t i = 0; i < seq.size() && same; ++i) same = pp.apply(seq[i]) == seq[i];
      if (same) ++count;
    }
    return count;
  }

 private:
  std::vector<detail::PairPermutation> perms_;
};

inline RelabelGroup symmetric_group(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  do {
    perms.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return RelabelGroup(n, perms);
}

// Visits one representative of every orbit of period-p sequences of graphs
// on n vertices under simultaneous relabeling, with its orbit size.
inline constexpr std::uint64_t kCanonicalEnumerationLimit = std::uint64_t{1} << 28;

inline std::uint64_t for_each_canonical_periodic(
    int n, int p,
    const std::function<void(const PeriodicGraph&, std::uint64_t)>& visit) {
  detail::require(n >= 1 && n <= 8 && p >= 1, ErrorCode::kInvalidArgument,
                  "canonical enumeration needs 1 <= n <= 8 and p >= 1");
  const int pairs = n * (n - 1) / 2;
  detail::require(static_cast<std::uint64_t>(pairs) * p <= 28,
                  ErrorCode::kLimitExceeded,
                  "canonical enumeration exceeds 2^28 labeled sequences");
  RelabelGroup group = symmetric_group(n);
  const std::uint64_t per = std::uint64_t{1} << pairs;
  const std::uint64_t total = std::uint64_t{1} << (pairs * p);
  std::vector<std::uint64_t> seq(p);
  std::uint64_t canonical = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int t = p - 1; t >= 0; --t) {
      seq[t] = rest % per;
      rest /= per;
    }
    if (!group.is_canonical(seq)) continue;
    ++canonical;
    std::vector<Graph> snaps;
    for (std::uint64_t m : seq) snaps.push_back(detail::graph_from_pairs(n, m));
    visit(PeriodicGraph(std::move(snaps)), group.order() / group.stabilizer(seq));
  }
  return canonical;
}

// ---------------------------------------------------------------------------
// Search specifications.

enum class SnapshotKind { kSubgraph, kHamiltonianPath, kCirculant };

inline const char* to_string(SnapshotKind k) {
  switch (k) {
    case SnapshotKind::kSubgraph: return "subgraph";
    case SnapshotKind::kHamiltonianPath: return "hamiltonian-path";
    case SnapshotKind::kCirculant: return "circulant";
  }
  return "unknown";
}

struct SnapshotConstraint {
  SnapshotKind kind = SnapshotKind::kSubgraph;
  std::optional<Graph> within;  // allowed edges; complete graph when unset
  std::vector<int> steps{1, 2, 3, 4, 5};  // allowed circulant steps
  bool connected = false;
  std::optional<int> girth;   // exact girth
  std::optional<int> copnum;  // static cop number of every snapshot
};

struct FootprintConstraint {
  std::optional<Graph> equals;
  std::optional<int> universal_vertex;
  bool connected = false;
  std::optional<int> copnum;
};

struct SearchTargets {
  ExpectedTriple triple;
  std::vector<int> no_corner;  // k values without any k-temporal corner
  std::optional<int> domination_g0;
  std::optional<int> removed_vertex;
  std::optional<int> removed_copnum;  // c of the instance minus removed_vertex
};

// Snapshot t is slot t / block; free choices are made per slot.
struct SearchSpec {
  std::string name;
  int n = 0;
  int period = 1;
  int block = 1;
  SnapshotConstraint snapshots;
  FootprintConstraint footprint;
  SearchTargets targets;
  std::vector<std::vector<Edge>> pinned_edges;  // per slot, must be present
  std::vector<int> pinned_steps;                // per slot, 0 = free
  std::vector<std::string> labels;
  double budget_seconds = 1800;
  std::uint64_t seed = 1;
  std::uint64_t max_evaluations = 0;  // 0 = unlimited
  bool count_all = false;  // exhaustive mode: count every satisfying orbit

  int slots() const { return period / block; }
  Graph allowed() const {
    return snapshots.within ? *snapshots.within : complete_graph(n);
  }
};

inline void validate_spec(const SearchSpec& s) {
  auto check = [&](bool ok, const std::string& what) {
    detail::require(ok, ErrorCode::kInvalidArgument,
                    "inconsistent search spec '" + s.name + "': " + what);
  };
  check(s.n >= 1 && s.n <= kMaxPairOrder, "n must lie in 1..11");
  check(s.period >= 1 && s.block >= 1 && s.period % s.block == 0,
        "period must be a positive multiple of block");
  check(static_cast<int>(s.pinned_edges.size()) <= s.slots(),
        "more pinned slots than slots");
  check(s.pinned_steps.empty() || static_cast<int>(s.pinned_steps.size()) == s.slots(),
        "pinned steps must list every slot");
  const Graph allowed = s.allowed();
  check(allowed.order() == s.n, "allowed graph has the wrong order");
  for (const auto& slot : s.pinned_edges)
    for (const Edge& e : slot) {
      check(e.u >= 0 && e.v >= 0 && e.u < s.n && e.v < s.n && e.u != e.v,
            "pinned edge out of range");
      check(s.snapshots.kind == SnapshotKind::kCirculant || allowed.has_edge(e.u, e.v),
            "pinned edge outside the allowed snapshot edges");
    }
  if (s.footprint.equals) {
    check(s.footprint.equals->order() == s.n, "footprint graph has the wrong order");
    if (s.snapshots.kind == SnapshotKind::kSubgraph) {
      for (const Edge& e : s.footprint.equals->edges())
        check(allowed.has_edge(e.u, e.v), "footprint edge absent from all allowed snapshots");
    }
  }
  if (s.footprint.universal_vertex) {
    int u = *s.footprint.universal_vertex;
    check(u >= 0 && u < s.n, "universal vertex out of range");
    if (s.snapshots.kind == SnapshotKind::kSubgraph)
      check(allowed.degree(u) == s.n - 1, "universal vertex lacks allowed edges");
  }
  if (s.snapshots.kind == SnapshotKind::kCirculant) {
    check(!s.snapshots.steps.empty(), "no circulant steps allowed");
    for (int st : s.snapshots.steps) check(st >= 1 && 2 * st <= s.n, "bad circulant step");
    for (int st : s.pinned_steps)
      check(st == 0 || std::count(s.snapshots.steps.begin(), s.snapshots.steps.end(), st),
            "pinned step not allowed");
  } else {
    check(s.pinned_steps.empty(), "pinned steps need circulant snapshots");
  }
  if (s.targets.removed_vertex || s.targets.removed_copnum) {
    check(s.targets.removed_vertex && s.targets.removed_copnum,
          "removed vertex and removed cop number come together");
    check(*s.targets.removed_vertex >= 0 && *s.targets.removed_vertex < s.n && s.n >= 2,
          "removed vertex out of range");
  }
  for (int k : s.targets.no_corner) check(k >= 1, "corner order must be >= 1");
}

// ---------------------------------------------------------------------------
// Scoring. Lower is better, tiers compared lexicographically; zero means
// every predicate holds.

struct Score {
  static constexpr long long kUnscored = std::numeric_limits<long long>::max();
  long long structural = 0;
  long long medium = 0;
  long long solver = 0;

  bool zero() const { return structural == 0 && medium == 0 && solver == 0; }
  friend bool operator<(const Score& a, const Score& b) {
    return std::tie(a.structural, a.medium, a.solver) <
           std::tie(b.structural, b.medium, b.solver);
  }
  friend bool operator<=(const Score& a, const Score& b) { return !(b < a); }
};

namespace detail {

inline PeriodicGraph expand_slots(const SearchSpec& spec,
                                  const std::vector<Graph>& slots) {
  std::vector<Graph> snaps;
  for (int t = 0; t < spec.period; ++t) snaps.push_back(slots[t / spec.block]);
  PeriodicGraph pg(std::move(snaps));
  if (!spec.labels.empty()) pg.set_labels(spec.labels);
  return pg;
}

// Cop-win gradient toward "exactly c cops": winning (c-1)-placements are
// penalized heavily, escaping robber starts against c cops lightly.
inline long long copnum_penalty(const PeriodicGraph& pg, int c,
                                const GameRules& rules) {
  long long pen = 0;
  if (c >= 2) {
    pen += static_cast<long long>(is_k_copwin(pg, c - 1, rules).winning_placements()) *
           (pg.order() + 1);
  }
  pen += is_k_copwin(pg, c, rules).escapes();
  return pen;
}

class Evaluator {
 public:
  explicit Evaluator(const SearchSpec& spec) : spec_(spec) {}

  Score score(const std::vector<Graph>& slots) {
    const SearchSpec& s = spec_;
    Score out;
    Graph uni(s.n);
    for (int i = 0; i < s.slots(); ++i) {
      const Graph& g = slots[i];
      if (i < static_cast<int>(s.pinned_edges.size()))
        for (const Edge& e : s.pinned_edges[i])
          if (!g.has_edge(e.u, e.v)) ++out.structural;
      if (s.snapshots.connected) out.structural += components(g).size() - 1;
      if (s.snapshots.girth) {
        auto gi = girth(g);
        if (!gi) {
          out.structural += 2;
        } else if (*gi != *s.snapshots.girth) {
          out.structural += 1;
        }
      }
      for (const Edge& e : g.edges()) uni.add_edge(e.u, e.v);
    }
    if (s.snapshots.kind == SnapshotKind::kCirculant) {
      for (int i = 0; i < s.slots(); ++i)
        if (slots[i].same_edges(slots[(i + 1) % s.slots()]) && s.slots() > 1) ++out.structural;
    }
    if (s.footprint.equals) {
      for (const Edge& e : s.footprint.equals->edges())
        if (!uni.has_edge(e.u, e.v)) ++out.structural;
      for (const Edge& e : uni.edges())
        if (!s.footprint.equals->has_edge(e.u, e.v)) ++out.structural;
    }
    if (s.footprint.universal_vertex)
      out.structural += s.n - 1 - uni.degree(*s.footprint.universal_vertex);
    if (s.footprint.connected) out.structural += components(uni).size() - 1;
    if (out.structural > 0) {
      out.medium = out.solver = Score::kUnscored;
      return out;
    }

    const PeriodicGraph pg = expand_slots(s, slots);
    int max_c = 0;
    if (s.snapshots.copnum || s.targets.triple.max_snapshot) {
      for (const Graph& g : slots) {
        int c = static_copnum(g);
        max_c = std::max(max_c, c);
        if (s.snapshots.copnum) out.medium += std::abs(c - *s.snapshots.copnum);
      }
      if (s.targets.triple.max_snapshot)
        out.medium += std::abs(max_c - *s.targets.triple.max_snapshot);
    }
    for (auto target : {s.footprint.copnum, s.targets.triple.footprint}) {
      if (target) out.medium += std::abs(static_copnum(uni) - *target);
    }
    if (s.targets.domination_g0)
      out.medium += std::abs(domination_number(slots[0]) - *s.targets.domination_g0);
    for (int k : s.targets.no_corner) out.medium += count_k_temporal_corners(pg, k);
    if (out.medium > 0) {
      out.solver = Score::kUnscored;
      return out;
    }

    if (s.targets.triple.periodic)
      out.solver += copnum_penalty(pg, *s.targets.triple.periodic, rules_);
    if (s.targets.removed_vertex) {
      auto sub = induced(pg, pg.vertices() - VertexSet::single(*s.targets.removed_vertex));
      out.solver += copnum_penalty(sub.graph, *s.targets.removed_copnum, rules_);
    }
    return out;
  }

  std::uint64_t evaluations() const { return evaluations_; }
  void count() { ++evaluations_; }

 private:
  int static_copnum(const Graph& g) {
    std::uint64_t key = pair_mask(g);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    int c = static_cop_number(g, rules_);
    cache_.emplace(key, c);
    return c;
  }

  const SearchSpec& spec_;
  GameRules rules_;
  std::unordered_map<std::uint64_t, int> cache_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Certificates: every predicate recomputed from scratch on the instance.

struct Certificate {
  Triple triple;
  std::vector<int> snapshot_copnums;  // per snapshot
  std::vector<std::pair<int, int>> corner_counts;  // (k, corner nodes)
  std::optional<int> domination_g0;
  std::optional<int> removed_copnum;
  std::vector<std::string> failures;

  bool satisfied() const { return failures.empty(); }
};

inline Certificate certify(const SearchSpec& spec, const PeriodicGraph& pg,
                           const GameRules& rules = {}) {
  Certificate cert;
  auto fail_if = [&](bool bad, const std::string& what) {
    if (bad) cert.failures.push_back(what);
  };
  fail_if(pg.order() != spec.n, "vertex count differs from spec");
  fail_if(pg.period() != spec.period, "period differs from spec");
  if (!cert.failures.empty()) return cert;
  const Graph f = footprint(pg);
  const Graph allowed = spec.allowed();
  for (int t = 0; t < pg.period(); ++t) {
    const Graph& g = pg.snapshot(t);
    const std::string at = " at t=" + std::to_string(t);
    fail_if(!g.same_edges(pg.snapshot(t - t % spec.block)), "block pattern broken" + at);
    switch (spec.snapshots.kind) {
      case SnapshotKind::kSubgraph:
        for (const Edge& e : g.edges())
          fail_if(!allowed.has_edge(e.u, e.v), "edge outside allowed graph" + at);
        break;
      case SnapshotKind::kHamiltonianPath: {
        bool path = is_tree(g);
        for (int v = 0; v < g.order(); ++v) path = path && g.degree(v) <= 2;
        fail_if(!path, "snapshot is not a Hamiltonian path" + at);
        break;
      }
      case SnapshotKind::kCirculant: {
        bool ok = false;
        for (int st : spec.snapshots.steps) ok = ok || g.same_edges(circulant_cycle(spec.n, st));
        fail_if(!ok, "snapshot is not an allowed circulant cycle" + at);
        if (spec.slots() > 1) {
          fail_if(g.same_edges(pg.snapshot(t + spec.block)), "repeated circulant step" + at);
        }
        break;
      }
    }
    if (spec.snapshots.connected) fail_if(!is_connected(g), "snapshot disconnected" + at);
    if (spec.snapshots.girth) fail_if(girth(g) != spec.snapshots.girth, "girth mismatch" + at);
    int slot = t / spec.block;
    if (slot < static_cast<int>(spec.pinned_edges.size()))
      for (const Edge& e : spec.pinned_edges[slot])
        fail_if(!g.has_edge(e.u, e.v), "pinned edge missing" + at);
    if (!spec.pinned_steps.empty() && spec.pinned_steps[slot] != 0)
      fail_if(!g.same_edges(circulant_cycle(spec.n, spec.pinned_steps[slot])),
              "pinned step not honored" + at);
  }
  if (spec.footprint.equals) fail_if(!f.same_edges(*spec.footprint.equals), "footprint differs");
  if (spec.footprint.universal_vertex)
    fail_if(f.degree(*spec.footprint.universal_vertex) != spec.n - 1,
            "footprint vertex is not universal");
  if (spec.footprint.connected) fail_if(!is_connected(f), "footprint disconnected");

  cert.triple = triple(pg, rules);
  for (const Graph& g : pg.snapshots()) {
    int c = -1;
    for (int t = 0; t < static_cast<int>(cert.snapshot_copnums.size()); ++t)
      if (pg.snapshot(t).same_edges(g)) c = cert.snapshot_copnums[t];
    cert.snapshot_copnums.push_back(c >= 0 ? c : static_cop_number(g, rules));
  }
  if (spec.snapshots.copnum) {
    for (int c : cert.snapshot_copnums)
      fail_if(c != *spec.snapshots.copnum, "snapshot cop number mismatch");
  }
  if (spec.footprint.copnum)
    fail_if(cert.triple.footprint != *spec.footprint.copnum, "footprint cop number mismatch");
  fail_if(!spec.targets.triple.matches(cert.triple), "triple mismatch");
  for (int k = 1; k <= 3; ++k) {
    if (k >= spec.n) break;
    cert.corner_counts.emplace_back(k, count_k_temporal_corners(pg, k));
  }
  for (int k : spec.targets.no_corner) {
    fail_if(count_k_temporal_corners(pg, k) != 0,
            std::to_string(k) + "-temporal corner present");
  }
  if (spec.targets.domination_g0) {
    cert.domination_g0 = domination_number(pg.snapshot(0));
    fail_if(*cert.domination_g0 != *spec.targets.domination_g0, "domination of G_0 mismatch");
  }
  if (spec.targets.removed_vertex) {
    auto sub = induced(pg, pg.vertices() - VertexSet::single(*spec.targets.removed_vertex));
    cert.removed_copnum = cop_number(sub.graph, rules);
    fail_if(*cert.removed_copnum != *spec.targets.removed_copnum,
            "cop number without the removed vertex mismatch");
  }
  return cert;
}

// ---------------------------------------------------------------------------
// The search driver.

enum class SearchStatus { kFound, kExhausted, kBudget };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kExhausted: return "exhausted";
    case SearchStatus::kBudget: return "budget";
  }
  return "unknown";
}

inline constexpr double kExhaustiveSpaceLimit = 1e7;

struct SearchOutcome {
  SearchStatus status = SearchStatus::kBudget;
  std::string mode;  // "exhaustive" or "local"
  std::optional<ConstructionSpecimen> witness;
  std::optional<Certificate> certificate;
  std::uint64_t evaluations = 0;
  std::uint64_t restarts = 0;
  std::uint64_t satisfying = 0;       // exhaustive mode with count_all
  std::uint64_t skipped_symmetric = 0;  // non-canonical candidates skipped
  std::size_t group_order = 1;
};

namespace detail {

// Free per-slot choices of one candidate.
struct Candidate {
  std::vector<std::uint64_t> masks;         // subgraph: bits over allowed edges
  std::vector<std::vector<int>> orders;     // Hamiltonian path vertex orders
  std::vector<int> steps;                   // circulant steps
};

class SlotModel {
 public:
  explicit SlotModel(const SearchSpec& spec)
      : spec_(spec), allowed_(spec.allowed()), edges_(allowed_.edges()) {
    pinned_.assign(spec.slots(), 0);
    for (int i = 0; i < static_cast<int>(spec.pinned_edges.size()); ++i)
      for (const Edge& e : spec.pinned_edges[i])
        for (std::size_t b = 0; b < edges_.size(); ++b)
          if (edges_[b] == Edge{std::min(e.u, e.v), std::max(e.u, e.v)})
            pinned_[i] |= std::uint64_t{1} << b;
  }

  // Unfiltered number of candidates (as a double to avoid overflow).
  double space() const {
    double total = 1;
    for (int i = 0; i < spec_.slots(); ++i) {
      switch (spec_.snapshots.kind) {
        case SnapshotKind::kSubgraph:
          total *= std::pow(2.0, static_cast<double>(edges_.size()) -
                                     std::popcount(pinned_[i]));
          break;
        case SnapshotKind::kHamiltonianPath: {
          double f = 1;
          for (int k = 2; k <= spec_.n; ++k) f *= k;
          total *= spec_.n >= 2 ? f / 2 : 1;
          break;
        }
        case SnapshotKind::kCirculant:
          total *= fixed_step(i) ? 1 : spec_.snapshots.steps.size();
          break;
      }
    }
    return total;
  }

  Graph slot_graph(const Candidate& c, int i) const {
    switch (spec_.snapshots.kind) {
      case SnapshotKind::kSubgraph: {
        Graph g(spec_.n);
        for (std::size_t b = 0; b < edges_.size(); ++b)
          if ((c.masks[i] >> b) & 1U) g.add_edge(edges_[b].u, edges_[b].v);
        return g;
      }
      case SnapshotKind::kHamiltonianPath: {
        Graph g(spec_.n);
        for (int k = 0; k + 1 < spec_.n; ++k) g.add_edge(c.orders[i][k], c.orders[i][k + 1]);
        return g;
      }
      case SnapshotKind::kCirculant:
        return circulant_cycle(spec_.n, c.steps[i]);
    }
    return Graph(spec_.n);
  }

  std::vector<Graph> graphs(const Candidate& c) const {
    std::vector<Graph> out;
    for (int i = 0; i < spec_.slots(); ++i) out.push_back(slot_graph(c, i));
    return out;
  }

  Candidate random(std::mt19937_64& rng) const {
    Candidate c;
    for (int i = 0; i < spec_.slots(); ++i) {
      switch (spec_.snapshots.kind) {
        case SnapshotKind::kSubgraph: {
          std::uint64_t m = pinned_[i];
          for (std::size_t b = 0; b < edges_.size(); ++b)
            if (chance(rng, 1, 2)) m |= std::uint64_t{1} << b;
          c.masks.push_back(m);
          break;
        }
        case SnapshotKind::kHamiltonianPath: {
          std::vector<int> order(spec_.n);
          for (int v = 0; v < spec_.n; ++v) order[v] = v;
          shuffle(order, rng);
          c.orders.push_back(order);
          break;
        }
        case SnapshotKind::kCirculant:
          c.steps.push_back(fixed_step(i) ? fixed_step(i) : pick_step(rng));
          break;
      }
    }
    return c;
  }

  Candidate mutate(const Candidate& in, std::mt19937_64& rng) const {
    Candidate c = in;
    const int slot = static_cast<int>(uniform_below(rng, spec_.slots()));
    switch (spec_.snapshots.kind) {
      case SnapshotKind::kSubgraph: {
        int flips = chance(rng, 1, 4) ? 2 : 1;
        for (int f = 0; f < flips; ++f) {
          std::uint64_t free = ~pinned_[slot] & low_bits(edges_.size());
          if (free == 0) break;
          int pick = static_cast<int>(uniform_below(rng, std::popcount(free)));
          int bit = nth_bit(free, pick);
          c.masks[slot] ^= std::uint64_t{1} << bit;
        }
        break;
      }
      case SnapshotKind::kHamiltonianPath: {
        auto& o = c.orders[slot];
        std::size_t i = uniform_below(rng, o.size());
        std::size_t j = uniform_below(rng, o.size());
        if (i > j) std::swap(i, j);
        if (chance(rng, 1, 2)) {
          std::reverse(o.begin() + i, o.begin() + j + 1);
        } else {
          std::swap(o[i], o[j]);
        }
        break;
      }
      case SnapshotKind::kCirculant: {
        std::vector<int> free;
        for (int i = 0; i < spec_.slots(); ++i)
          if (!fixed_step(i)) free.push_back(i);
        if (!free.empty()) c.steps[free[uniform_below(rng, free.size())]] = pick_step(rng);
        break;
      }
    }
    return c;
  }

  // Candidate slot graphs for exhaustive enumeration, in a fixed order.
  std::vector<Graph> slot_options(int i) const {
    std::vector<Graph> out;
    switch (spec_.snapshots.kind) {
      case SnapshotKind::kSubgraph: {
        std::vector<int> free;
        for (std::size_t b = 0; b < edges_.size(); ++b)
          if (!((pinned_[i] >> b) & 1U)) free.push_back(static_cast<int>(b));
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << free.size()); ++code) {
          Candidate c;
          c.masks.assign(spec_.slots(), 0);
          std::uint64_t m = pinned_[i];
          for (std::size_t k = 0; k < free.size(); ++k)
            if ((code >> k) & 1U) m |= std::uint64_t{1} << free[k];
          c.masks[i] = m;
          out.push_back(slot_graph(c, i));
        }
        break;
      }
      case SnapshotKind::kHamiltonianPath: {
        std::vector<int> order(spec_.n);
        for (int v = 0; v < spec_.n; ++v) order[v] = v;
        do {
          if (spec_.n >= 2 && order.front() > order.back()) continue;
          Candidate c;
          c.orders.assign(spec_.slots(), order);
          out.push_back(slot_graph(c, i));
        } while (std::next_permutation(order.begin(), order.end()));
        break;
      }
      case SnapshotKind::kCirculant:
        if (fixed_step(i)) {
          out.push_back(circulant_cycle(spec_.n, fixed_step(i)));
        } else {
          for (int st : spec_.snapshots.steps) out.push_back(circulant_cycle(spec_.n, st));
        }
        break;
    }
    return out;
  }

 private:
  int fixed_step(int i) const {
    return spec_.pinned_steps.empty() ? 0 : spec_.pinned_steps[i];
  }
  int pick_step(std::mt19937_64& rng) const {
    return spec_.snapshots.steps[uniform_below(rng, spec_.snapshots.steps.size())];
  }
  static std::uint64_t low_bits(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  static int nth_bit(std::uint64_t m, int k) {
    for (int i = 0; i < k; ++i) m &= m - 1;
    return std::countr_zero(m);
  }

  const SearchSpec& spec_;
  Graph allowed_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> pinned_;
};

// Relabelings preserving every constraint of the spec. Circulant snapshots
// are described by steps, so no relabeling is used there.
inline RelabelGroup spec_symmetries(const SearchSpec& s) {
  if (s.snapshots.kind == SnapshotKind::kCirculant) return {};
  std::vector<Graph> keep{s.allowed()};
  for (const auto& slot : s.pinned_edges) keep.emplace_back(s.n, slot);
  if (s.footprint.equals) keep.push_back(*s.footprint.equals);
  VertexSet fixed;
  if (s.footprint.universal_vertex) fixed.insert(*s.footprint.universal_vertex);
  if (s.targets.removed_vertex) fixed.insert(*s.targets.removed_vertex);
  return RelabelGroup(s.n, automorphisms(s.n, keep, fixed));
}

}  // namespace detail

// Finds an instance meeting every predicate of the spec. Small spaces are
// enumerated exhaustively up to the spec's symmetries; larger ones use
// seeded local search with restarts. Found witnesses are re-certified.
inline SearchOutcome search(const SearchSpec& spec) {
  validate_spec(spec);
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto out_of_time = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count() >
           spec.budget_seconds;
  };
  detail::SlotModel model(spec);
  detail::Evaluator eval(spec);
  SearchOutcome out;

  auto accept = [&](const std::vector<Graph>& slots) {
    PeriodicGraph pg = detail::expand_slots(spec, slots);
    Certificate cert = certify(spec, pg);
    if (!cert.satisfied()) return false;
    ConstructionSpecimen w{spec.name, pg, spec.targets.triple,
                           Provenance::kReconstructionRequired, {}};
    if (spec.snapshots.kind == SnapshotKind::kCirculant) {
      for (int t = 0; t < pg.period(); ++t)
        for (int st : spec.snapshots.steps)
          if (pg.snapshot(t).same_edges(circulant_cycle(spec.n, st))) w.steps.push_back(st);
    }
    out.witness = std::move(w);
    out.certificate = std::move(cert);
    return true;
  };
  auto over_limit = [&] {
    return (spec.max_evaluations && eval.evaluations() >= spec.max_evaluations) ||
           out_of_time();
  };

  if (model.space() <= kExhaustiveSpaceLimit) {
    out.mode = "exhaustive";
    RelabelGroup group = detail::spec_symmetries(spec);
    out.group_order = group.order();
    const int slots = spec.slots();
    std::vector<std::vector<Graph>> options(slots);
    std::vector<std::vector<std::uint64_t>> codes(slots);
    for (int i = 0; i < slots; ++i) {
      options[i] = model.slot_options(i);
      for (const Graph& g : options[i]) codes[i].push_back(detail::pair_mask(g));
    }
    std::vector<std::size_t> idx(slots, 0);
    std::vector<std::uint64_t> seq(slots);
    std::vector<Graph> current(slots);
    bool any_empty = std::any_of(options.begin(), options.end(),
                                 [](const auto& o) { return o.empty(); });
    while (!any_empty) {
      if (over_limit()) {
        out.status = SearchStatus::kBudget;
        out.evaluations = eval.evaluations();
        return out;
      }
      for (int i = 0; i < slots; ++i) seq[i] = codes[i][idx[i]];
      if (group.is_canonical(seq)) {
        for (int i = 0; i < slots; ++i) current[i] = options[i][idx[i]];
        eval.count();
        if (eval.score(current).zero()) {
          ++out.satisfying;
          if (!out.witness && accept(current) && !spec.count_all) {
            out.status = SearchStatus::kFound;
            out.evaluations = eval.evaluations();
            return out;
          }
        }
      } else {
        ++out.skipped_symmetric;
      }
      int i = slots - 1;
      while (i >= 0 && idx[i] + 1 == options[i].size()) idx[i--] = 0;
      if (i < 0) break;
      ++idx[i];
    }
    out.status = out.witness ? SearchStatus::kFound : SearchStatus::kExhausted;
    out.evaluations = eval.evaluations();
    return out;
  }

  out.mode = "local";
  std::mt19937_64 rng(spec.seed);
  constexpr std::uint64_t kStallLimit = 4000;
  while (!over_limit()) {
    detail::Candidate cur = model.random(rng);
    Score cur_score = eval.score(model.graphs(cur));
    eval.count();
    Score best = cur_score;
    std::uint64_t stall = 0;
    while (stall < kStallLimit && !over_limit()) {
      if (cur_score.zero() && accept(model.graphs(cur))) {
        out.status = SearchStatus::kFound;
        out.evaluations = eval.evaluations();
        return out;
      }
      detail::Candidate next = model.mutate(cur, rng);
      Score s = eval.score(model.graphs(next));
      eval.count();
      if (s <= cur_score || detail::chance(rng, 1, 50)) {
        cur = std::move(next);
        cur_score = s;
      }
      if (cur_score < best) {
        best = cur_score;
        stall = 0;
      } else {
        ++stall;
      }
    }
    ++out.restarts;
  }
  out.status = SearchStatus::kBudget;
  out.evaluations = eval.evaluations();
  return out;
}

// ---------------------------------------------------------------------------
// Named specifications.

namespace specs {

// Hamiltonian paths on 9 vertices, vertex 8 universal in the footprint.
// Two snapshots carry the edges forced by the capture argument.
inline SearchSpec thm112() {
  SearchSpec s;
  s.name = "thm112";
  s.n = 9;
  s.period = 9;
  s.snapshots.kind = SnapshotKind::kHamiltonianPath;
  s.footprint.universal_vertex = 8;
  s.pinned_edges = {{{0, 2}, {2, 6}, {1, 4}, {4, 8}}, {{1, 5}, {0, 3}, {3, 6}, {7, 8}}};
  s.targets.triple = {1, 1, 2};
  s.targets.no_corner = {1};
  return s;
}

// Girth-4 snapshots of cop number 2 over a copwin footprint on 8 vertices.
inline SearchSpec lem122() {
  SearchSpec s;
  s.name = "lem122";
  s.n = 8;
  s.period = 3;
  s.snapshots.connected = true;
  s.snapshots.girth = 4;
  s.snapshots.copnum = 2;
  s.footprint.connected = true;
  s.footprint.copnum = 1;
  s.targets.triple = {1, 2, 2};
  s.targets.no_corner = {1};
  s.targets.domination_g0 = 2;
  return s;
}

// Circulant cycles on Z_11 with steps 1 and 4 fixed at t = 3, 4.
inline SearchSpec circulant_123() {
  SearchSpec s;
  s.name = "circulant_123";
  s.n = kCirculantOrder;
  s.period = 5;
  s.snapshots.kind = SnapshotKind::kCirculant;
  s.snapshots.connected = true;
  s.pinned_steps = {0, 0, 0, 1, 4};
  s.footprint.equals = complete_graph(kCirculantOrder);
  s.targets.triple = {1, 2, 3};
  s.targets.no_corner = {2};
  return s;
}

// Subgraphs of the retract footprint (a,b,c,d,u) = (0,1,2,3,4); removing u
// must raise the cop number from 1 to 2.
inline SearchSpec prop3_retract() {
  SearchSpec s;
  s.name = "prop3_retract";
  s.n = 5;
  s.period = 3;
  s.snapshots.within = retract_footprint();
  s.footprint.equals = retract_footprint();
  s.targets.triple.periodic = 1;
  s.targets.removed_vertex = 4;
  s.targets.removed_copnum = 2;
  s.labels = retract_footprint().labels();
  return s;
}

// Five connected girth-5 subgraphs of Petersen, each held for 4 steps.
inline SearchSpec search_321() {
  SearchSpec s;
  s.name = "search_321";
  s.n = 10;
  s.period = 20;
  s.block = 4;
  s.snapshots.within = petersen_graph();
  s.snapshots.connected = true;
  s.snapshots.girth = 5;
  s.snapshots.copnum = 2;
  s.footprint.equals = petersen_graph();
  s.targets.triple = {3, 2, 1};
  s.labels = petersen_graph().labels();
  return s;
}

// Open table cells; exposed for experimentation only.
inline SearchSpec undetermined_113() {
  SearchSpec s = thm112();
  s.name = "undetermined_113";
  s.pinned_edges.clear();
  s.targets.triple = {1, 1, 3};
  s.targets.no_corner = {1, 2};
  return s;
}

inline SearchSpec undetermined_213() {
  SearchSpec s;
  s.name = "undetermined_213";
  s.n = 9;
  s.period = 9;
  s.snapshots.kind = SnapshotKind::kHamiltonianPath;
  s.footprint.copnum = 2;
  s.targets.triple = {2, 1, 3};
  s.targets.no_corner = {1, 2};
  return s;
}

inline SearchSpec undetermined_313() {
  SearchSpec s;
  s.name = "undetermined_313";
  s.n = 10;
  s.period = 10;
  s.snapshots.kind = SnapshotKind::kHamiltonianPath;
  s.footprint.equals = petersen_graph();
  s.targets.triple = {3, 1, 3};
  s.targets.no_corner = {1, 2};
  s.labels = petersen_graph().labels();
  return s;
}

}  // namespace specs

inline std::vector<std::string> named_spec_names() {
  return {"thm112", "lem122", "circulant_123", "prop3_retract", "search_321",
          "undetermined_113", "undetermined_213", "undetermined_313"};
}

inline SearchSpec named_spec(const std::string& name) {
  if (name == "thm112") return specs::thm112();
  if (name == "lem122") return specs::lem122();
  if (name == "circulant_123") return specs::circulant_123();
  if (name == "prop3_retract") return specs::prop3_retract();
  if (name == "search_321") return specs::search_321();
  if (name == "undetermined_113") return specs::undetermined_113();
  if (name == "undetermined_213") return specs::undetermined_213();
  if (name == "undetermined_313") return specs::undetermined_313();
  detail::fail(ErrorCode::kInvalidArgument, "unknown search spec: " + name);
}

inline SearchOutcome search_321(double budget_seconds, std::uint64_t seed) {
  SearchSpec s = specs::search_321();
  s.budget_seconds = budget_seconds;
  s.seed = seed;
  return search(s);
}

// ---------------------------------------------------------------------------
// Bounded scan for small periodic graphs needing three cops.

struct ScanCell {
  int n = 0;
  int p = 0;
  std::uint64_t canonical = 0;
  std::uint64_t labeled_covered = 0;  // sum of orbit sizes
  std::uint64_t temporally_connected = 0;
  std::uint64_t three_copwin = 0;
};

struct ScanReport {
  std::vector<ScanCell> cells;
  std::vector<PeriodicGraph> witnesses;  // first few with cop number >= 3
  bool complete = true;
};

inline ScanReport smallest_3copwin_scan(int max_n, int max_p, double budget_seconds) {
  detail::require(max_n >= 1 && max_n <= 5 && max_p >= 1 && max_p <= 4,
                  ErrorCode::kLimitExceeded, "scan limited to n <= 5 and p <= 4");
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  ScanReport report;
  for (int n = 1; n <= max_n; ++n) {
    for (int p = 1; p <= max_p; ++p) {
      ScanCell cell{n, p};
      cell.canonical = for_each_canonical_periodic(
          n, p, [&](const PeriodicGraph& pg, std::uint64_t orbit) {
            cell.labeled_covered += orbit;
            if (!is_temporally_connected(pg)) return;
            ++cell.temporally_connected;
            if (n >= 3 && !is_k_copwin(pg, 2).copwin()) {
              ++cell.three_copwin;
              if (report.witnesses.size() < 10) report.witnesses.push_back(pg);
            }
          });
      report.cells.push_back(cell);
      if (std::chrono::duration<double>(Clock::now() - start).count() > budget_seconds) {
        report.complete = false;
        return report;
      }
    }
  }
  return report;
}

}  // namespace percop

#endif  // PERCOP_SEARCH_HPP_
