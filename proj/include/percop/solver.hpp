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

#ifndef PERCOP_SOLVER_HPP_
#define PERCOP_SOLVER_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "percop/error.hpp"
#include "percop/graph.hpp"
#include "percop/periodic.hpp"
#include "percop/vertex_set.hpp"

namespace percop {

// How a capture happens. kOnContact also ends the game when the robber steps
// onto a cop; kCopMoveOnly requires a cop to move onto the robber. Both give
// the same winner (the cop can always stay put next round).
enum class CaptureRule { kOnContact, kCopMoveOnly };

inline constexpr std::uint64_t kDefaultStateBudget = 100'000'000;

// PERCOP_STATE_BUDGET overrides the default cap when set to a positive
// integer.
inline std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("PERCOP_STATE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultStateBudget;
}

struct GameRules {
  CaptureRule capture = CaptureRule::kOnContact;
  bool allow_stacking = true;
  std::uint64_t state_budget = default_state_budget();
};

// Sorted multiset of cop positions.
using CopSet = std::vector<int>;

enum class Side { kCopsToMove, kRobberToMove };

// Configuration at layer t. With kRobberToMove the cops have already moved
// in G_t and `cops` holds their new positions.
struct GameState {
  int t = 0;
  CopSet cops;
  int robber = 0;
  Side side = Side::kCopsToMove;

  friend bool operator==(const GameState&, const GameState&) = default;
};

namespace detail {

inline std::uint64_t checked_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Enumerates sorted k-multisets over 0..n-1 and ranks them in colex order of
// the strictly increasing shift c_i + i.
class CopSpace {
 public:
  CopSpace(int n, int k, bool allow_stacking) : n_(n), k_(k) {
    binom_.assign(n + k + 1, std::vector<std::uint64_t>(k + 2, 0));
    for (int a = 0; a <= n + k; ++a)
      for (int b = 0; b <= k + 1; ++b) binom_[a][b] = checked_binomial(a, b);
    size_ = static_cast<std::size_t>(checked_binomial(n + k - 1, k));
    tuples_.resize(size_ * k);
    occupied_.resize(size_);
    valid_.resize(size_);
    std::vector<int> c(k, 0);
    while (true) {
      std::size_t i = rank(c);
      std::copy(c.begin(), c.end(), tuples_.begin() + i * k);
      VertexSet occ;
      bool distinct = true;
      for (int j = 0; j < k; ++j) {
        if (occ.contains(c[j])) distinct = false;
        occ.insert(c[j]);
      }
      occupied_[i] = occ;
      valid_[i] = allow_stacking || distinct;
      int j = k - 1;
      while (j >= 0 && c[j] == n - 1) --j;
      if (j < 0) break;
      ++c[j];
      for (int l = j + 1; l < k; ++l) c[l] = c[j];
    }
  }

  int order() const { return n_; }
  int cops() const { return k_; }
  std::size_t size() const { return size_; }
  std::span<const int> tuple(std::size_t i) const {
    return {tuples_.data() + i * k_, static_cast<std::size_t>(k_)};
  }
  VertexSet occupied(std::size_t i) const { return occupied_[i]; }
  bool valid(std::size_t i) const { return valid_[i]; }

  std::size_t rank(std::span<const int> sorted) const {
    std::size_t r = 0;
    for (int i = 0; i < k_; ++i) r += binom_[sorted[i] + i][i + 1];
    return r;
  }

 private:
  int n_;
  int k_;
  std::size_t size_ = 0;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<int> tuples_;
  std::vector<VertexSet> occupied_;
  std::vector<bool> valid_;
};

// Cop moves within one snapshot, as a CSR over multiset ranks. The relation
// is symmetric, so successors double as predecessors.
struct MoveTable {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> targets;

  std::span<const std::uint32_t> from(std::size_t m) const {
    return {targets.data() + offsets[m], targets.data() + offsets[m + 1]};
  }
};

inline MoveTable build_moves(const CopSpace& space, const Graph& g) {
  const int k = space.cops();
  MoveTable table;
  table.offsets.reserve(space.size() + 1);
  table.offsets.push_back(0);
  std::vector<std::uint32_t> local;
  std::vector<int> next(k);
  std::vector<int> sorted(k);
  std::vector<std::vector<int>> choices(k);
  for (std::size_t m = 0; m < space.size(); ++m) {
    local.clear();
    if (space.valid(m)) {
      auto cur = space.tuple(m);
      for (int i = 0; i < k; ++i) {
        choices[i] = g.closed_neighborhood(cur[i]).to_vector();
      }
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        for (int i = 0; i < k; ++i) sorted[i] = choices[i][pick[i]];
        std::sort(sorted.begin(), sorted.end());
        std::size_t r = space.rank(sorted);
        if (space.valid(r)) local.push_back(static_cast<std::uint32_t>(r));
        int i = k - 1;
        while (i >= 0 && pick[i] + 1 == choices[i].size()) {
          pick[i] = 0;
          --i;
        }
        if (i < 0) break;
        ++pick[i];
      }
      std::sort(local.begin(), local.end());
      local.erase(std::unique(local.begin(), local.end()), local.end());
    }
    table.targets.insert(table.targets.end(), local.begin(), local.end());
    table.offsets.push_back(static_cast<std::uint32_t>(table.targets.size()));
  }
  return table;
}

inline constexpr std::uint32_t kNotWon = std::numeric_limits<std::uint32_t>::max();

struct SolveData {
  PeriodicGraph graph;
  GameRules rules;
  CopSpace space;
  std::vector<int> snapshot_id;  // layer -> index into moves
  std::vector<MoveTable> moves;
  // Cop moves until capture; kNotWon outside the cop attractor.
  std::vector<std::uint32_t> rank_cops_to_move;
  std::vector<std::uint32_t> rank_robber_to_move;

  std::size_t index(int t, std::size_t m, int r) const {
    return (static_cast<std::size_t>(t) * space.size() + m) * graph.order() + r;
  }
  const MoveTable& moves_at(int t) const { return moves[snapshot_id[t]]; }
};

inline bool lex_less(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

inline std::uint64_t estimate_states(int n, int period, int k) {
  return 2 * static_cast<std::uint64_t>(period) *
         detail::checked_binomial(n + k - 1, k) * static_cast<std::uint64_t>(n);
}

/// Outcome of the k-cop game on a periodic graph: the cop attractor with
/// steps-to-capture ranks, plus a rank-minimizing initial placement.
class SolveResult {
 public:
  bool copwin() const { return copwin_; }
  int cops() const { return data_->space.cops(); }
  const CopSet& initial_placement() const { return placement_; }
  // Worst-case number of cop moves to capture from the placement.
  std::uint32_t placement_rank() const { return placement_rank_; }
  // Minimum over placements of the robber starts that escape; 0 iff copwin.
  int escapes() const { return escapes_; }
  // Number of cop placements that win against every robber start.
  std::size_t winning_placements() const { return winning_placements_; }

  const PeriodicGraph& graph() const { return data_->graph; }
  const GameRules& rules() const { return data_->rules; }
  std::size_t state_count() const {
    return data_->rank_cops_to_move.size() * 2;
  }
  std::size_t won_state_count() const {
    auto won = [](std::uint32_t r) { return r != detail::kNotWon; };
    return std::count_if(data_->rank_cops_to_move.begin(),
                         data_->rank_cops_to_move.end(), won) +
           std::count_if(data_->rank_robber_to_move.begin(),
                         data_->rank_robber_to_move.end(), won);
  }

  // Cop moves still needed to capture from `s`; nullopt if the robber
  // escapes from `s`. A robber already on a cop has rank 0.
  std::optional<std::uint32_t> rank(const GameState& s) const {
    std::size_t m = checked_rank(s.cops);
    int t = layer_of(s.t, graph().period());
    std::uint32_t r = s.side == Side::kCopsToMove
                          ? data_->rank_cops_to_move[data_->index(t, m, s.robber)]
                          : data_->rank_robber_to_move[data_->index(t, m, s.robber)];
    if (r == detail::kNotWon) return std::nullopt;
    return r;
  }
  bool cop_wins(const GameState& s) const { return rank(s).has_value(); }

  // Rank-minimizing cop move from a cops-to-move state; ties go to the
  // lexicographically smallest multiset. Staying put if the state is lost.
  CopSet best_cop_move(int t, const CopSet& cops, int robber) const {
    const auto& d = *data_;
    t = layer_of(t, graph().period());
    std::size_t m = checked_rank(cops);
    std::uint32_t best = detail::kNotWon;
    std::size_t choice = m;
    for (std::uint32_t next : d.moves_at(t).from(m)) {
      std::uint32_t v = d.rank_robber_to_move[d.index(t, next, robber)];
      if (v < best || (v == best && v != detail::kNotWon &&
                       detail::lex_less(d.space.tuple(next),
                                        d.space.tuple(choice)))) {
        best = v;
        choice = next;
      }
    }
    auto tup = d.space.tuple(choice);
    return CopSet(tup.begin(), tup.end());
  }

  // Rank-maximizing robber reply after the cops moved to `cops` in G_t;
  // ties go to the lowest vertex. Escaping replies beat everything.
  int best_robber_reply(int t, const CopSet& cops, int robber) const {
    const auto& d = *data_;
    const int p = graph().period();
    t = layer_of(t, p);
    std::size_t m = checked_rank(cops);
    int choice = robber;
    long long best = -1;
    for (int r : graph().closed_neighborhood(t, robber)) {
      std::uint32_t v =
          d.rank_cops_to_move[d.index(layer_of(t + 1, p), m, r)];
      long long score = v == detail::kNotWon ? std::numeric_limits<long long>::max()
                                             : static_cast<long long>(v);
      if (score > best) {
        best = score;
        choice = r;
      }
    }
    return choice;
  }

  // Robber start maximizing the rank against `placement`.
  int best_robber_start(const CopSet& placement) const {
    const auto& d = *data_;
    std::size_t m = checked_rank(placement);
    int choice = 0;
    long long best = -1;
    for (int r = 0; r < graph().order(); ++r) {
      std::uint32_t v = d.rank_cops_to_move[d.index(0, m, r)];
      long long score = v == detail::kNotWon ? std::numeric_limits<long long>::max()
                                             : static_cast<long long>(v);
      if (score > best) {
        best = score;
        choice = r;
      }
    }
    return choice;
  }

 private:
  friend SolveResult is_k_copwin(const PeriodicGraph&, int, const GameRules&);

  std::size_t checked_rank(const CopSet& cops) const {
    const auto& space = data_->space;
    detail::require(static_cast<int>(cops.size()) == space.cops(),
                    ErrorCode::kInvalidArgument, "wrong number of cops");
    for (std::size_t i = 0; i < cops.size(); ++i) {
      detail::require(cops[i] >= 0 && cops[i] < space.order() &&
                          (i == 0 || cops[i - 1] <= cops[i]),
                      ErrorCode::kInvalidArgument,
                      "cop positions must be sorted vertices");
    }
    std::size_t m = space.rank(cops);
    detail::require(space.valid(m), ErrorCode::kInvalidArgument,
                    "stacked cops are not allowed under these rules");
    return m;
  }

  std::shared_ptr<const detail::SolveData> data_;
  bool copwin_ = false;
  CopSet placement_;
  std::uint32_t placement_rank_ = detail::kNotWon;
  int escapes_ = 0;
  std::size_t winning_placements_ = 0;
};

// Decides whether k cops win on pg by computing the cop attractor backwards
// from capture states.
//
// Rounds: in layer t the cops move in G_t, then the robber moves in G_t,
// then play continues in layer [t+1]_p. The cops win iff some placement C0
// wins against every robber start (a start on C0 is an immediate capture).
inline SolveResult is_k_copwin(const PeriodicGraph& pg, int k,
                               const GameRules& rules = {}) {
  detail::require(k >= 1, ErrorCode::kInvalidArgument, "k must be >= 1");
  detail::require(pg.order() >= 1, ErrorCode::kInvalidArgument,
                  "graph must have a vertex");
  const std::uint64_t estimate = estimate_states(pg.order(), pg.period(), k);
  if (estimate > rules.state_budget || estimate >= (std::uint64_t{1} << 40)) {
    throw BudgetError(estimate, rules.state_budget);
  }
  const int n = pg.order();
  const int p = pg.period();
  const bool relaxed = rules.capture == CaptureRule::kOnContact;

  auto data = std::make_shared<detail::SolveData>(detail::SolveData{
      pg, rules, detail::CopSpace(n, k, rules.allow_stacking), {}, {}, {}, {}});
  auto& d = *data;
  const std::size_t M = d.space.size();

  std::vector<int> distinct;
  for (int t = 0; t < p; ++t) {
    int id = -1;
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (pg.snapshot(distinct[j]).same_edges(pg.snapshot(t))) {
        id = static_cast<int>(j);
        break;
      }
    }
    if (id < 0) {
      id = static_cast<int>(distinct.size());
      distinct.push_back(t);
      d.moves.push_back(detail::build_moves(d.space, pg.snapshot(t)));
    }
    d.snapshot_id.push_back(id);
  }

  const std::size_t total = static_cast<std::size_t>(p) * M * n;
  d.rank_cops_to_move.assign(total, detail::kNotWon);
  d.rank_robber_to_move.assign(total, detail::kNotWon);
  std::vector<std::uint8_t> pending(total, 0);

  // Queue entries are state indices; robber-to-move states carry the top bit.
  constexpr std::uint64_t kRobberBit = std::uint64_t{1} << 63;
  std::vector<std::uint64_t> queue;
  std::vector<std::uint64_t> seeds;
  for (int t = 0; t < p; ++t) {
    for (std::size_t m = 0; m < M; ++m) {
      if (!d.space.valid(m)) continue;
      VertexSet occ = d.space.occupied(m);
      for (int r = 0; r < n; ++r) {
        std::size_t i = d.index(t, m, r);
        if (occ.contains(r)) {
          // A cop move that lands on the robber.
          d.rank_robber_to_move[i] = 0;
          seeds.push_back(i | kRobberBit);
          if (relaxed) {
            d.rank_cops_to_move[i] = 0;
            queue.push_back(i);
          }
        } else {
          pending[i] =
              static_cast<std::uint8_t>(pg.closed_neighborhood(t, r).size());
        }
      }
    }
  }
  queue.insert(queue.end(), seeds.begin(), seeds.end());
  seeds = {};

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t item = queue[head];
    const std::size_t i = static_cast<std::size_t>(item & ~kRobberBit);
    const int r = static_cast<int>(i % n);
    const std::size_t m = (i / n) % M;
    const int t = static_cast<int>(i / n / M);
    if (item & kRobberBit) {
      const std::uint32_t q = d.rank_robber_to_move[i];
      for (std::uint32_t prev : d.moves_at(t).from(m)) {
        std::size_t j = d.index(t, prev, r);
        if (d.rank_cops_to_move[j] == detail::kNotWon) {
          d.rank_cops_to_move[j] = q + 1;
          queue.push_back(j);
        }
      }
    } else {
      const std::uint32_t q = d.rank_cops_to_move[i];
      const int tp = layer_of(t - 1, p);
      for (int from : pg.closed_neighborhood(tp, r)) {
        std::size_t j = d.index(tp, m, from);
        if (d.rank_robber_to_move[j] != detail::kNotWon) continue;
        if (--pending[j] == 0) {
          d.rank_robber_to_move[j] = q;
          queue.push_back(j | kRobberBit);
        }
      }
    }
  }

  SolveResult result;
  result.data_ = data;
  result.escapes_ = n + 1;
  for (std::size_t m = 0; m < M; ++m) {
    if (!d.space.valid(m)) continue;
    std::uint32_t worst = 0;
    int escaped = 0;
    for (int r = 0; r < n; ++r) {
      std::uint32_t v = d.rank_cops_to_move[d.index(0, m, r)];
      if (v == detail::kNotWon) {
        ++escaped;
      } else {
        worst = std::max(worst, v);
      }
    }
    result.escapes_ = std::min(result.escapes_, escaped);
    if (escaped > 0) continue;
    ++result.winning_placements_;
    auto tup = d.space.tuple(m);
    if (!result.copwin_ || worst < result.placement_rank_ ||
        (worst == result.placement_rank_ &&
         detail::lex_less(tup, result.placement_))) {
      result.copwin_ = true;
      result.placement_rank_ = worst;
      result.placement_.assign(tup.begin(), tup.end());
    }
  }
  if (result.escapes_ > n) result.escapes_ = n;
  return result;
}

// Smallest k with a k-cop win. The search stops at gamma(G_0): cops on a
// dominating set of G_0 capture on their first move.
inline int cop_number(const PeriodicGraph& pg, const GameRules& rules = {}) {
  const int n = pg.order();
  int cap = n <= kMaxExactDomination ? domination_number(pg.snapshot(0)) : n;
  if (!rules.allow_stacking) cap = std::min(cap, n);
  for (int k = 1; k < cap; ++k) {
    if (is_k_copwin(pg, k, rules).copwin()) return k;
  }
  return std::max(cap, 1);
}

inline int static_cop_number(const Graph& g, const GameRules& rules = {}) {
  return cop_number(PeriodicGraph::constant(g, 1), rules);
}

// (a, b, c) = (c(G), c(G_max), c(periodic)); min_snapshot is c(G_min).
struct Triple {
  int footprint = 0;
  int max_snapshot = 0;
  int periodic = 0;
  int min_snapshot = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

inline Triple triple(const PeriodicGraph& pg, const GameRules& rules = {}) {
  Triple out;
  out.footprint = static_cop_number(footprint(pg), rules);
  std::vector<std::pair<const Graph*, int>> seen;
  out.min_snapshot = std::numeric_limits<int>::max();
  for (const Graph& g : pg.snapshots()) {
    int c = -1;
    for (const auto& [h, v] : seen) {
      if (h->same_edges(g)) c = v;
    }
    if (c < 0) {
      c = static_cop_number(g, rules);
      seen.emplace_back(&g, c);
    }
    out.max_snapshot = std::max(out.max_snapshot, c);
    out.min_snapshot = std::min(out.min_snapshot, c);
  }
  out.periodic = cop_number(pg, rules);
  return out;
}

// ---------------------------------------------------------------------------
// Capture traces.

// Robber reply given the time, the cops' new positions and its position.
using RobberScript = std::function<int(long long, const CopSet&, int)>;

struct TraceOptions {
  std::optional<CopSet> placement;  // defaults to the solver's placement
  std::optional<int> robber_start;  // defaults to the rank-maximizing start
  RobberScript robber;              // empty: rank-maximizing replies
};

struct TraceRound {
  long long time = 0;
  CopSet cops;  // after the cops' move
  int robber = 0;  // after the robber's move
  bool captured = false;
};

struct Trace {
  CopSet placement;
  int robber_start = 0;
  std::vector<TraceRound> rounds;
  // Time of the round in which capture happened; -1 for a robber that
  // started on a cop.
  std::optional<long long> capture_time;
};

// Plays the extracted cop strategy from a winning start to capture.
inline Trace extract_trace(const SolveResult& result, const PeriodicGraph& pg,
                           int k, const TraceOptions& options = {}) {
  detail::require(result.cops() == k && result.graph() == pg,
                  ErrorCode::kInvalidArgument,
                  "trace request does not match the solve result");
  detail::require(result.copwin() || options.placement.has_value(),
                  ErrorCode::kInvalidArgument,
                  "trace requested on a non-copwin result");
  Trace trace;
  trace.placement =
      options.placement ? *options.placement : result.initial_placement();
  std::sort(trace.placement.begin(), trace.placement.end());
  trace.robber_start = options.robber_start
                           ? *options.robber_start
                           : result.best_robber_start(trace.placement);
  GameState start{0, trace.placement, trace.robber_start, Side::kCopsToMove};
  std::optional<std::uint32_t> budget = result.rank(start);
  detail::require(budget.has_value(), ErrorCode::kInvalidArgument,
                  "trace start is not a cop-winning configuration");
  const bool relaxed = result.rules().capture == CaptureRule::kOnContact;
  auto on_cop = [](const CopSet& cops, int r) {
    return std::find(cops.begin(), cops.end(), r) != cops.end();
  };
  if (relaxed && on_cop(trace.placement, trace.robber_start)) {
    trace.capture_time = -1;
    return trace;
  }
  CopSet cops = trace.placement;
  int robber = trace.robber_start;
  for (long long time = 0; time <= static_cast<long long>(*budget); ++time) {
    TraceRound round;
    round.time = time;
    round.cops = result.best_cop_move(static_cast<int>(time % pg.period()),
                                      cops, robber);
    if (on_cop(round.cops, robber)) {
      round.robber = robber;
      round.captured = true;
      trace.rounds.push_back(round);
      trace.capture_time = time;
      return trace;
    }
    int next = options.robber
                   ? options.robber(time, round.cops, robber)
                   : result.best_robber_reply(
                         static_cast<int>(time % pg.period()), round.cops,
                         robber);
    detail::require(pg.closed_neighborhood(time, robber).contains(next),
                    ErrorCode::kInfeasibleMove,
                    "scripted robber move is not along an edge");
    round.robber = next;
    round.captured = relaxed && on_cop(round.cops, next);
    trace.rounds.push_back(round);
    if (round.captured) {
      trace.capture_time = time;
      return trace;
    }
    cops = round.cops;
    robber = next;
  }
  detail::fail(ErrorCode::kUndefined,
               "capture not reached within the rank bound");
}

// ---------------------------------------------------------------------------
// Cop policies and their verification.

enum class PolicyOrigin { kOptimal, kBagStrategy, kScripted };

inline const char* to_string(PolicyOrigin o) {
  switch (o) {
    case PolicyOrigin::kOptimal: return "optimal";
    case PolicyOrigin::kBagStrategy: return "bag-strategy";
    case PolicyOrigin::kScripted: return "scripted";
  }
  return "unknown";
}

// Deterministic cop strategy with a bounded memory word.
struct PolicyMove {
  std::uint64_t memory = 0;
  CopSet cops;
};

class CopPolicy {
 public:
  virtual ~CopPolicy() = default;
  virtual int cops() const = 0;
  virtual PolicyOrigin origin() const = 0;
  virtual PolicyMove start() const = 0;
  // Next cop positions at `layer`, robber to be chased at `robber`.
  virtual PolicyMove decide(std::uint64_t memory, int layer,
                            const CopSet& cops, int robber) const = 0;
};

class OptimalPolicy final : public CopPolicy {
 public:
  explicit OptimalPolicy(SolveResult result) : result_(std::move(result)) {
    detail::require(result_.copwin(), ErrorCode::kInvalidArgument,
                    "optimal policy needs a copwin solve result");
  }

  int cops() const override { return result_.cops(); }
  PolicyOrigin origin() const override { return PolicyOrigin::kOptimal; }
  PolicyMove start() const override { return {0, result_.initial_placement()}; }
  PolicyMove decide(std::uint64_t, int layer, const CopSet& cops,
                    int robber) const override {
    return {0, result_.best_cop_move(layer, cops, robber)};
  }

 private:
  SolveResult result_;
};

class ScriptedPolicy final : public CopPolicy {
 public:
  using Decide = std::function<PolicyMove(std::uint64_t, int, const CopSet&, int)>;

  ScriptedPolicy(CopSet placement, Decide decide)
      : placement_(std::move(placement)), decide_(std::move(decide)) {
    std::sort(placement_.begin(), placement_.end());
  }

  int cops() const override { return static_cast<int>(placement_.size()); }
  PolicyOrigin origin() const override { return PolicyOrigin::kScripted; }
  PolicyMove start() const override { return {0, placement_}; }
  PolicyMove decide(std::uint64_t memory, int layer, const CopSet& cops,
                    int robber) const override {
    return decide_(memory, layer, cops, robber);
  }

 private:
  CopSet placement_;
  Decide decide_;
};

// Cops stay put unless one of them can step onto the robber.
inline ScriptedPolicy stationary_policy(const PeriodicGraph& pg,
                                        CopSet placement) {
  return ScriptedPolicy(std::move(placement),
                        [&pg](std::uint64_t mem, int layer, const CopSet& cops,
                              int robber) {
                          CopSet next = cops;
                          for (int& c : next) {
                            if (pg.closed_neighborhood(layer, c).contains(robber)) {
                              c = robber;
                              break;
                            }
                          }
                          std::sort(next.begin(), next.end());
                          return PolicyMove{mem, next};
                        });
}

namespace detail {

// Whether cops at `from` can reach `to` in one move of G_t: a perfect
// matching between the two multisets along closed neighborhoods.
inline bool feasible_move(const PeriodicGraph& pg, int t, const CopSet& from,
                          const CopSet& to) {
  if (from.size() != to.size()) return false;
  const int k = static_cast<int>(from.size());
  std::vector<int> match(k, -1);
  std::function<bool(int, std::vector<bool>&)> augment =
      [&](int i, std::vector<bool>& seen) {
        for (int j = 0; j < k; ++j) {
          if (seen[j] || !pg.closed_neighborhood(t, from[i]).contains(to[j])) {
            continue;
          }
          seen[j] = true;
          if (match[j] < 0 || augment(match[j], seen)) {
            match[j] = i;
            return true;
          }
        }
        return false;
      };
  for (int i = 0; i < k; ++i) {
    std::vector<bool> seen(k, false);
    if (!augment(i, seen)) return false;
  }
  return true;
}

}  // namespace detail

struct PolicyVerdict {
  bool wins = false;
  // Worst-case number of cop moves until capture when wins.
  std::optional<long long> max_capture_moves;
  // A robber line escaping forever: cops-to-move states from a start, the
  // last one repeating an earlier state.
  std::vector<GameState> counterexample;
  std::size_t explored = 0;
};

// Plays the fixed policy against every robber strategy. The robber escapes
// iff a reachable cycle of non-captured states exists.
inline PolicyVerdict verify_policy(const PeriodicGraph& pg,
                                   const CopPolicy& policy, int k,
                                   const GameRules& rules = {}) {
  detail::require(policy.cops() == k, ErrorCode::kInvalidArgument,
                  "policy cop count differs from k");
  detail::require(k >= 1 && k <= 9, ErrorCode::kLimitExceeded,
                  "policy verification supports 1..9 cops");
  const int n = pg.order();
  const int p = pg.period();
  const bool relaxed = rules.capture == CaptureRule::kOnContact;

  struct Key {
    std::uint64_t memory;
    std::uint64_t layer;
    std::uint64_t packed;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.memory * 0x9E3779B97F4A7C15ULL;
      h ^= (k.layer + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
      h ^= (k.packed + 0x85EBCA77C2B2AE63ULL) + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };
  struct Node {
    int t;
    std::uint64_t memory;
    CopSet cops;
    int robber;
    std::vector<int> next;
    long long value = 0;
    int color = 0;  // 0 new, 1 on stack, 2 done
  };

  std::vector<Node> nodes;
  std::unordered_map<Key, int, KeyHash> index;
  auto node_of = [&](int t, std::uint64_t mem, const CopSet& cops, int r) {
    std::uint64_t packed = static_cast<std::uint64_t>(r);
    for (int i = 0; i < k; ++i) packed |= static_cast<std::uint64_t>(cops[i]) << (6 * (i + 1));
    Key key{mem, static_cast<std::uint64_t>(t), packed};
    auto [it, inserted] = index.try_emplace(key, static_cast<int>(nodes.size()));
    if (inserted) {
      detail::require(nodes.size() < rules.state_budget,
                      ErrorCode::kBudgetExceeded,
                      "policy verification exceeded the state budget");
      nodes.push_back({t, mem, cops, r, {}, 0, 0});
    }
    return it->second;
  };
  auto state_name = [&](const Node& nd) {
    std::string s = "t=" + std::to_string(nd.t) + " cops=[";
    for (std::size_t i = 0; i < nd.cops.size(); ++i) {
      s += (i ? "," : "") + std::to_string(nd.cops[i]);
    }
    return s + "] robber=" + std::to_string(nd.robber);
  };
  // Fills successors; returns the contribution of captures (1 if any reply
  // or the cop move itself ends the game).
  auto expand = [&](int id) {
    Node nd = nodes[id];
    PolicyMove mv = policy.decide(nd.memory, nd.t, nd.cops, nd.robber);
    std::sort(mv.cops.begin(), mv.cops.end());
    for (int c : mv.cops) {
      detail::require(c >= 0 && c < n, ErrorCode::kInfeasibleMove,
                      "policy placed a cop outside the graph at " + state_name(nd));
    }
    if (!detail::feasible_move(pg, nd.t, nd.cops, mv.cops)) {
      detail::fail(ErrorCode::kInfeasibleMove,
                   "policy move is infeasible at " + state_name(nd));
    }
    std::vector<int> next;
    bool captured = std::find(mv.cops.begin(), mv.cops.end(), nd.robber) !=
                    mv.cops.end();
    if (!captured) {
      for (int r : pg.closed_neighborhood(nd.t, nd.robber)) {
        bool on_cop = std::find(mv.cops.begin(), mv.cops.end(), r) != mv.cops.end();
        if (relaxed && on_cop) continue;
        next.push_back(node_of(layer_of(nd.t + 1, p), mv.memory, mv.cops, r));
      }
    }
    nodes[id].next = std::move(next);
  };

  PolicyVerdict verdict;
  PolicyMove start = policy.start();
  std::sort(start.cops.begin(), start.cops.end());
  detail::require(static_cast<int>(start.cops.size()) == k,
                  ErrorCode::kInvalidArgument, "policy placement size differs from k");
  long long worst = 0;
  for (int r0 = 0; r0 < n; ++r0) {
    if (std::find(start.cops.begin(), start.cops.end(), r0) != start.cops.end()) {
      continue;
    }
    int root = node_of(0, start.memory, start.cops, r0);
    if (nodes[root].color == 2) {
      worst = std::max(worst, nodes[root].value);
      continue;
    }
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    nodes[root].color = 1;
    expand(root);
    while (!stack.empty()) {
      auto& [id, pos] = stack.back();
      if (pos < nodes[id].next.size()) {
        int child = nodes[id].next[pos++];
        if (nodes[child].color == 1) {
          for (const auto& [sid, unused] : stack) {
            const Node& s = nodes[sid];
            verdict.counterexample.push_back(
                {s.t, s.cops, s.robber, Side::kCopsToMove});
          }
          const Node& c = nodes[child];
          verdict.counterexample.push_back({c.t, c.cops, c.robber, Side::kCopsToMove});
          verdict.explored = nodes.size();
          return verdict;
        }
        if (nodes[child].color == 0) {
          nodes[child].color = 1;
          expand(child);
          stack.emplace_back(child, 0);
        }
        continue;
      }
      long long best = 0;
      for (int c : nodes[id].next) best = std::max(best, nodes[c].value);
      nodes[id].value = best + 1;
      nodes[id].color = 2;
      stack.pop_back();
    }
    worst = std::max(worst, nodes[root].value);
  }
  verdict.wins = true;
  verdict.max_capture_moves = worst;
  verdict.explored = nodes.size();
  return verdict;
}

// ---------------------------------------------------------------------------
// Bounded maximum cop number over periodic graphs with a given footprint.

struct CtmaxResult {
  int value = 0;
  PeriodicGraph witness;
  std::uint64_t enumerated = 0;
};

inline constexpr std::uint64_t kCtmaxCandidateLimit = 10'000'000;

// Max of c(periodic) over all sequences of spanning subgraphs of g with
// union E(g) and period <= max_period. A bounded under-approximation of the
// maximum over all periods.
inline CtmaxResult ctmax_bounded(const Graph& g, int max_period,
                                 const GameRules& rules = {}) {
  detail::require(is_connected(g), ErrorCode::kInvalidArgument,
                  "ctmax needs a connected footprint");
  detail::require(g.order() <= 6 && max_period >= 1 && max_period <= 3,
                  ErrorCode::kLimitExceeded,
                  "ctmax enumeration limited to n <= 6 and period <= 3");
  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::uint64_t candidates = 0;
  for (int p = 1; p <= max_period; ++p) {
    detail::require(m * p < 40, ErrorCode::kLimitExceeded,
                    "ctmax enumeration too large");
    candidates += std::uint64_t{1} << (m * p);
  }
  detail::require(candidates <= kCtmaxCandidateLimit, ErrorCode::kLimitExceeded,
                  "ctmax enumeration exceeds 10^7 candidates");
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  auto subgraph = [&](std::uint64_t mask) {
    Graph h(g.order());
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) h.add_edge(edges[i].u, edges[i].v);
    }
    return h;
  };
  CtmaxResult best;
  best.value = -1;
  for (int p = 1; p <= max_period; ++p) {
    const std::uint64_t count = std::uint64_t{1} << (m * p);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t uni = 0;
      std::vector<std::uint64_t> masks(p);
      for (int t = 0; t < p; ++t) {
        masks[t] = (code >> (m * t)) & full;
        uni |= masks[t];
      }
      if (uni != full) continue;
      ++best.enumerated;
      std::vector<Graph> snaps;
      for (std::uint64_t mk : masks) snaps.push_back(subgraph(mk));
      PeriodicGraph pg(std::move(snaps));
      int c = cop_number(pg, rules);
      if (c > best.value) {
        best.value = c;
        best.witness = pg;
      }
    }
  }
  return best;
}

}  // namespace percop

#endif  // PERCOP_SOLVER_HPP_
