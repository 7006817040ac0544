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

// Instance files, search-spec files and canonical JSON output.
//
// Instance files are JSON objects with the keys
//   version      always 1
//   n            vertex count
//   period       number of snapshots
//   snapshots    one edge list per snapshot, edges as [u, v] with u < v
//   labels       optional vertex names
//   expected     optional {footprint_copnum, max_snapshot_copnum, copnum}
//   certificate  optional object written by the search tool
// Unknown keys are rejected. Semantic errors report the offending line.

#ifndef PERCOP_IO_HPP_
#define PERCOP_IO_HPP_

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "percop/constructions.hpp"
#include "percop/error.hpp"
#include "percop/graph.hpp"
#include "percop/periodic.hpp"
#include "percop/search.hpp"
#include "percop/solver.hpp"

namespace percop {

using Json = nlohmann::json;

inline constexpr int kInstanceVersion = 1;

enum class ParseErrorCode {
  kMalformed,
  kSchema,
  kUnsupportedVersion,
  kOutOfRange,
  kSelfLoop,
  kEdgeOrder,
  kDuplicateEdge,
  kPeriodMismatch,
  kIo,
};

inline const char* to_string(ParseErrorCode c) {
  switch (c) {
    case ParseErrorCode::kMalformed: return "malformed";
    case ParseErrorCode::kSchema: return "schema";
    case ParseErrorCode::kUnsupportedVersion: return "unsupported_version";
    case ParseErrorCode::kOutOfRange: return "out_of_range";
    case ParseErrorCode::kSelfLoop: return "self_loop";
    case ParseErrorCode::kEdgeOrder: return "edge_order";
    case ParseErrorCode::kDuplicateEdge: return "duplicate_edge";
    case ParseErrorCode::kPeriodMismatch: return "period_mismatch";
    case ParseErrorCode::kIo: return "io";
  }
  return "unknown";
}

class ParseError : public Error {
 public:
  ParseError(ParseErrorCode code, int line, const std::string& what)
      : Error(ErrorCode::kInvalidArgument,
              (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + what),
        parse_code_(code),
        line_(line) {}

  ParseErrorCode parse_code() const noexcept { return parse_code_; }
  int line() const noexcept { return line_; }

 private:
  ParseErrorCode parse_code_;
  int line_;
};

// ---------------------------------------------------------------------------
// Canonical output: keys sorted, two-space indent, arrays without objects and
// at most two levels deep printed on one line.

namespace detail {

inline int array_depth(const Json& j) {
  if (!j.is_array()) return j.is_object() ? 100 : 0;
  int d = 0;
  for (const Json& e : j) d = std::max(d, array_depth(e));
  return d + 1;
}

inline void write_inline(std::ostream& os, const Json& j) {
  if (!j.is_array()) {
    os << j.dump();
    return;
  }
  os << '[';
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) os << ", ";
    write_inline(os, j[i]);
  }
  os << ']';
}

inline void write_canonical(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << pad << Json(it.key()).dump() << ": ";
      write_canonical(os, it.value(), indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << '}';
  } else if (j.is_array() && array_depth(j) > 2 && !j.empty()) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write_canonical(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << ']';
  } else {
    write_inline(os, j);
  }
}

}  // namespace detail

inline std::string to_canonical(const Json& j) {
  std::ostringstream os;
  detail::write_canonical(os, j, 0);
  os << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Line lookup for a path inside already-valid JSON text.

using JsonPathStep = std::variant<std::string, std::size_t>;

namespace detail {

class JsonLocator {
 public:
  explicit JsonLocator(const std::string& text) : s_(text) {}

  int line_of(const std::vector<JsonPathStep>& path) {
    pos_ = 0;
    line_ = 1;
    return descend(path, 0);
  }

 private:
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }
  std::string string() {
    std::string out;
    ++pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') out += s_[pos_++];
      out += s_[pos_++];
    }
    ++pos_;
    return out;
  }
  void skip() {
    ws();
    if (pos_ >= s_.size()) return;
    char c = s_[pos_];
    if (c == '"') {
      string();
    } else if (c == '[' || c == '{') {
      int depth = 0;
      while (pos_ < s_.size()) {
        char d = s_[pos_];
        if (d == '"') {
          string();
          continue;
        }
        if (d == '\n') ++line_;
        if (d == '[' || d == '{') ++depth;
        if (d == ']' || d == '}') --depth;
        ++pos_;
        if (depth == 0) break;
      }
    } else {
      while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '}' &&
             !std::isspace(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
    }
  }
  int descend(const std::vector<JsonPathStep>& path, std::size_t depth) {
    ws();
    if (depth == path.size() || pos_ >= s_.size()) return line_;
    const int here = line_;
    if (s_[pos_] == '{' && std::holds_alternative<std::string>(path[depth])) {
      ++pos_;
      while (true) {
        ws();
        if (pos_ >= s_.size() || s_[pos_] == '}') return here;
        std::string key = string();
        ws();
        ++pos_;  // ':'
        if (key == std::get<std::string>(path[depth])) return descend(path, depth + 1);
        skip();
        ws();
        if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
      }
    }
    if (s_[pos_] == '[' && std::holds_alternative<std::size_t>(path[depth])) {
      ++pos_;
      for (std::size_t i = 0;; ++i) {
        ws();
        if (pos_ >= s_.size() || s_[pos_] == ']') return here;
        if (i == std::get<std::size_t>(path[depth])) return descend(path, depth + 1);
        skip();
        ws();
        if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
      }
    }
    return here;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

// Typed field access that raises ParseError with line context.
class Reader {
 public:
  explicit Reader(const std::string& text) : locator_(text) {}

  [[noreturn]] void fail(ParseErrorCode code, const std::vector<JsonPathStep>& path,
                         const std::string& what) {
    throw ParseError(code, locator_.line_of(path), what);
  }

  void only_keys(const Json& obj, const std::vector<JsonPathStep>& path,
                 std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(ParseErrorCode::kSchema, path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool ok = false;
      for (const char* k : allowed) ok = ok || it.key() == k;
      if (!ok) {
        auto at = path;
        at.emplace_back(it.key());
        fail(ParseErrorCode::kSchema, at, "unknown field '" + it.key() + "'");
      }
    }
  }

  const Json& need(const Json& obj, const std::vector<JsonPathStep>& path, const char* key) {
    if (!obj.contains(key))
      fail(ParseErrorCode::kSchema, path, std::string("missing field '") + key + "'");
    return obj.at(key);
  }

  long long integer(const Json& j, const std::vector<JsonPathStep>& path, const std::string& what) {
    if (!j.is_number_integer()) fail(ParseErrorCode::kSchema, path, what + " must be an integer");
    return j.get<long long>();
  }

  bool boolean(const Json& j, const std::vector<JsonPathStep>& path, const std::string& what) {
    if (!j.is_boolean()) fail(ParseErrorCode::kSchema, path, what + " must be a boolean");
    return j.get<bool>();
  }

  std::string text(const Json& j, const std::vector<JsonPathStep>& path, const std::string& what) {
    if (!j.is_string()) fail(ParseErrorCode::kSchema, path, what + " must be a string");
    return j.get<std::string>();
  }

  const Json& array(const Json& j, const std::vector<JsonPathStep>& path, const std::string& what) {
    if (!j.is_array()) fail(ParseErrorCode::kSchema, path, what + " must be an array");
    return j;
  }

  // Edge list over 0..n-1; each edge [u, v] with u < v, no repeats.
  std::vector<Edge> edges(const Json& j, std::vector<JsonPathStep> path, int n,
                          const std::string& what) {
    array(j, path, what);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto at = path;
      at.emplace_back(i);
      const Json& e = j[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        fail(ParseErrorCode::kSchema, at, what + ": edge must be a pair of integers");
      long long u = e[0].get<long long>(), v = e[1].get<long long>();
      const std::string shown = "[" + std::to_string(u) + ", " + std::to_string(v) + "]";
      if (u < 0 || v < 0 || u >= n || v >= n)
        fail(ParseErrorCode::kOutOfRange, at,
             "vertex index out of range: " + shown + " in " + what);
      if (u == v) fail(ParseErrorCode::kSelfLoop, at, "self-loop forbidden: " + shown + " in " + what);
      if (u > v) fail(ParseErrorCode::kEdgeOrder, at, "edge must list u < v: " + shown + " in " + what);
      Edge edge{static_cast<int>(u), static_cast<int>(v)};
      if (std::find(out.begin(), out.end(), edge) != out.end())
        fail(ParseErrorCode::kDuplicateEdge, at, "duplicate edge " + shown + " in " + what);
      out.push_back(edge);
    }
    return out;
  }

  std::vector<std::string> labels(const Json& j, const std::vector<JsonPathStep>& path, int n) {
    array(j, path, "labels");
    if (static_cast<int>(j.size()) != n)
      fail(ParseErrorCode::kSchema, path, "labels must name all " + std::to_string(n) + " vertices");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto at = path;
      at.emplace_back(i);
      out.push_back(text(j[i], at, "label"));
    }
    return out;
  }

 private:
  JsonLocator locator_;
};

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    int line = 1;
    for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(ParseErrorCode::kMalformed, line, "malformed JSON: " + std::string(e.what()));
  }
}

inline Json edges_json(const Graph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

inline bool default_labels(const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != std::to_string(i)) return false;
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Instance files.

struct InstanceFile {
  PeriodicGraph graph;
  ExpectedTriple expected;
  std::optional<Json> certificate;
};

inline InstanceFile parse_instance(const std::string& text) {
  using P = std::vector<JsonPathStep>;
  const Json j = detail::parse_json_text(text);
  detail::Reader r(text);
  r.only_keys(j, {}, {"version", "n", "period", "snapshots", "labels", "expected", "certificate"});
  const long long version = r.integer(r.need(j, {}, "version"), P{"version"}, "version");
  if (version != kInstanceVersion)
    r.fail(ParseErrorCode::kUnsupportedVersion, P{"version"},
           "unsupported version " + std::to_string(version));
  const long long n = r.integer(r.need(j, {}, "n"), P{"n"}, "n");
  if (n < 1 || n > VertexSet::kCapacity)
    r.fail(ParseErrorCode::kOutOfRange, P{"n"}, "n must lie in 1..64");
  const long long period = r.integer(r.need(j, {}, "period"), P{"period"}, "period");
  if (period < 1) r.fail(ParseErrorCode::kOutOfRange, P{"period"}, "period must be >= 1");
  const Json& snaps = r.array(r.need(j, {}, "snapshots"), P{"snapshots"}, "snapshots");
  if (static_cast<long long>(snaps.size()) != period)
    r.fail(ParseErrorCode::kPeriodMismatch, P{"snapshots"},
           "period mismatch: period " + std::to_string(period) + " but " +
               std::to_string(snaps.size()) + " snapshots");
  std::vector<Graph> graphs;
  for (std::size_t t = 0; t < snaps.size(); ++t) {
    auto edges = r.edges(snaps[t], P{"snapshots", t}, static_cast<int>(n),
                         "snapshot " + std::to_string(t));
    graphs.emplace_back(static_cast<int>(n), edges);
  }
  InstanceFile out{PeriodicGraph(std::move(graphs)), {}, std::nullopt};
  if (j.contains("labels")) out.graph.set_labels(r.labels(j["labels"], P{"labels"}, static_cast<int>(n)));
  if (j.contains("expected")) {
    const Json& e = j["expected"];
    r.only_keys(e, P{"expected"}, {"footprint_copnum", "max_snapshot_copnum", "copnum"});
    auto field = [&](const char* key) -> std::optional<int> {
      if (!e.contains(key)) return std::nullopt;
      long long v = r.integer(e[key], P{"expected", key}, key);
      if (v < 1 || v > n) r.fail(ParseErrorCode::kOutOfRange, P{"expected", key},
                                 std::string(key) + " must lie in 1..n");
      return static_cast<int>(v);
    };
    out.expected = {field("footprint_copnum"), field("max_snapshot_copnum"), field("copnum")};
  }
  if (j.contains("certificate")) {
    if (!j["certificate"].is_object())
      r.fail(ParseErrorCode::kSchema, P{"certificate"}, "certificate must be an object");
    out.certificate = j["certificate"];
  }
  return out;
}

inline Json instance_json(const PeriodicGraph& pg, const ExpectedTriple& expected = {},
                          const std::optional<Json>& certificate = std::nullopt) {
  Json j;
  j["version"] = kInstanceVersion;
  j["n"] = pg.order();
  j["period"] = pg.period();
  Json snaps = Json::array();
  for (const Graph& g : pg.snapshots()) snaps.push_back(detail::edges_json(g));
  j["snapshots"] = snaps;
  if (!pg.labels().empty() && !detail::default_labels(pg.labels())) j["labels"] = pg.labels();
  Json e = Json::object();
  if (expected.footprint) e["footprint_copnum"] = *expected.footprint;
  if (expected.max_snapshot) e["max_snapshot_copnum"] = *expected.max_snapshot;
  if (expected.periodic) e["copnum"] = *expected.periodic;
  if (!e.empty()) j["expected"] = e;
  if (certificate) j["certificate"] = *certificate;
  return j;
}

inline std::string serialize_instance(const PeriodicGraph& pg, const ExpectedTriple& expected = {},
                                      const std::optional<Json>& certificate = std::nullopt) {
  return to_canonical(instance_json(pg, expected, certificate));
}

inline std::string serialize_instance(const InstanceFile& f) {
  return serialize_instance(f.graph, f.expected, f.certificate);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseErrorCode::kIo, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(ParseErrorCode::kIo, 0, "cannot write " + path);
  out << text;
}

inline InstanceFile load_instance(const std::string& path) {
  return parse_instance(read_text_file(path));
}

// ---------------------------------------------------------------------------
// JSON views of results.

inline Json triple_json(const Triple& t) {
  return {{"footprint_copnum", t.footprint},
          {"max_snapshot_copnum", t.max_snapshot},
          {"min_snapshot_copnum", t.min_snapshot},
          {"copnum", t.periodic}};
}

inline Json certificate_json(const Certificate& c) {
  Json j;
  j["triple"] = triple_json(c.triple);
  j["snapshot_copnums"] = c.snapshot_copnums;
  Json corners = Json::object();
  for (auto [k, count] : c.corner_counts) corners[std::to_string(k)] = count;
  j["corner_counts"] = corners;
  if (c.domination_g0) j["domination_g0"] = *c.domination_g0;
  if (c.removed_copnum) j["removed_copnum"] = *c.removed_copnum;
  j["satisfied"] = c.satisfied();
  j["failures"] = c.failures;
  return j;
}

inline Json trace_json(const Trace& trace, const PeriodicGraph& pg) {
  Json rounds = Json::array();
  for (const TraceRound& r : trace.rounds) {
    Json cops = Json::array();
    for (int c : r.cops) cops.push_back(pg.snapshot(0).label(c));
    rounds.push_back({{"time", r.time},
                      {"cops", cops},
                      {"robber", pg.snapshot(0).label(r.robber)},
                      {"captured", r.captured}});
  }
  Json placement = Json::array();
  for (int c : trace.placement) placement.push_back(pg.snapshot(0).label(c));
  return {{"placement", placement},
          {"robber_start", pg.snapshot(0).label(trace.robber_start)},
          {"capture_time", trace.capture_time ? Json(*trace.capture_time) : Json(nullptr)},
          {"rounds", rounds}};
}

// ---------------------------------------------------------------------------
// Search-spec files.
//
//   name, n, period, block, budget_seconds, seed, max_evaluations, count_all,
//   labels, pinned_edges (list per slot), pinned_steps,
//   snapshots: {kind, within, steps, connected, girth, copnum}
//   footprint: {equals, universal_vertex, connected, copnum}
//   targets:   {triple: {footprint_copnum, max_snapshot_copnum, copnum},
//               no_corner, domination_g0, removed_vertex, removed_copnum}

inline SearchSpec parse_search_spec(const std::string& text) {
  using P = std::vector<JsonPathStep>;
  const Json j = detail::parse_json_text(text);
  detail::Reader r(text);
  r.only_keys(j, {}, {"name", "n", "period", "block", "budget_seconds", "seed", "max_evaluations",
                      "count_all", "labels", "pinned_edges", "pinned_steps", "snapshots",
                      "footprint", "targets"});
  SearchSpec s;
  s.name = r.text(r.need(j, {}, "name"), P{"name"}, "name");
  const long long n = r.integer(r.need(j, {}, "n"), P{"n"}, "n");
  if (n < 1 || n > kMaxPairOrder)
    r.fail(ParseErrorCode::kOutOfRange, P{"n"}, "n must lie in 1..11");
  s.n = static_cast<int>(n);
  s.period = static_cast<int>(r.integer(r.need(j, {}, "period"), P{"period"}, "period"));
  auto opt_int = [&](const Json& obj, P path, const char* key) -> std::optional<int> {
    if (!obj.contains(key)) return std::nullopt;
    path.emplace_back(std::string(key));
    return static_cast<int>(r.integer(obj[key], path, key));
  };
  auto opt_bool = [&](const Json& obj, P path, const char* key) {
    if (!obj.contains(key)) return false;
    path.emplace_back(std::string(key));
    return r.boolean(obj[key], path, key);
  };
  auto graph = [&](const Json& v, const P& path, const std::string& what) {
    if (v.is_string() && v.get<std::string>() == "complete") return complete_graph(s.n);
    if (v.is_string() && v.get<std::string>() == "petersen" && s.n == 10) return petersen_graph();
    return Graph(s.n, r.edges(v, path, s.n, what));
  };
  if (auto b = opt_int(j, {}, "block")) s.block = *b;
  if (j.contains("budget_seconds")) {
    if (!j["budget_seconds"].is_number())
      r.fail(ParseErrorCode::kSchema, P{"budget_seconds"}, "budget_seconds must be a number");
    s.budget_seconds = j["budget_seconds"].get<double>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      r.fail(ParseErrorCode::kSchema, P{"seed"}, "seed must be a non-negative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("max_evaluations")) {
    if (!j["max_evaluations"].is_number_unsigned())
      r.fail(ParseErrorCode::kSchema, P{"max_evaluations"}, "max_evaluations must be a non-negative integer");
    s.max_evaluations = j["max_evaluations"].get<std::uint64_t>();
  }
  s.count_all = opt_bool(j, {}, "count_all");
  if (j.contains("labels")) s.labels = r.labels(j["labels"], P{"labels"}, s.n);
  if (j.contains("pinned_edges")) {
    const Json& pe = r.array(j["pinned_edges"], P{"pinned_edges"}, "pinned_edges");
    for (std::size_t i = 0; i < pe.size(); ++i)
      s.pinned_edges.push_back(r.edges(pe[i], P{"pinned_edges", i}, s.n,
                                       "pinned slot " + std::to_string(i)));
  }
  if (j.contains("pinned_steps")) {
    const Json& ps = r.array(j["pinned_steps"], P{"pinned_steps"}, "pinned_steps");
    for (std::size_t i = 0; i < ps.size(); ++i)
      s.pinned_steps.push_back(static_cast<int>(r.integer(ps[i], P{"pinned_steps", i}, "step")));
  }
  if (j.contains("snapshots")) {
    const Json& sn = j["snapshots"];
    const P at{"snapshots"};
    r.only_keys(sn, at, {"kind", "within", "steps", "connected", "girth", "copnum"});
    if (sn.contains("kind")) {
      std::string kind = r.text(sn["kind"], P{"snapshots", "kind"}, "kind");
      if (kind == "subgraph") {
        s.snapshots.kind = SnapshotKind::kSubgraph;
      } else if (kind == "hamiltonian-path") {
        s.snapshots.kind = SnapshotKind::kHamiltonianPath;
      } else if (kind == "circulant") {
        s.snapshots.kind = SnapshotKind::kCirculant;
      } else {
        r.fail(ParseErrorCode::kSchema, P{"snapshots", "kind"}, "unknown snapshot kind '" + kind + "'");
      }
    }
    if (sn.contains("within")) s.snapshots.within = graph(sn["within"], P{"snapshots", "within"}, "within");
    if (sn.contains("steps")) {
      s.snapshots.steps.clear();
      const Json& st = r.array(sn["steps"], P{"snapshots", "steps"}, "steps");
      for (std::size_t i = 0; i < st.size(); ++i)
        s.snapshots.steps.push_back(static_cast<int>(r.integer(st[i], P{"snapshots", "steps", i}, "step")));
    }
    s.snapshots.connected = opt_bool(sn, at, "connected");
    s.snapshots.girth = opt_int(sn, at, "girth");
    s.snapshots.copnum = opt_int(sn, at, "copnum");
  }
  if (j.contains("footprint")) {
    const Json& f = j["footprint"];
    const P at{"footprint"};
    r.only_keys(f, at, {"equals", "universal_vertex", "connected", "copnum"});
    if (f.contains("equals")) s.footprint.equals = graph(f["equals"], P{"footprint", "equals"}, "footprint");
    s.footprint.universal_vertex = opt_int(f, at, "universal_vertex");
    s.footprint.connected = opt_bool(f, at, "connected");
    s.footprint.copnum = opt_int(f, at, "copnum");
  }
  if (j.contains("targets")) {
    const Json& t = j["targets"];
    const P at{"targets"};
    r.only_keys(t, at, {"triple", "no_corner", "domination_g0", "removed_vertex", "removed_copnum"});
    if (t.contains("triple")) {
      const Json& tr = t["triple"];
      const P tat{"targets", "triple"};
      r.only_keys(tr, tat, {"footprint_copnum", "max_snapshot_copnum", "copnum"});
      s.targets.triple = {opt_int(tr, tat, "footprint_copnum"),
                          opt_int(tr, tat, "max_snapshot_copnum"), opt_int(tr, tat, "copnum")};
    }
    if (t.contains("no_corner")) {
      const Json& nc = r.array(t["no_corner"], P{"targets", "no_corner"}, "no_corner");
      for (std::size_t i = 0; i < nc.size(); ++i)
        s.targets.no_corner.push_back(static_cast<int>(r.integer(nc[i], P{"targets", "no_corner", i}, "k")));
    }
    s.targets.domination_g0 = opt_int(t, at, "domination_g0");
    s.targets.removed_vertex = opt_int(t, at, "removed_vertex");
    s.targets.removed_copnum = opt_int(t, at, "removed_copnum");
  }
  try {
    validate_spec(s);
  } catch (const Error& e) {
    throw ParseError(ParseErrorCode::kSchema, 0, e.what());
  }
  return s;
}

inline Json search_spec_json(const SearchSpec& s) {
  Json j;
  j["name"] = s.name;
  j["n"] = s.n;
  j["period"] = s.period;
  j["block"] = s.block;
  j["budget_seconds"] = s.budget_seconds;
  j["seed"] = s.seed;
  if (s.max_evaluations) j["max_evaluations"] = s.max_evaluations;
  if (s.count_all) j["count_all"] = true;
  if (!s.labels.empty() && !detail::default_labels(s.labels)) j["labels"] = s.labels;
  if (!s.pinned_edges.empty()) {
    Json pe = Json::array();
    for (const auto& slot : s.pinned_edges) {
      Json list = Json::array();
      for (const Edge& e : slot) list.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
      pe.push_back(list);
    }
    j["pinned_edges"] = pe;
  }
  if (!s.pinned_steps.empty()) j["pinned_steps"] = s.pinned_steps;
  Json sn;
  sn["kind"] = to_string(s.snapshots.kind);
  if (s.snapshots.within) sn["within"] = detail::edges_json(*s.snapshots.within);
  if (s.snapshots.kind == SnapshotKind::kCirculant) sn["steps"] = s.snapshots.steps;
  if (s.snapshots.connected) sn["connected"] = true;
  if (s.snapshots.girth) sn["girth"] = *s.snapshots.girth;
  if (s.snapshots.copnum) sn["copnum"] = *s.snapshots.copnum;
  j["snapshots"] = sn;
  Json f = Json::object();
  if (s.footprint.equals) f["equals"] = detail::edges_json(*s.footprint.equals);
  if (s.footprint.universal_vertex) f["universal_vertex"] = *s.footprint.universal_vertex;
  if (s.footprint.connected) f["connected"] = true;
  if (s.footprint.copnum) f["copnum"] = *s.footprint.copnum;
  j["footprint"] = f;
  Json t = Json::object();
  Json tr = Json::object();
  if (s.targets.triple.footprint) tr["footprint_copnum"] = *s.targets.triple.footprint;
  if (s.targets.triple.max_snapshot) tr["max_snapshot_copnum"] = *s.targets.triple.max_snapshot;
  if (s.targets.triple.periodic) tr["copnum"] = *s.targets.triple.periodic;
  t["triple"] = tr;
  if (!s.targets.no_corner.empty()) t["no_corner"] = s.targets.no_corner;
  if (s.targets.domination_g0) t["domination_g0"] = *s.targets.domination_g0;
  if (s.targets.removed_vertex) t["removed_vertex"] = *s.targets.removed_vertex;
  if (s.targets.removed_copnum) t["removed_copnum"] = *s.targets.removed_copnum;
  j["targets"] = t;
  return j;
}

inline std::string serialize_search_spec(const SearchSpec& s) {
  return to_canonical(search_spec_json(s));
}

// A named spec, or a path to a spec file.
inline SearchSpec resolve_search_spec(const std::string& name_or_path) {
  for (const auto& name : named_spec_names())
    if (name == name_or_path) return named_spec(name);
  return parse_search_spec(read_text_file(name_or_path));
}

// Witness file contents: the instance, its spec targets and a certificate.
inline std::string serialize_witness(const SearchSpec& spec, const SearchOutcome& out) {
  detail::require(out.witness && out.certificate, ErrorCode::kInvalidArgument,
                  "no witness to serialize");
  Json cert = certificate_json(*out.certificate);
  cert["spec"] = spec.name;
  cert["seed"] = spec.seed;
  cert["mode"] = out.mode;
  cert["evaluations"] = out.evaluations;
  if (!out.witness->steps.empty()) cert["steps"] = out.witness->steps;
  return serialize_instance(out.witness->instance, spec.targets.triple, cert);
}

}  // namespace percop

#endif  // PERCOP_IO_HPP_
