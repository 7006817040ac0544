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

#ifndef PERCOP_TABLE_HPP_
#define PERCOP_TABLE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "percop/constructions.hpp"
#include "percop/error.hpp"
#include "percop/io.hpp"
#include "percop/search.hpp"
#include "percop/solver.hpp"

namespace percop {

// Every combination (c(G), c(G_max), c(periodic)) in 1..3, with how this
// library backs it.
enum class RowKind { kConstructive, kDiagonal, kExternal, kUndetermined };

inline const char* to_string(RowKind k) {
  switch (k) {
    case RowKind::kConstructive: return "constructive";
    case RowKind::kDiagonal: return "diagonal";
    case RowKind::kExternal: return "external";
    case RowKind::kUndetermined: return "undetermined";
  }
  return "unknown";
}

enum class RowStatus { kPass, kFail, kMissing, kLimit, kSkipped, kExternal, kUndetermined };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kPass: return "PASS";
    case RowStatus::kFail: return "FAIL";
    case RowStatus::kMissing: return "MISSING";
    case RowStatus::kLimit: return "LIMIT";
    case RowStatus::kSkipped: return "SKIPPED";
    case RowStatus::kExternal: return "external (out of scope)";
    case RowStatus::kUndetermined: return "UNDETERMINED";
  }
  return "unknown";
}

struct TableRow {
  int footprint = 0;
  int max_snapshot = 0;
  int periodic = 0;
  RowKind kind = RowKind::kExternal;
  std::string generator;  // construction name, empty for witness rows
  std::string witness;    // witness file stem under <data>/witnesses
};

inline std::vector<TableRow> table_rows() {
  std::vector<TableRow> rows;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) rows.push_back({a, b, c, RowKind::kExternal, "", ""});
  auto set = [&](int a, int b, int c, RowKind kind, std::string gen, std::string wit) {
    TableRow& r = rows[(a - 1) * 9 + (b - 1) * 3 + (c - 1)];
    r.kind = kind;
    r.generator = std::move(gen);
    r.witness = std::move(wit);
  };
  set(1, 1, 1, RowKind::kDiagonal, "diagonal_111", "");
  set(2, 2, 2, RowKind::kDiagonal, "diagonal_222", "");
  set(3, 3, 3, RowKind::kDiagonal, "diagonal_333", "");
  set(1, 1, 2, RowKind::kConstructive, "", "thm112");
  set(1, 2, 2, RowKind::kConstructive, "", "lem122");
  set(1, 2, 3, RowKind::kConstructive, "", "circulant_123");
  set(1, 3, 2, RowKind::kConstructive, "petersen_132", "");
  set(2, 2, 1, RowKind::kConstructive, "bowtie_221", "");
  set(2, 3, 1, RowKind::kConstructive, "petersen_231", "");
  set(3, 1, 1, RowKind::kConstructive, "petersen_311", "");
  set(3, 2, 1, RowKind::kConstructive, "", "search_321");
  set(1, 1, 3, RowKind::kUndetermined, "", "");
  set(2, 1, 3, RowKind::kUndetermined, "", "");
  set(3, 1, 3, RowKind::kUndetermined, "", "");
  return rows;
}

struct TableOptions {
  std::string data_dir;
  bool skip_search_rows = false;
  GameRules rules;
};

struct RowResult {
  TableRow row;
  RowStatus status = RowStatus::kExternal;
  std::string source;
  std::optional<Triple> measured;
  std::string detail;
};

struct TableReport {
  std::vector<RowResult> rows;

  int count(RowStatus s) const {
    int n = 0;
    for (const auto& r : rows) n += r.status == s;
    return n;
  }
  // 0 when every in-scope row passes, 2 on mismatch or missing witness,
  // 3 when a row hit a solver or enumeration limit.
  int exit_code() const {
    if (count(RowStatus::kFail) || count(RowStatus::kMissing)) return 2;
    if (count(RowStatus::kLimit)) return 3;
    return 0;
  }
};

inline RowResult verify_row(const TableRow& row, const TableOptions& opt) {
  RowResult res{row, RowStatus::kExternal, "", std::nullopt, ""};
  if (row.kind == RowKind::kExternal) return res;
  if (row.kind == RowKind::kUndetermined) {
    res.status = RowStatus::kUndetermined;
    return res;
  }
  const Triple want{row.footprint, row.max_snapshot, row.periodic, 0};
  try {
    PeriodicGraph pg;
    if (!row.generator.empty()) {
      res.source = "generator " + row.generator;
      pg = make_construction(row.generator).instance;
    } else {
      const std::string path =
          (std::filesystem::path(opt.data_dir) / "witnesses" / (row.witness + ".json")).string();
      res.source = "witness " + row.witness + ".json";
      if (opt.skip_search_rows) {
        res.status = RowStatus::kSkipped;
        return res;
      }
      if (!std::filesystem::exists(path)) {
        res.status = RowStatus::kMissing;
        res.detail = "missing witness file " + path;
        return res;
      }
      pg = load_instance(path).graph;
      Certificate cert = certify(named_spec(row.witness), pg, opt.rules);
      if (!cert.satisfied()) {
        res.status = RowStatus::kFail;
        res.measured = cert.triple;
        res.detail = "witness fails its spec: " + cert.failures.front();
        return res;
      }
    }
    Triple got = triple(pg, opt.rules);
    res.measured = got;
    bool ok = got.footprint == want.footprint && got.max_snapshot == want.max_snapshot &&
              got.periodic == want.periodic;
    res.status = ok ? RowStatus::kPass : RowStatus::kFail;
  } catch (const BudgetError& e) {
    res.status = RowStatus::kLimit;
    res.detail = e.what();
  } catch (const Error& e) {
    res.status = e.code() == ErrorCode::kLimitExceeded ? RowStatus::kLimit : RowStatus::kFail;
    res.detail = e.what();
  }
  return res;
}

inline TableReport verify_table(const TableOptions& opt) {
  TableReport report;
  for (const TableRow& row : table_rows()) report.rows.push_back(verify_row(row, opt));
  return report;
}

inline Json table_json(const TableReport& report) {
  Json rows = Json::array();
  for (const RowResult& r : report.rows) {
    Json j;
    j["row"] = {r.row.footprint, r.row.max_snapshot, r.row.periodic};
    j["kind"] = to_string(r.row.kind);
    j["status"] = to_string(r.status);
    if (!r.source.empty()) j["source"] = r.source;
    if (r.measured) j["measured"] = triple_json(*r.measured);
    if (!r.detail.empty()) j["detail"] = r.detail;
    rows.push_back(j);
  }
  Json summary;
  for (RowStatus s : {RowStatus::kPass, RowStatus::kFail, RowStatus::kMissing, RowStatus::kLimit,
                      RowStatus::kSkipped, RowStatus::kExternal, RowStatus::kUndetermined})
    summary[to_string(s)] = report.count(s);
  return {{"rows", rows}, {"summary", summary}, {"exit_code", report.exit_code()}};
}

}  // namespace percop

#endif  // PERCOP_TABLE_HPP_
