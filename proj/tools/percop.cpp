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

// Command-line front end. Every command prints one JSON object on stdout;
// --human prints a readable table instead.
//
// Exit codes: 0 success, 1 usage or input error, 2 mismatch, 3 budget or
// limit exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "percop/percop.hpp"

#ifndef PERCOP_DATA_DIR
#define PERCOP_DATA_DIR "data"
#endif

namespace {

using percop::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitLimit = 3;

struct Output {
  Json json;
  std::string human;
  int code = kExitOk;
};

std::string data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PERCOP_DATA_DIR")) return env;
  return PERCOP_DATA_DIR;
}

Json labels_of(const percop::PeriodicGraph& pg, const std::vector<int>& vs) {
  Json out = Json::array();
  for (int v : vs) out.push_back(pg.snapshot(0).label(v));
  return out;
}

std::string triple_text(const percop::Triple& t) {
  return "(" + std::to_string(t.footprint) + ", " + std::to_string(t.max_snapshot) + ", " +
         std::to_string(t.periodic) + ")";
}

Output cmd_solve(const std::string& file, std::optional<int> max_cops,
                 const std::string& trace_out) {
  auto inst = percop::load_instance(file);
  const auto& pg = inst.graph;
  Output out;
  out.json["command"] = "solve";
  out.json["n"] = pg.order();
  out.json["period"] = pg.period();
  std::optional<percop::SolveResult> win;
  const int limit = max_cops ? *max_cops : pg.order();
  for (int k = 1; k <= limit; ++k) {
    auto r = percop::is_k_copwin(pg, k);
    if (r.copwin()) {
      win = std::move(r);
      break;
    }
  }
  if (!win) {
    out.json["copnum"] = nullptr;
    out.json["exceeds"] = limit;
    out.human = "cop number exceeds " + std::to_string(limit) + "\n";
    return out;
  }
  const int k = win->cops();
  out.json["copnum"] = k;
  out.json["placement"] = labels_of(pg, win->initial_placement());
  out.json["states"] = win->state_count();
  out.json["capture_bound"] = win->placement_rank();
  out.human = "cop number " + std::to_string(k) + ", placement";
  for (const auto& l : out.json["placement"]) out.human += " " + l.get<std::string>();
  out.human += "\n";
  if (!trace_out.empty()) {
    auto trace = percop::extract_trace(*win, pg, k);
    percop::write_text_file(trace_out, percop::to_canonical(percop::trace_json(trace, pg)));
    out.json["trace"] = trace_out;
  }
  return out;
}

Output cmd_triple(const std::string& file) {
  auto inst = percop::load_instance(file);
  auto t = percop::triple(inst.graph);
  Output out;
  out.json["command"] = "triple";
  out.json["triple"] = percop::triple_json(t);
  out.human = "footprint " + std::to_string(t.footprint) + ", max snapshot " +
              std::to_string(t.max_snapshot) + ", min snapshot " + std::to_string(t.min_snapshot) +
              ", periodic " + std::to_string(t.periodic) + "\n";
  if (inst.expected.footprint || inst.expected.max_snapshot || inst.expected.periodic) {
    bool ok = inst.expected.matches(t);
    out.json["matches_expected"] = ok;
    out.human += ok ? "matches expected\n" : "DIFFERS from expected\n";
    if (!ok) out.code = kExitMismatch;
  }
  return out;
}

Output cmd_corners(const std::string& file, int k) {
  auto inst = percop::load_instance(file);
  const auto& pg = inst.graph;
  auto found = percop::find_k_temporal_corners(pg, k);
  Output out;
  out.json["command"] = "corners";
  out.json["k"] = k;
  out.json["corner_nodes"] = percop::count_k_temporal_corners(pg, k);
  Json list = Json::array();
  for (const auto& w : found) {
    list.push_back({{"t", w.t}, {"corner", pg.snapshot(0).label(w.corner)},
                    {"covers", labels_of(pg, w.covers)}});
    out.human += "t=" + std::to_string(w.t) + " corner " + pg.snapshot(0).label(w.corner) +
                 " covered by";
    for (int c : w.covers) out.human += " " + pg.snapshot(0).label(c);
    out.human += "\n";
  }
  out.json["witnesses"] = list;
  if (found.empty()) out.human = "no " + std::to_string(k) + "-temporal corner\n";
  return out;
}

Output cmd_generate(const std::string& name, const std::string& file) {
  auto spec = percop::make_construction(name);
  std::string text = percop::serialize_instance(spec.instance, spec.expected);
  Output out;
  if (file.empty()) {
    out.json = Json::parse(text);
    out.human = text;
    return out;
  }
  percop::write_text_file(file, text);
  out.json = {{"command", "generate"}, {"name", name}, {"out", file},
              {"provenance", percop::to_string(spec.provenance)}};
  out.human = "wrote " + name + " to " + file + "\n";
  return out;
}

Output cmd_search(const std::string& spec_name, std::optional<std::uint64_t> seed,
                  std::optional<double> budget, const std::string& file) {
  auto spec = percop::resolve_search_spec(spec_name);
  if (seed) spec.seed = *seed;
  if (budget) spec.budget_seconds = *budget;
  auto res = percop::search(spec);
  Output out;
  out.json["command"] = "search";
  out.json["spec"] = spec.name;
  out.json["seed"] = spec.seed;
  out.json["status"] = percop::to_string(res.status);
  out.json["mode"] = res.mode;
  out.json["evaluations"] = res.evaluations;
  out.human = spec.name + ": " + percop::to_string(res.status) + " (" + res.mode + ", " +
              std::to_string(res.evaluations) + " evaluations)\n";
  if (res.witness) {
    std::string text = percop::serialize_witness(spec, res);
    if (file.empty()) {
      out.json["witness"] = Json::parse(text);
    } else {
      percop::write_text_file(file, text);
      out.json["out"] = file;
    }
    out.human += "triple " + triple_text(res.certificate->triple) + "\n";
  }
  if (res.status == percop::SearchStatus::kBudget) out.code = kExitLimit;
  if (res.status == percop::SearchStatus::kExhausted) out.code = kExitMismatch;
  return out;
}

Output cmd_treewidth(const std::string& file) {
  auto inst = percop::load_instance(file);
  auto f = percop::footprint(inst.graph);
  auto tw = percop::exact_treewidth(f);
  Output out;
  out.json["command"] = "treewidth";
  out.json["treewidth"] = tw.width;
  Json bags = Json::array();
  for (const auto& b : tw.decomposition.bags) {
    std::vector<int> vs(b.begin(), b.end());
    bags.push_back(labels_of(inst.graph, vs));
  }
  Json tree = Json::array();
  for (auto [x, y] : tw.decomposition.tree) tree.push_back({x, y});
  out.json["bags"] = bags;
  out.json["tree"] = tree;
  out.human = "treewidth " + std::to_string(tw.width) + " (" +
              std::to_string(tw.decomposition.bags.size()) + " bags)\n";
  return out;
}

Output cmd_tw_bound(const std::string& file) {
  auto inst = percop::load_instance(file);
  const auto& pg = inst.graph;
  auto f = percop::footprint(pg);
  const int width = percop::exact_treewidth(f).width;
  const int c = percop::cop_number(pg);
  Output out;
  out.json["command"] = "tw-bound";
  out.json["treewidth"] = width;
  out.json["copnum"] = c;
  out.json["bound_holds"] = c <= width + 1;
  if (percop::is_temporally_connected(pg)) {
    auto policy = percop::bag_strategy(pg);
    auto verdict = percop::verify_policy(pg, policy, policy.cops());
    out.json["bag_strategy_cops"] = policy.cops();
    out.json["bag_strategy_wins"] = verdict.wins;
    if (verdict.max_capture_moves) out.json["bag_strategy_max_moves"] = *verdict.max_capture_moves;
    if (!verdict.wins) out.code = kExitMismatch;
  } else {
    out.json["bag_strategy_wins"] = nullptr;
  }
  if (c > width + 1) out.code = kExitMismatch;
  out.human = "cop number " + std::to_string(c) + " <= treewidth + 1 = " +
              std::to_string(width + 1) + (c <= width + 1 ? ": holds\n" : ": VIOLATED\n");
  return out;
}

Output cmd_verify_table(bool skip_search_rows, const std::string& dir) {
  percop::TableOptions opt;
  opt.data_dir = data_dir(dir);
  opt.skip_search_rows = skip_search_rows;
  auto report = percop::verify_table(opt);
  Output out;
  out.json = percop::table_json(report);
  out.json["command"] = "verify-table";
  for (const auto& r : report.rows) {
    out.human += std::to_string(r.row.footprint) + " " + std::to_string(r.row.max_snapshot) +
                 " " + std::to_string(r.row.periodic) + "  " + percop::to_string(r.status);
    if (!r.source.empty()) out.human += "  [" + r.source + "]";
    if (!r.detail.empty()) out.human += "  " + r.detail;
    out.human += "\n";
  }
  out.code = report.exit_code();
  return out;
}

Output cmd_scan(int max_n, int max_p, double budget) {
  auto report = percop::smallest_3copwin_scan(max_n, max_p, budget);
  Output out;
  out.json["command"] = "scan";
  out.json["complete"] = report.complete;
  Json cells = Json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"n", c.n}, {"p", c.p}, {"canonical", c.canonical},
                     {"labeled", c.labeled_covered},
                     {"temporally_connected", c.temporally_connected},
                     {"three_copwin", c.three_copwin}});
    out.human += "n=" + std::to_string(c.n) + " p=" + std::to_string(c.p) + ": " +
                 std::to_string(c.canonical) + " classes, " +
                 std::to_string(c.temporally_connected) + " temporally connected, " +
                 std::to_string(c.three_copwin) + " need 3+ cops\n";
  }
  out.json["cells"] = cells;
  Json found = Json::array();
  for (const auto& pg : report.witnesses) found.push_back(percop::instance_json(pg));
  out.json["witnesses"] = found;
  if (!report.complete) out.code = kExitLimit;
  return out;
}

Output cmd_spec(const std::string& name) {
  auto spec = percop::resolve_search_spec(name);
  Output out;
  out.json = percop::search_spec_json(spec);
  out.human = percop::serialize_search_spec(spec);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and Robber on periodic temporal graphs"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "Readable output instead of JSON");

  std::string file, out_file, name, spec_name, dir;
  std::optional<int> max_cops;
  int k = 1, max_n = 4, max_p = 3;
  std::optional<std::uint64_t> seed;
  std::optional<double> budget;
  double scan_budget = 3600;
  bool skip = false;

  auto* solve = app.add_subcommand("solve", "Cop number of an instance");
  solve->add_option("FILE", file, "Instance file")->required();
  solve->add_option("--max-cops", max_cops, "Largest team size to try");
  solve->add_option("--trace", out_file, "Write a capture trace here");

  auto* trip = app.add_subcommand("triple", "Footprint, snapshot and periodic cop numbers");
  trip->add_option("FILE", file, "Instance file")->required();

  auto* corners = app.add_subcommand("corners", "List k-temporal corners");
  corners->add_option("FILE", file, "Instance file")->required();
  corners->add_option("--k", k, "Cover size")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("generate", "Write a named construction");
  gen->add_option("NAME", name, "Construction name")
      ->required()
      ->check(CLI::IsMember(percop::construction_names()));
  gen->add_option("--out", out_file, "Output file (stdout when omitted)");

  auto* srch = app.add_subcommand("search", "Search for an instance meeting a spec");
  srch->add_option("--spec", spec_name, "Named spec or spec file")->required();
  srch->add_option("--seed", seed, "Random seed");
  srch->add_option("--budget", budget, "Wall-clock budget in seconds");
  srch->add_option("--out", out_file, "Write the witness here");

  auto* tw = app.add_subcommand("treewidth", "Exact treewidth of the footprint");
  tw->add_option("FILE", file, "Instance file")->required();

  auto* twb = app.add_subcommand("tw-bound", "Check cop number <= treewidth + 1");
  twb->add_option("FILE", file, "Instance file")->required();

  auto* table = app.add_subcommand("verify-table", "Check every row of the results table");
  table->add_flag("--skip-search-rows", skip, "Do not load search witnesses");
  table->add_option("--data-dir", dir, "Directory holding witnesses/");

  auto* scan = app.add_subcommand("scan", "Look for small instances needing three cops");
  scan->add_option("--max-n", max_n, "Largest vertex count");
  scan->add_option("--max-p", max_p, "Largest period");
  scan->add_option("--budget", scan_budget, "Wall-clock budget in seconds");

  auto* spec = app.add_subcommand("spec", "Print a search spec as JSON");
  spec->add_option("NAME", name, "Named spec or spec file")->required();

  CLI11_PARSE(app, argc, argv);

  Output out;
  try {
    if (*solve) out = cmd_solve(file, max_cops, out_file);
    if (*trip) out = cmd_triple(file);
    if (*corners) out = cmd_corners(file, k);
    if (*gen) out = cmd_generate(name, out_file);
    if (*srch) out = cmd_search(spec_name, seed, budget, out_file);
    if (*tw) out = cmd_treewidth(file);
    if (*twb) out = cmd_tw_bound(file);
    if (*table) out = cmd_verify_table(skip, dir);
    if (*scan) out = cmd_scan(max_n, max_p, scan_budget);
    if (*spec) out = cmd_spec(name);
  } catch (const percop::BudgetError& e) {
    out = {{{"error", percop::to_string(e.code())}, {"message", e.what()},
            {"estimate", e.estimate()}, {"budget", e.budget()}},
           std::string("error: ") + e.what() + "\n", kExitLimit};
  } catch (const percop::ParseError& e) {
    out = {{{"error", percop::to_string(e.parse_code())}, {"message", e.what()},
            {"line", e.line()}},
           std::string("error: ") + e.what() + "\n", kExitInput};
  } catch (const percop::Error& e) {
    const bool limit = e.code() == percop::ErrorCode::kLimitExceeded;
    out = {{{"error", percop::to_string(e.code())}, {"message", e.what()}},
           std::string("error: ") + e.what() + "\n", limit ? kExitLimit : kExitInput};
  }
  if (human) {
    std::cout << out.human;
  } else {
    std::cout << percop::to_canonical(out.json);
  }
  return out.code;
}
