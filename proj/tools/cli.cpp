// Copyright 2026 The hamrad Authors
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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamrad/hamrad.hpp"

namespace hamrad::cli {
namespace {

using io::json;

struct Budgets {
  std::uint64_t nodes = SolverConfig{}.node_budget;
  double seconds = SolverConfig{}.time_budget.count();
};

// HAMRAD_NODE_BUDGET / HAMRAD_TIME_BUDGET override the library defaults.
Budgets default_budgets() {
  Budgets b;
  if (const char* v = std::getenv("HAMRAD_NODE_BUDGET")) b.nodes = std::stoull(v);
  if (const char* v = std::getenv("HAMRAD_TIME_BUDGET")) b.seconds = std::stod(v);
  return b;
}

SolverConfig make_config(const Budgets& b, bool symmetry) {
  SolverConfig cfg;
  cfg.node_budget = b.nodes;
  cfg.time_budget = std::chrono::duration<double>(b.seconds);
  cfg.symmetry_reduction = symmetry;
  return cfg;
}

std::string permutation_text(const FactorSort& sort) {
  std::string s;
  for (auto i : sort.permutation()) {
    if (!s.empty()) s += ',';
    s += std::to_string(i + 1);
  }
  return s;
}

// Formula value for graphs it covers: K_l □ K_m □ K_n with all factors >= 2
// in any order, and K_2 □ K_2 (optionally with a K_1 factor).
std::optional<RnFormulaResult> formula_for(const FactorSort& sort) {
  const auto& s = sort.sorted().factor_sizes();
  if (s == std::vector<int>{2, 2} || s == std::vector<int>{1, 2, 2}) {
    return radio_number_formula(2, 2, 1);
  }
  if (s.size() == 3 && s[0] >= 2) return radio_number_formula(s[0], s[1], s[2]);
  return std::nullopt;
}

json solve_json(const HammingGraph& g, const SolveResult& r) {
  return {{"graph", to_string(g)},
          {"rn", r.rn},
          {"optimal", r.optimal},
          {"lower_bound", r.lower_bound},
          {"max_run", r.max_run},
          {"nodes_explored", r.nodes_explored},
          {"elapsed_seconds", r.elapsed.count()}};
}

int cmd_order(const std::string& spec, const std::string& format, bool blocks,
              std::ostream& out, std::ostream& err) {
  const HammingGraph g = parse_graph(spec);
  if (g.factor_count() != 3) {
    err << "error: order needs a 3-factor spec like 3x3x6, got " << spec << '\n';
    return kUsageError;
  }
  const FactorSort sort(g);
  const auto& s = sort.sorted().factor_sizes();
  const auto params = construction_params(s[0], s[1], s[2]);
  Ordering o = flatten(build_blocks(params));
  for (auto& v : o.sequence) v = sort.to_original(v);
  if (!sort.is_identity()) {
    err << "note: factors sorted to " << to_string(sort.sorted())
        << " (permutation " << permutation_text(sort)
        << "); vertices printed in input coordinate order\n";
  }

  const auto graceful = check_graceful(g, o);
  if (!graceful.graceful) {
    err << "warning: ordering of " << to_string(g) << " is not graceful ("
        << graceful.violations.size() << " violations)\n";
  }

  const std::size_t block_rows = blocks ? static_cast<std::size_t>(params.lcm) : 0;
  if (format == "json") {
    out << io::ordering_json(o, block_rows).dump() << '\n';
  } else {
    io::write_ordering_csv(out, o, block_rows);
  }
  return kOk;
}

int cmd_verify(const std::string& spec, const std::string& path, std::ostream& out,
               std::ostream& err) {
  const HammingGraph g = parse_graph(spec);
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << '\n';
    return kUsageError;
  }
  const auto labeling = io::read_labeling_csv(in, g);
  const auto report = validate(g, labeling);
  out << io::report_json(report).dump(2) << '\n';
  return report.valid ? kOk : kSemanticFailure;
}

int cmd_rn(const std::string& spec, bool certify, const Budgets& budgets,
           std::ostream& out, std::ostream& err) {
  const HammingGraph g = parse_graph(spec);
  const FactorSort sort(g);
  const auto formula = formula_for(sort);
  if (!formula) {
    err << "error: no closed form for " << spec
        << "; it covers K_l x K_m x K_n with l,m,n >= 2 (use solve)\n";
    return kUsageError;
  }
  json report = {{"graph", to_string(g)},
                 {"sorted", to_string(sort.sorted())},
                 {"factor_permutation", permutation_text(sort)},
                 {"rn", formula->value},
                 {"case", std::string(to_string(formula->case_tag))}};
  int code = kOk;
  if (certify) {
    const auto result = solve(g, make_config(budgets, true));
    report["solver"] = solve_json(g, result);
    const bool agree = result.rn == formula->value;
    report["certified"] = result.optimal && agree;
    if (!result.optimal) {
      code = result.rn < formula->value ? kSemanticFailure : kBudgetExhausted;
    } else if (!agree) {
      code = kSemanticFailure;
    }
  }
  out << report.dump(2) << '\n';
  return code;
}

int cmd_solve(const std::string& spec, const Budgets& budgets, bool symmetry,
              const std::string& witness_path, std::ostream& out, std::ostream& err) {
  const HammingGraph g = parse_graph(spec);
  const auto result = solve(g, make_config(budgets, symmetry));
  json report = solve_json(g, result);
  if (witness_path.empty()) {
    report["witness"] = io::labeling_json(result.witness);
  } else {
    std::ofstream file(witness_path);
    if (!file) {
      err << "error: cannot write " << witness_path << '\n';
      return kUsageError;
    }
    io::write_labeling_csv(file, result.witness);
    report["witness_csv"] = witness_path;
  }
  out << report.dump(2) << '\n';
  return result.optimal ? kOk : kBudgetExhausted;
}

int cmd_label(const std::string& spec, std::ostream& out, std::ostream& err) {
  const HammingGraph g = parse_graph(spec);
  const auto labeling = constructive_labeling(g);
  if (!labeling) {
    err << "error: no constructive labeling for " << spec << '\n';
    return kUsageError;
  }
  io::write_labeling_csv(out, *labeling);
  return kOk;
}

int cmd_sweep(std::vector<int> bounds, const std::string& out_path,
              std::size_t solver_max_vertices, const Budgets& budgets,
              std::ostream& out, std::ostream& err) {
  if (bounds.size() == 1) bounds = {bounds[0], bounds[0], bounds[0]};
  if (bounds.size() != 3) {
    err << "error: sweep takes one bound or three (lmax mmax nmax)\n";
    return kUsageError;
  }
  for (int b : bounds) {
    if (b < 2) {
      err << "error: sweep bounds must be >= 2\n";
      return kUsageError;
    }
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kUsageError;
    }
    sink = &file;
  }

  *sink << "l,m,n,vertices,formula_rn,case,bijection,graceful,solver_rn,solver_optimal\n";
  int disagreements = 0;
  bool exhausted = false;
  for (int l = 2; l <= bounds[0]; ++l) {
    for (int m = l; m <= bounds[1]; ++m) {
      for (int n = m; n <= bounds[2]; ++n) {
        const HammingGraph g{l, m, n};
        const auto formula = radio_number_formula(l, m, n);
        const Ordering o = build_ordering(l, m, n);
        const bool bijection = verify_bijection(g, o);
        const bool graceful = bijection && check_graceful(g, o).graceful;
        const bool expect_graceful = formula.case_tag == RnCase::kGraceful;
        bool ok = bijection && graceful == expect_graceful;

        *sink << l << ',' << m << ',' << n << ',' << g.vertex_count() << ','
              << formula.value << ',' << to_string(formula.case_tag) << ','
              << (bijection ? "true" : "false") << ','
              << (graceful ? "true" : "false") << ',';
        if (g.vertex_count() <= solver_max_vertices) {
          const auto result = solve(g, make_config(budgets, true));
          *sink << result.rn << ',' << (result.optimal ? "true" : "false");
          if (result.optimal) {
            ok = ok && result.rn == formula.value;
          } else {
            exhausted = true;
            ok = ok && result.rn >= formula.value;
          }
        } else {
          *sink << ',';
        }
        *sink << '\n';
        if (!ok) {
          ++disagreements;
          err << "mismatch at " << to_string(g) << '\n';
        }
      }
    }
  }
  if (disagreements) return kSemanticFailure;
  return exhausted ? kBudgetExhausted : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hamrad: radio labelings of Hamming graphs"};
  app.require_subcommand(1);

  const Budgets env = default_budgets();
  std::string spec;
  std::string format = "csv";
  std::string file;
  std::string witness;
  bool blocks = false;
  bool certify = false;
  bool no_symmetry = false;
  std::uint64_t node_budget = env.nodes;
  double time_budget = env.seconds;
  std::vector<int> bounds;
  std::size_t solver_max_vertices = 18;

  auto* order = app.add_subcommand("order", "Emit the block-construction ordering");
  order->add_option("spec", spec, "Graph, e.g. 3x3x6")->required();
  order->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  order->add_flag("--blocks", blocks, "Group rows by construction block");

  auto* verify = app.add_subcommand("verify", "Check a vertex,label CSV");
  verify->add_option("spec", spec, "Graph, e.g. 2x3x3")->required();
  verify->add_option("labeling", file, "CSV with header vertex,label")->required();

  auto* rn = app.add_subcommand("rn", "Closed-form radio number");
  rn->add_option("spec", spec, "Graph, e.g. 2x2x7")->required();
  rn->add_flag("--certify", certify, "Confirm with the exact solver");

  auto* solve_cmd = app.add_subcommand("solve", "Exact radio number by search");
  solve_cmd->add_option("spec", spec, "Graph, e.g. 2x3x3")->required();
  solve_cmd->add_flag("--no-symmetry", no_symmetry, "Disable symmetry breaking");
  solve_cmd->add_option("--witness", witness, "Write the witness labeling CSV here");

  for (auto* sub : {rn, solve_cmd}) {
    sub->add_option("--node-budget", node_budget, "Search node limit");
    sub->add_option("--time-budget", time_budget, "Search time limit in seconds");
  }

  auto* label = app.add_subcommand("label", "Emit the constructive labeling CSV");
  label->add_option("spec", spec, "Graph, e.g. 2x2x5")->required();

  auto* sweep = app.add_subcommand("sweep", "Check formula, construction and solver over a box");
  sweep->add_option("bounds", bounds, "nmax, or lmax mmax nmax")->required()->expected(1, 3);
  sweep->add_option("-o,--out", file, "Write the CSV here instead of stdout");
  sweep->add_option("--solver-max-vertices", solver_max_vertices,
                    "Run the solver on instances up to this size");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const Budgets budgets{node_budget, time_budget};
  try {
    if (*order) return cmd_order(spec, format, blocks, out, err);
    if (*verify) return cmd_verify(spec, file, out, err);
    if (*rn) return cmd_rn(spec, certify, budgets, out, err);
    if (*solve_cmd) return cmd_solve(spec, budgets, !no_symmetry, witness, out, err);
    if (*label) return cmd_label(spec, out, err);
    if (*sweep) return cmd_sweep(bounds, file, solver_max_vertices, budgets, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kBudgetExhausted ? kBudgetExhausted : kUsageError;
  }
  return kUsageError;
}

}  // namespace hamrad::cli
