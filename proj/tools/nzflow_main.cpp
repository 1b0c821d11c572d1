// Copyright 2026 The nzflow Authors
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

// Command-line front end. Exit codes: 0 ok, 1 violation found, 2 malformed
// input, 3 precondition failure.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nzflow/approx.hpp"
#include "nzflow/gadgets.hpp"
#include "nzflow/io.hpp"
#include "nzflow/lp.hpp"
#include "nzflow/nz6.hpp"
#include "nzflow/verify.hpp"

namespace {

using namespace nzflow;

constexpr int kExitViolation = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitPrecondition = 3;

template <typename T, typename Reader>
T load(const std::string& path, Reader reader) {
  std::istringstream in(slurp(path));
  return reader(in);
}

CostedGraph load_graph(const std::string& path) {
  return load<CostedGraph>(path, [](std::istream& in) { return read_graph(in); });
}

// Writes through `write` to a path, or stdout for "-".
template <typename Writer>
void emit(const std::string& path, Writer write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParseError, "cannot write " + path);
  write(out);
}

// The certificate goes to its own file when asked, else it trails the
// solution on stdout as a comment line so the stream still parses.
void emit_certificate(const std::string& path, const ApproxCertificate& c) {
  if (path.empty()) {
    std::cout << "# certificate " << to_json(c).dump() << '\n';
  } else {
    emit(path, [&](std::ostream& out) { out << to_json(c).dump(2) << '\n'; });
  }
}

int report(const Verdict& v) {
  if (!v) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << to_json(*v).dump() << '\n';
  return kExitViolation;
}

CutMethod parse_method(const std::string& name) {
  return name == "brute" ? CutMethod::kBrute : CutMethod::kHoffman;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError:
    case ErrorKind::kGraphMismatch:
    case ErrorKind::kIndexOutOfRange:
    case ErrorKind::kSelfLoop:
    case ErrorKind::kNotSymmetric:
      return kExitMalformed;
    default:
      return kExitPrecondition;
  }
}

struct BenchRow {
  std::string name;
  std::string lp_value;
  std::int64_t output_cost = 0;
  std::string ratio;
  std::int64_t flow_bound = 0;
  double seconds = 0;
  std::string error;
};

int run_bench(const std::string& dir, KBound k) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".nzg") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchRow> rows(files.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < files.size(); ++i) {
    BenchRow& row = rows[i];
    row.name = files[i].filename().string();
    const auto start = std::chrono::steady_clock::now();
    try {
      const CostedGraph in = load_graph(files[i].string());
      const WnzfResult r = wnzf_bicriteria(in.graph, in.cost, k);
      row.lp_value = to_string(r.certificate.lp_value);
      row.output_cost = r.certificate.output_cost;
      row.ratio = to_string(r.certificate.ratio);
      row.flow_bound = r.certificate.flow_bound;
    } catch (const Error& e) {
      row.error = std::string(to_string(e.kind()));
    }
    row.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  }
  std::cout << "instance\tlp_value\toutput_cost\tratio\tflow_bound\tseconds\n";
  for (const BenchRow& row : rows) {
    if (!row.error.empty()) {
      std::cout << row.name << "\terror:" << row.error << "\t-\t-\t-\t"
                << row.seconds << '\n';
      continue;
    }
    std::cout << row.name << '\t' << row.lp_value << '\t' << row.output_cost
              << '\t' << row.ratio << '\t' << row.flow_bound << '\t'
              << row.seconds << '\n';
  }
  return 0;
}

// Searches the 2^u completions of the undecided edges.
std::optional<Orientation> find_completion(const Graph& g,
                                           const PartialOrientation& po,
                                           int k) {
  std::vector<EdgeId> open;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!po.dir[e]) open.push_back(e);
  }
  if (open.size() > 24) {
    throw Error(ErrorKind::kBudgetExceeded, "too many undecided edges");
  }
  PartialOrientation trial = po;
  for (std::uint32_t mask = 0; mask < (1u << open.size()); ++mask) {
    for (std::size_t i = 0; i < open.size(); ++i) {
      trial.dir[open[i]] = (mask >> i) & 1u ? Dir::kBackward : Dir::kForward;
    }
    Orientation o = trial.to_orientation();
    if (!verify_cut_balanced(g, o, k, CutMethod::kBrute)) return o;
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nowhere-zero flow and cut-balanced orientation toolkit"};
  app.require_subcommand(1);

  std::string graph_path, solution_path, output = "-", cert_path, lp_path;
  std::string k_text = "6", method = "hoffman";
  int k_int = 6;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "Run an approximation algorithm");
  solve->require_subcommand(1);
  auto add_solve = [&](const std::string& name, const std::string& help) {
    auto* sub = solve->add_subcommand(name, help);
    sub->add_option("graph", graph_path, "Graph file or -")->required();
    sub->add_option("-o,--output", output, "Solution file");
    sub->add_option("--cert", cert_path, "Certificate JSON file");
    return sub;
  };
  auto* solve_wnzf = add_solve("wnzf", "Bicriteria nowhere-zero flow");
  solve_wnzf->add_option("--k", k_text, "Flow bound, integer or inf");
  solve_wnzf->add_option("--lp", lp_path, "Write the LP solution here");
  auto* solve_wcbo = add_solve("wcbo", "Bicriteria cut-balanced orientation");
  solve_wcbo->add_option("--k", k_int, "Balance parameter")->check(CLI::Range(2, 1 << 20));
  solve_wcbo->add_option("--lp", lp_path, "Write the LP solution here");
  auto* solve_swnzf = add_solve("swnzf", "Local search for symmetric costs");

  auto* nz6 = app.add_subcommand("nz6", "Nowhere-zero 6-flow");
  nz6->add_option("graph", graph_path, "Graph file or -")->required();
  nz6->add_option("-o,--output", output, "Flow file");

  auto* verify = app.add_subcommand("verify", "Check a solution");
  verify->require_subcommand(1);
  auto add_verify = [&](const std::string& name, const std::string& help) {
    auto* sub = verify->add_subcommand(name, help);
    sub->add_option("graph", graph_path, "Graph file or -")->required();
    sub->add_option("solution", solution_path, "Solution file")->required();
    return sub;
  };
  auto* verify_flow = add_verify("flow", "Nowhere-zero k-flow");
  verify_flow->add_option("--k", k_text, "Flow bound, integer or inf");
  auto* verify_cbo = add_verify("cbo", "k-cut-balanced orientation");
  auto* verify_pcbo = add_verify("partial-cbo", "Partial k-cut-balanced orientation");
  for (auto* sub : {verify_cbo, verify_pcbo}) {
    sub->add_option("--k", k_int, "Balance parameter")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--method", method, "hoffman or brute")
        ->check(CLI::IsMember({"hoffman", "brute"}));
  }
  auto* verify_local = add_verify("local-opt", "Local optimality of a 6-flow");
  verify_local->add_option("--k", k_text, "Accepted for uniformity; unused");

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  std::string cnf_path, orientation_out;
  int count = 3, gen_n = 8, gen_m = 12, forbidden_percent = 0;
  std::int64_t max_cost = 10;
  bool symmetric = false;
  auto* gen_sat = gen->add_subcommand("sat-completion", "Completion gadget");
  gen_sat->add_option("cnf", cnf_path, "DIMACS file or -")->required();
  gen_sat->add_option("--k", k_int, "Balance parameter")->check(CLI::Range(4, 1 << 20));
  gen_sat->add_option("--orientation-out", orientation_out,
                      "Partial orientation file");
  auto* gen_nae = gen->add_subcommand("nae3sat", "Minimum-value flow gadget");
  gen_nae->add_option("cnf", cnf_path, "DIMACS file or -")->required();
  auto* gen_cyc = gen->add_subcommand("cycle", "Cycle with unit costs");
  gen_cyc->add_option("n", count, "Length")->check(CLI::Range(2, 1 << 24));
  auto* gen_rand = gen->add_subcommand("random", "Random 2-edge-connected graph");
  gen_rand->add_option("--n", gen_n, "Vertices")->check(CLI::Range(2, 1 << 20));
  gen_rand->add_option("--m", gen_m, "Edges, at least n");
  gen_rand->add_option("--max-cost", max_cost, "Largest arc cost");
  gen_rand->add_flag("--symmetric", symmetric, "Equal costs both ways");
  gen_rand->add_option("--forbidden-percent", forbidden_percent,
                       "Chance an edge loses one direction")
      ->check(CLI::Range(0, 100));
  for (auto* sub : {gen_sat, gen_nae, gen_cyc, gen_rand}) {
    sub->add_option("-o,--output", output, "Graph file");
  }
  gen_rand->add_option("--seed", seed, "Random seed");

  auto* brute = app.add_subcommand("brute", "Exhaustive oracles");
  brute->require_subcommand(1);
  std::int64_t budget = BruteForceOptions{}.node_budget;
  auto* brute_nzk = brute->add_subcommand("min-nzk", "Minimum-cost nowhere-zero k-flow");
  brute_nzk->add_option("graph", graph_path, "Graph file or -")->required();
  brute_nzk->add_option("--k", k_text, "Flow bound, integer or inf");
  brute_nzk->add_option("--budget", budget, "Search node budget");
  auto* brute_cbo = brute->add_subcommand(
      "cbo-check", "Cut-balancedness of an orientation, or a completion of a partial one");
  brute_cbo->add_option("graph", graph_path, "Graph file or -")->required();
  brute_cbo->add_option("orientation", solution_path, "Orientation file")->required();
  brute_cbo->add_option("--k", k_int, "Balance parameter")->check(CLI::Range(2, 1 << 20));

  auto* bench = app.add_subcommand("bench", "Run wnzf over a corpus directory");
  std::string bench_dir;
  bench->add_option("dir", bench_dir, "Directory of .nzg files")->required();
  bench->add_option("--k", k_text, "Flow bound, integer or inf");
  int threads = 0;
  bench->add_option("--threads", threads, "OpenMP threads (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (solve->parsed()) {
      const CostedGraph in = load_graph(graph_path);
      if (solve_wnzf->parsed()) {
        const KBound k = KBound::parse(k_text);
        const WnzfResult r = wnzf_bicriteria(in.graph, in.cost, k);
        if (!lp_path.empty()) {
          const LpSolution z = solve_wnzf_lp(in.graph, in.cost, k);
          emit(lp_path, [&](std::ostream& out) { write_lp(out, z); });
        }
        emit(output, [&](std::ostream& out) { write_flow(out, r.flow); });
        emit_certificate(cert_path, r.certificate);
      } else if (solve_wcbo->parsed()) {
        const WcboResult r = wcbo_bicriteria(in.graph, in.cost, k_int);
        if (!lp_path.empty()) {
          const LpSolution y = solve_wcbo_lp(in.graph, in.cost, k_int);
          emit(lp_path, [&](std::ostream& out) { write_lp(out, y); });
        }
        emit(output, [&](std::ostream& out) {
          write_orientation(out, PartialOrientation::from(r.orientation));
        });
        emit_certificate(cert_path, r.certificate);
      } else if (solve_swnzf->parsed()) {
        const SwnzfResult r = swnzf_local_search(in.graph, in.cost);
        emit(output, [&](std::ostream& out) { write_flow(out, r.flow); });
        emit_certificate(cert_path, r.certificate);
      }
    } else if (nz6->parsed()) {
      const CostedGraph in = load_graph(graph_path);
      const Flow f = nz6_flow(in.graph);
      emit(output, [&](std::ostream& out) { write_flow(out, f); });
    } else if (verify->parsed()) {
      const CostedGraph in = load_graph(graph_path);
      if (verify_flow->parsed() || verify_local->parsed()) {
        const Flow f = load<Flow>(solution_path,
                                  [](std::istream& s) { return read_flow(s); });
        if (verify_flow->parsed()) {
          return report(verify_nowhere_zero_k_flow(in.graph, f, KBound::parse(k_text)));
        }
        return report(verify_locally_optimal(in.graph, in.cost, f));
      }
      const PartialOrientation po = load<PartialOrientation>(
          solution_path, [](std::istream& s) { return read_orientation(s); });
      if (verify_cbo->parsed()) {
        return report(verify_cut_balanced(in.graph, po.to_orientation(), k_int,
                                          parse_method(method)));
      }
      return report(verify_partial_cut_balanced(in.graph, po, k_int,
                                                parse_method(method)));
    } else if (gen->parsed()) {
      if (gen_sat->parsed() || gen_nae->parsed()) {
        const CnfFormula phi = load<CnfFormula>(
            cnf_path, [](std::istream& s) { return parse_dimacs(s); });
        if (gen_sat->parsed()) {
          const CompletionInstance inst = gen_completion_hardness(phi, k_int);
          emit(output, [&](std::ostream& out) {
            out << "# completion gadget, k = " << k_int
                << "; forbidden arcs encode the partial orientation\n";
            write_graph(out, inst.graph, zero_infinity_costs(inst.graph, inst.partial));
          });
          if (!orientation_out.empty()) {
            emit(orientation_out,
                 [&](std::ostream& out) { write_orientation(out, inst.partial); });
          }
        } else {
          const NaeInstance inst = gen_nae3sat_instance(phi);
          emit(output, [&](std::ostream& out) {
            out << "# target " << inst.target() << '\n';
            write_graph(out, inst.graph, inst.cost);
          });
        }
      } else if (gen_cyc->parsed()) {
        const Graph g = gen_cycle(count);
        emit(output, [&](std::ostream& out) {
          write_graph(out, g, CostFunction::uniform(g.edge_count(), 1));
        });
      } else if (gen_rand->parsed()) {
        const Graph g = random_two_edge_connected(gen_n, gen_m, seed);
        const CostFunction c = random_costs(g.edge_count(), max_cost, symmetric,
                                            forbidden_percent, seed + 1);
        emit(output, [&](std::ostream& out) {
          out << "# seed " << seed << '\n';
          write_graph(out, g, c);
        });
      }
    } else if (brute->parsed()) {
      const CostedGraph in = load_graph(graph_path);
      if (brute_nzk->parsed()) {
        BruteForceOptions options;
        options.node_budget = budget;
        const auto r = brute_force_min_nzk(in.graph, in.cost, KBound::parse(k_text), options);
        if (!r) {
          std::cout << "infeasible\n";
          return 0;
        }
        std::cout << "# optimum " << r->cost << '\n';
        write_flow(std::cout, r->flow);
      } else {
        const PartialOrientation po = load<PartialOrientation>(
            solution_path, [](std::istream& s) { return read_orientation(s); });
        const auto o = find_completion(in.graph, po, k_int);
        if (!o) {
          std::cout << (po.is_complete() ? "unbalanced\n" : "no completion\n");
          return kExitViolation;
        }
        std::cout << (po.is_complete() ? "balanced\n" : "completable\n");
        write_orientation(std::cout, PartialOrientation::from(*o));
      }
    } else if (bench->parsed()) {
      if (threads > 0) omp_set_num_threads(threads);
      return run_bench(bench_dir, KBound::parse(k_text));
    }
  } catch (const Error& e) {
    std::cerr << "nzflow: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "nzflow: " << e.what() << '\n';
    return kExitMalformed;
  }
  return 0;
}
