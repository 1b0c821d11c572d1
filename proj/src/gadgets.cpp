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

#include "nzflow/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "nzflow/verify.hpp"

namespace nzflow {
namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::kParseError, "dimacs: " + what);
}

template <typename Pred>
bool any_assignment(const CnfFormula& phi, Pred pred) {
  phi.validate();
  if (phi.variable_count > 20) {
    throw Error(ErrorKind::kBudgetExceeded, "truth table limited to 20 variables");
  }
  std::vector<bool> x(phi.variable_count);
  for (std::uint32_t mask = 0; mask < (1u << phi.variable_count); ++mask) {
    for (int v = 0; v < phi.variable_count; ++v) x[v] = (mask >> v) & 1u;
    if (pred(phi, x)) return true;
  }
  return false;
}

bool literal_value(int lit, const std::vector<bool>& x) {
  const bool v = x[std::abs(lit) - 1];
  return lit > 0 ? v : !v;
}

}  // namespace

void CnfFormula::validate() const {
  if (variable_count < 0) parse_error("negative variable count");
  for (const auto& clause : clauses) {
    if (clause.empty()) parse_error("empty clause");
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > variable_count) {
        parse_error("literal " + std::to_string(lit) + " out of range");
      }
    }
  }
}

std::pair<int, int> CnfFormula::occurrences(int v) const {
  std::pair<int, int> count{0, 0};
  for (const auto& clause : clauses) {
    for (int lit : clause) {
      if (lit == v) ++count.first;
      if (lit == -v) ++count.second;
    }
  }
  return count;
}

bool is_restricted_sat(const CnfFormula& phi) {
  phi.validate();
  std::vector<int> count(phi.variable_count + 1, 0);
  for (const auto& clause : phi.clauses) {
    for (int lit : clause) ++count[std::abs(lit)];
  }
  return std::all_of(count.begin(), count.end(), [](int c) { return c <= 3; });
}

bool is_nae3sat(const CnfFormula& phi) {
  phi.validate();
  return std::all_of(phi.clauses.begin(), phi.clauses.end(),
                     [](const auto& c) { return c.size() == 3; });
}

bool satisfies(const CnfFormula& phi, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != phi.variable_count) return false;
  for (const auto& clause : phi.clauses) {
    if (std::none_of(clause.begin(), clause.end(), [&](int lit) {
          return literal_value(lit, assignment);
        })) {
      return false;
    }
  }
  return true;
}

bool nae_satisfies(const CnfFormula& phi, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != phi.variable_count) return false;
  for (const auto& clause : phi.clauses) {
    bool seen_true = false;
    bool seen_false = false;
    for (int lit : clause) {
      (literal_value(lit, assignment) ? seen_true : seen_false) = true;
    }
    if (!seen_true || !seen_false) return false;
  }
  return true;
}

bool is_satisfiable(const CnfFormula& phi) {
  return any_assignment(phi, satisfies);
}

bool is_nae_satisfiable(const CnfFormula& phi) {
  return any_assignment(phi, nae_satisfies);
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula phi;
  int declared_clauses = -1;
  std::vector<int> current;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (declared_clauses >= 0) parse_error("duplicate header");
      if (!(ls >> fmt >> phi.variable_count >> declared_clauses) ||
          fmt != "cnf" || phi.variable_count < 0 || declared_clauses < 0) {
        parse_error("bad header: " + line);
      }
      continue;
    }
    if (declared_clauses < 0) parse_error("clause before header");
    ls.clear();
    ls.seekg(0);
    std::string token;
    while (ls >> token) {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(token, &used);
        if (used != token.size()) parse_error("bad literal " + token);
      } catch (const std::logic_error&) {
        parse_error("bad literal " + token);
      }
      if (lit == 0) {
        phi.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
  }
  if (declared_clauses < 0) parse_error("missing header");
  if (!current.empty()) phi.clauses.push_back(std::move(current));
  if (static_cast<int>(phi.clauses.size()) != declared_clauses) {
    parse_error("header declares " + std::to_string(declared_clauses) +
                " clauses, found " + std::to_string(phi.clauses.size()));
  }
  phi.validate();
  return phi;
}

void write_dimacs(std::ostream& out, const CnfFormula& phi) {
  out << "p cnf " << phi.variable_count << ' ' << phi.clauses.size() << '\n';
  for (const auto& clause : phi.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

PureLiteralReduction eliminate_pure_literals(const CnfFormula& phi) {
  phi.validate();
  std::vector<std::vector<int>> clauses = phi.clauses;
  const int n = phi.variable_count;
  std::vector<int> pos(n + 1), neg(n + 1);
  while (true) {
    std::fill(pos.begin(), pos.end(), 0);
    std::fill(neg.begin(), neg.end(), 0);
    for (const auto& clause : clauses) {
      for (int lit : clause) ++(lit > 0 ? pos : neg)[std::abs(lit)];
    }
    std::vector<bool> pure(n + 1, false);
    bool any = false;
    for (int v = 1; v <= n; ++v) {
      pure[v] = (pos[v] > 0) != (neg[v] > 0);
      any = any || pure[v];
    }
    if (!any) break;
    std::erase_if(clauses, [&](const std::vector<int>& clause) {
      return std::any_of(clause.begin(), clause.end(),
                         [&](int lit) { return pure[std::abs(lit)]; });
    });
  }
  PureLiteralReduction out;
  std::vector<int> new_index(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (pos[v] > 0) {
      out.kept.push_back(v);
      new_index[v] = static_cast<int>(out.kept.size());
    }
  }
  out.formula.variable_count = static_cast<int>(out.kept.size());
  for (auto& clause : clauses) {
    for (int& lit : clause) {
      lit = lit > 0 ? new_index[lit] : -new_index[-lit];
    }
  }
  out.formula.clauses = std::move(clauses);
  return out;
}

CompletionInstance gen_completion_hardness(const CnfFormula& phi, int k) {
  if (!is_restricted_sat(phi)) {
    throw Error(ErrorKind::kNotRestrictedSat,
                "some variable occurs more than 3 times");
  }
  if (k <= 3) throw Error(ErrorKind::kKTooSmall, "completion gadget needs k >= 4");
  CompletionInstance inst;
  inst.k = k;
  inst.reduction = eliminate_pure_literals(phi);
  const CnfFormula& f = inst.reduction.formula;
  const int n = f.variable_count;
  const int m = static_cast<int>(f.clauses.size());
  const Vertex r = 0;
  auto u = [](int i) { return 2 * i - 1; };
  auto u_bar = [](int i) { return 2 * i; };
  auto v = [n](int j) { return 2 * n + j; };

  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({u(i), u_bar(i)});
  for (int i = 1; i <= n; ++i) {
    const auto [a, a_bar] = f.occurrences(i);
    edges.push_back({r, u(i)});
    for (int c = 0; c < k - a - 2; ++c) edges.push_back({u(i), r});
    edges.push_back({r, u_bar(i)});
    for (int c = 0; c < k - a_bar - 2; ++c) edges.push_back({u_bar(i), r});
  }
  for (int j = 1; j <= m; ++j) {
    const auto& clause = f.clauses[j - 1];
    for (int lit : clause) {
      edges.push_back({lit > 0 ? u(lit) : u_bar(-lit), v(j)});
    }
    for (std::size_t c = 0; c < clause.size() + 1; ++c) {
      edges.push_back({v(j), r});
    }
  }
  inst.graph = Graph(1 + 2 * n + m, std::move(edges));
  inst.partial = PartialOrientation::undecided(inst.graph.edge_count());
  for (EdgeId e = n; e < inst.graph.edge_count(); ++e) {
    inst.partial.dir[e] = Dir::kForward;
  }
  return inst;
}

Orientation completion_from_assignment(const CompletionInstance& inst,
                                       const std::vector<bool>& assignment) {
  const int n = inst.reduction.formula.variable_count;
  if (static_cast<int>(assignment.size()) != n) {
    throw Error(ErrorKind::kGraphMismatch, "assignment length differs");
  }
  PartialOrientation po = inst.partial;
  for (int i = 0; i < n; ++i) {
    po.dir[i] = assignment[i] ? Dir::kBackward : Dir::kForward;
  }
  return po.to_orientation();
}

std::int64_t NaeInstance::target() const {
  return graph.edge_count() + std::accumulate(d.begin(), d.end(), 0);
}

NaeInstance gen_nae3sat_instance(const CnfFormula& phi) {
  if (!is_nae3sat(phi)) {
    throw Error(ErrorKind::kNotNae3Sat, "every clause needs exactly 3 literals");
  }
  NaeInstance inst;
  inst.formula = phi;
  const int n = phi.variable_count;
  const int m = static_cast<int>(phi.clauses.size());
  inst.d.resize(n);
  inst.cycle.resize(n);
  inst.ring.resize(n);
  inst.spoke.resize(n);
  Vertex next = m + 1;
  for (int i = 1; i <= n; ++i) {
    const auto [a, a_bar] = phi.occurrences(i);
    inst.d[i - 1] = std::max(a, a_bar);
    for (int t = 0; t < 2 * inst.d[i - 1]; ++t) inst.cycle[i - 1].push_back(next++);
  }
  // First-come slots: positive occurrences take u_1, u_3, ..., negative
  // ones u_2, u_4, ... (0-based: even and odd positions).
  std::vector<std::vector<Vertex>> target(n);
  for (int i = 0; i < n; ++i) target[i].assign(inst.cycle[i].size(), 0);
  std::vector<int> next_odd(n, 0), next_even(n, 1);
  for (int j = 1; j <= m; ++j) {
    for (int lit : phi.clauses[j - 1]) {
      const int i = std::abs(lit) - 1;
      int& slot = lit > 0 ? next_odd[i] : next_even[i];
      target[i][slot] = j;
      slot += 2;
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const auto& c = inst.cycle[i];
    for (std::size_t t = 0; t < c.size(); ++t) {
      inst.ring[i].push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({c[t], c[(t + 1) % c.size()]});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < inst.cycle[i].size(); ++t) {
      inst.spoke[i].push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({inst.cycle[i][t], target[i][t]});
    }
  }
  for (int j = 1; j <= m; ++j) {
    inst.clause_edge.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({j, 0});
  }
  inst.graph = Graph(next, std::move(edges));
  inst.cost = CostFunction::uniform(inst.graph.edge_count(), 1);
  return inst;
}

Flow witness_flow_from_assignment(const NaeInstance& inst,
                                  const std::vector<bool>& assignment) {
  if (!nae_satisfies(inst.formula, assignment)) {
    throw Error(ErrorKind::kAssignmentNotNaeSatisfying,
                "assignment does not NAE-satisfy the formula");
  }
  Flow f = Flow::zero(inst.graph.edge_count());
  for (std::size_t i = 0; i < inst.cycle.size(); ++i) {
    const bool x = assignment[i];
    for (std::size_t t = 0; t < inst.cycle[i].size(); ++t) {
      // t even is u_{2s-1}, t odd is u_{2s}.
      const bool odd_node = t % 2 == 0;
      f.value[inst.ring[i][t]] = (odd_node == x) ? 1 : 2;
      f.value[inst.spoke[i][t]] = (odd_node == x) ? 1 : -1;
    }
  }
  for (std::size_t j = 0; j < inst.formula.clauses.size(); ++j) {
    int true_count = 0;
    for (int lit : inst.formula.clauses[j]) {
      true_count += literal_value(lit, assignment) ? 1 : 0;
    }
    f.value[inst.clause_edge[j]] = true_count == 2 ? 1 : -1;
  }
  if (verify_nowhere_zero_k_flow(inst.graph, f, KBound::finite(3))) {
    throw Error(ErrorKind::kStructureViolation, "witness flow failed to verify");
  }
  return f;
}

CostFunction zero_infinity_costs(const Graph& g, const PartialOrientation& po) {
  if (static_cast<int>(po.dir.size()) != g.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "orientation length differs");
  }
  CostFunction c = CostFunction::zeros(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (po.dir[e]) c.set(ArcRef{e, reverse(*po.dir[e])}, CostFunction::kForbidden);
  }
  return c;
}

Graph gen_cycle(int n) {
  if (n < 2) throw Error(ErrorKind::kIndexOutOfRange, "cycle needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Graph(n, std::move(edges));
}

Graph random_two_edge_connected(int n, int m, std::uint64_t seed) {
  if (n < 2 || m < n) {
    throw Error(ErrorKind::kIndexOutOfRange, "need n >= 2 and m >= n");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int ears = uniform(0, std::min(m - n, n - 2));
  const int cycle_len = ears == 0 ? n : uniform(2, n - ears);
  std::vector<Edge> edges;
  for (int i = 0; i < cycle_len; ++i) edges.push_back({i, (i + 1) % cycle_len});
  // Split the remaining vertices into `ears` nonempty runs.
  std::vector<int> cuts;
  const int rest = n - cycle_len;
  if (ears > 0) {
    std::vector<int> positions(rest - 1);
    std::iota(positions.begin(), positions.end(), 1);
    std::shuffle(positions.begin(), positions.end(), rng);
    cuts.assign(positions.begin(), positions.begin() + (ears - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(rest);
  }
  Vertex next = cycle_len;
  int done = 0;
  for (int len : cuts) {
    const Vertex a = uniform(0, next - 1);
    const Vertex b = uniform(0, next - 1);
    Vertex prev = a;
    for (; done < len; ++done) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, b});
  }
  while (static_cast<int>(edges.size()) < m) {
    const Vertex a = uniform(0, n - 1);
    const Vertex b = uniform(0, n - 1);
    if (a != b) edges.push_back({a, b});
  }
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  for (auto& e : edges) {
    e = {label[e.tail], label[e.head]};
    if (uniform(0, 1) == 1) std::swap(e.tail, e.head);
  }
  return Graph(n, std::move(edges));
}

CostFunction random_costs(int m, std::int64_t max_cost, bool symmetric,
                          int forbidden_percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> cost(0, max_cost);
  std::uniform_int_distribution<int> percent(0, 99);
  std::vector<CostFunction::Entry> fw(m), bw(m);
  for (int e = 0; e < m; ++e) {
    fw[e] = cost(rng);
    bw[e] = symmetric ? fw[e] : cost(rng);
    if (!symmetric && percent(rng) < forbidden_percent) {
      (percent(rng) < 50 ? fw[e] : bw[e]) = CostFunction::kForbidden;
    }
  }
  return CostFunction(std::move(fw), std::move(bw));
}

}  // namespace nzflow
