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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nzflow/flow.hpp"
#include "nzflow/graph.hpp"

namespace nzflow {

// Literals are signed 1-based variable indices; negative means negated.
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;

  // Throws kParseError on an empty clause or an out-of-range literal.
  void validate() const;
  // Occurrences of variable v (1-based) as {positive, negative}.
  std::pair<int, int> occurrences(int v) const;
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Every variable occurs at most 3 times.
bool is_restricted_sat(const CnfFormula& phi);
// Every clause has exactly 3 literals.
bool is_nae3sat(const CnfFormula& phi);

// assignment[v - 1] is the value of variable v.
bool satisfies(const CnfFormula& phi, const std::vector<bool>& assignment);
bool nae_satisfies(const CnfFormula& phi, const std::vector<bool>& assignment);
// Truth-table oracles; variable_count <= 20.
bool is_satisfiable(const CnfFormula& phi);
bool is_nae_satisfiable(const CnfFormula& phi);

CnfFormula parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& phi);

// Pure-literal elimination to a fixpoint. The remaining variables are
// renumbered 1..n' in original order; kept[i] is the original index of new
// variable i + 1.
struct PureLiteralReduction {
  CnfFormula formula;
  std::vector<int> kept;
};
PureLiteralReduction eliminate_pure_literals(const CnfFormula& phi);

// Completion gadget. Vertex layout: r = 0, u_i = 2i - 1, u'_i = 2i,
// v_j = 2n + j over the reduced formula. Edge i - 1 is the undecided edge
// (u_i, u'_i); every other edge is oriented.
struct CompletionInstance {
  Graph graph;
  PartialOrientation partial;
  PureLiteralReduction reduction;
  int k = 0;
};
CompletionInstance gen_completion_hardness(const CnfFormula& phi, int k);

// Orientation of the undecided edges for an assignment of the reduced
// formula: x = 0 orients u -> u', x = 1 orients u' -> u.
Orientation completion_from_assignment(const CompletionInstance& inst,
                                       const std::vector<bool>& assignment);

// Cycle nodes of variable i are cycle[i - 1][0 .. 2 d_i - 1] (u_1 .. u_2d).
// v_0 = 0 and v_j = j.
struct NaeInstance {
  Graph graph;
  CostFunction cost;
  CnfFormula formula;
  std::vector<int> d;
  std::vector<std::vector<Vertex>> cycle;
  // ring[i - 1][t] is the edge (u_{t+1}, u_{t+2}) of R_i, tail first.
  std::vector<std::vector<EdgeId>> ring;
  // spoke[i - 1][t] is the edge from u_{t+1} to its clause or v_0, tail u.
  std::vector<std::vector<EdgeId>> spoke;
  // clause_edge[j - 1] is (v_j, v_0), tail v_j.
  std::vector<EdgeId> clause_edge;

  std::int64_t target() const;
};
NaeInstance gen_nae3sat_instance(const CnfFormula& phi);
Flow witness_flow_from_assignment(const NaeInstance& inst,
                                  const std::vector<bool>& assignment);

// 0 on oriented arcs, forbidden on their reverses, 0 both ways elsewhere.
CostFunction zero_infinity_costs(const Graph& g, const PartialOrientation& po);

// Cycle 0 -> 1 -> ... -> n-1 -> 0; n = 2 gives a digon.
Graph gen_cycle(int n);
Graph petersen_graph();
Graph complete_graph(int n);

// Random 2-edge-connected multigraph with n vertices and m >= n edges, built
// from a cycle plus ears.
Graph random_two_edge_connected(int n, int m, std::uint64_t seed);
// Costs uniform in [0, max_cost]; forbidden_percent of the arcs become
// forbidden (never both arcs of one edge).
CostFunction random_costs(int m, std::int64_t max_cost, bool symmetric,
                          int forbidden_percent, std::uint64_t seed);

}  // namespace nzflow
