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

#include <doctest.h>

#include <sstream>

#include "../oracles.hpp"
#include "nzflow/gadgets.hpp"
#include "nzflow/nz6.hpp"
#include "nzflow/verify.hpp"

using namespace nzflow;

namespace {

// The Fig-2 style formula: (x1 v x2 v x3)(~x1 v ~x2 v x3)(x1 v ~x2 v ~x3).
CnfFormula three_clause_sat() { return {3, {{1, 2, 3}, {-1, -2, 3}, {1, -2, -3}}}; }

// (x1 v x2 v x3)(~x1 v x2 v x3)(~x1 v x2 v ~x3).
CnfFormula three_clause_nae() { return {3, {{1, 2, 3}, {-1, 2, 3}, {-1, 2, -3}}}; }

}  // namespace

TEST_CASE("dimacs round-trip and errors") {
  std::istringstream in("c comment\np cnf 3 2\n1 -2 0\n3\n 2 0\n");
  const CnfFormula phi = parse_dimacs(in);
  CHECK(phi.variable_count == 3);
  CHECK(phi.clauses == std::vector<std::vector<int>>{{1, -2}, {3, 2}});
  std::ostringstream out;
  write_dimacs(out, phi);
  std::istringstream back(out.str());
  CHECK(parse_dimacs(back) == phi);
  for (const char* bad : {"1 2 0\n", "p cnf 2 1\n3 0\n", "p cnf 2 2\n1 0\n",
                          "p cnf 2 1\n0\n", "p cnf 2 1\n1 x 0\n"}) {
    std::istringstream s(bad);
    CHECK_THROWS_AS(parse_dimacs(s), Error);
  }
}

TEST_CASE("formula predicates") {
  CHECK(is_restricted_sat(three_clause_sat()));
  CHECK_FALSE(is_restricted_sat({1, {{1}, {1}, {-1}, {1}}}));
  CHECK(is_nae3sat(three_clause_nae()));
  CHECK_FALSE(is_nae3sat({2, {{1, 2}}}));
  CHECK(is_satisfiable(three_clause_sat()));
  CHECK_FALSE(is_satisfiable({1, {{1}, {-1}}}));
  CHECK(is_nae_satisfiable(three_clause_nae()));
  CHECK_FALSE(is_nae_satisfiable({1, {{1, 1, 1}}}));
}

TEST_CASE("pure literal elimination reaches a fixpoint") {
  // x3 is pure; removing its clause makes x2 pure; x1 survives.
  const CnfFormula phi{3, {{1, 2}, {-1, 3}, {-2, 3}, {-1}, {1}}};
  const PureLiteralReduction r = eliminate_pure_literals(phi);
  CHECK(r.kept == std::vector<int>{1});
  CHECK(r.formula.clauses == std::vector<std::vector<int>>{{-1}, {1}});
}

TEST_CASE("completion gadget layout") {
  const CompletionInstance inst = gen_completion_hardness(three_clause_sat(), 4);
  const Graph& g = inst.graph;
  CHECK(g.vertex_count() == 1 + 6 + 3);
  // x1: a = 2, a' = 1; x2: a = 1, a' = 2; x3: a = 2, a' = 1.
  // Per variable 2 + (4 - a - 2) + (4 - a' - 2) = 3 oriented root edges.
  CHECK(g.edge_count() == 3 + 3 * 3 + 9 + 3 * 4);
  int undecided = 0;
  for (const auto& d : inst.partial.dir) undecided += d ? 0 : 1;
  CHECK(undecided == 3);
  CHECK(g.edge(0) == Edge{1, 2});
  try {
    gen_completion_hardness(three_clause_sat(), 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kKTooSmall);
  }
  try {
    gen_completion_hardness({1, {{1}, {1}, {-1}, {1}}}, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotRestrictedSat);
  }
}

TEST_CASE("completion gadget completes exactly for satisfying assignments") {
  const CompletionInstance inst = gen_completion_hardness(three_clause_sat(), 4);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<bool> x{bool(mask & 1u), bool(mask & 2u), bool(mask & 4u)};
    const Orientation o = completion_from_assignment(inst, x);
    CHECK(oracle::cut_balanced(inst.graph, o, 4) == satisfies(inst.reduction.formula, x));
  }
}

TEST_CASE("all-false assignment is refuted by the cut {u1, u2, u3, v1}") {
  const CompletionInstance inst = gen_completion_hardness(three_clause_sat(), 4);
  const Orientation o = completion_from_assignment(inst, {false, false, false});
  const Graph& g = inst.graph;
  const VertexSet x(g.vertex_count(), {1, 3, 5, 7});
  int out = 0, total = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool t = x.contains(g.tail(o.arc(e))), h = x.contains(g.head(o.arc(e)));
    total += t != h;
    out += t && !h;
  }
  CHECK(out == 10);
  CHECK(total == 13);
  CHECK(4 * out > 3 * total);
}

TEST_CASE("nae gadget counts") {
  const NaeInstance inst = gen_nae3sat_instance(three_clause_nae());
  CHECK(inst.d == std::vector<int>{2, 3, 2});
  CHECK(inst.graph.edge_count() == 31);
  CHECK(inst.target() == 38);
  for (std::size_t j = 1; j <= 3; ++j) CHECK(inst.graph.degree(static_cast<Vertex>(j)) == 4);
  for (const auto& ring : inst.cycle) {
    for (Vertex v : ring) CHECK(inst.graph.degree(v) == 3);
  }
  CHECK_THROWS_AS(gen_nae3sat_instance({2, {{1, 2}}}), Error);
}

TEST_CASE("nae witness flows") {
  const NaeInstance inst = gen_nae3sat_instance(three_clause_nae());
  const Flow f = witness_flow_from_assignment(inst, {true, true, false});
  CHECK_FALSE(verify_nowhere_zero_k_flow(inst.graph, f, KBound::finite(3)));
  CHECK(flow_cost(f, inst.cost) == inst.target());
  // Value 2 sits on the even arcs of R1 and R2 and the odd arcs of R3.
  for (int i = 0; i < 3; ++i) {
    for (std::size_t t = 0; t < inst.ring[i].size(); ++t) {
      const bool even_arc = t % 2 == 1;
      CHECK((f.value[inst.ring[i][t]] == 2) == (i < 2 ? even_arc : !even_arc));
    }
  }
  const Flow g = witness_flow_from_assignment(inst, {false, false, true});
  CHECK(flow_cost(g, inst.cost) == inst.target());
  try {
    witness_flow_from_assignment(inst, {true, true, true});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kAssignmentNotNaeSatisfying);
  }
}

TEST_CASE("zero-infinity costs") {
  const Graph g = gen_cycle(3);
  PartialOrientation po = PartialOrientation::undecided(3);
  po.dir[1] = Dir::kBackward;
  const CostFunction c = zero_infinity_costs(g, po);
  CHECK(c.at({1, Dir::kBackward}) == 0);
  CHECK(c.forbidden({1, Dir::kForward}));
  CHECK(c.at({0, Dir::kForward}) == 0);
  CHECK(c.at({0, Dir::kBackward}) == 0);
  CHECK(zero_infinity_costs(g, PartialOrientation::undecided(3)) == CostFunction::zeros(3));
}

TEST_CASE("generators") {
  CHECK(gen_cycle(2).edge_count() == 2);
  CHECK(gen_cycle(3).vertex_count() == 3);
  CHECK(petersen_graph().edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(petersen_graph().degree(v) == 3);
  CHECK_THROWS_AS(gen_cycle(1), Error);
  const CostFunction c = random_costs(50, 5, false, 30, 1);
  for (EdgeId e = 0; e < 50; ++e) {
    CHECK_FALSE((c.forbidden({e, Dir::kForward}) && c.forbidden({e, Dir::kBackward})));
  }
  CHECK(random_costs(20, 5, true, 30, 1).is_symmetric());
}
