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

#include <optional>
#include <vector>

#include "nzflow/flow.hpp"
#include "nzflow/graph.hpp"
#include "nzflow/simplex.hpp"

namespace nzflow {

// Per-arc LP values (z for the flow relaxation, y for the orientation one).
struct LpSolution {
  std::vector<Rational> forward;
  std::vector<Rational> backward;
  Rational objective;
  bool extreme = false;

  int edge_count() const { return static_cast<int>(forward.size()); }
  const Rational& at(ArcRef a) const {
    return a.dir == Dir::kForward ? forward[a.edge] : backward[a.edge];
  }
  friend bool operator==(const LpSolution&, const LpSolution&) = default;
};

// min c.z over circulations z >= 0 in the bidirected graph with
// 1 <= z(e+) + z(e-) <= k - 1 (upper row dropped when k is unbounded).
// Forbidden arcs are fixed at 0. Among optimal points the one minimizing
// sum z is returned, at a vertex of the polytope. Throws kInfeasible.
LpSolution solve_wnzf_lp(const Graph& g, const CostFunction& c, KBound k);

struct FlowLpClassification {
  Flow integral_flow;
  std::vector<EdgeId> fractional_edges;
};

// Splits an optimal vertex into its integral k-flow part and the edges
// carrying 1/2 in both directions. Throws kStructureViolation when the point
// lacks that structure.
FlowLpClassification classify_flow_extreme_point(const Graph& g,
                                                 const LpSolution& z,
                                                 KBound k);

struct CutPlaneStats {
  int rounds = 0;
  int cuts = 0;
  long pivots = 0;
};

// min c.y with y(e+) + y(e-) = 1, y >= 0 and, for every cut,
//   k * y(arcs leaving U) <= (k - 1) * |delta(U)|,
// solved by cutting planes seeded with the singleton cuts.
LpSolution solve_wcbo_lp(const Graph& g, const CostFunction& c, int k,
                         CutPlaneStats* stats = nullptr);

// Most violated cut for y via 2(n-1) rational min-cut runs, or nullopt.
std::optional<VertexSet> separate_cut_constraint(const Graph& g,
                                                 const LpSolution& y, int k);
// Same question by enumerating all subsets; n <= 30.
std::optional<VertexSet> separate_cut_constraint_brute(const Graph& g,
                                                       const LpSolution& y,
                                                       int k);

// k * y(delta+(U)) - (k - 1) * |delta(U)|; positive means violated.
Rational cut_violation(const Graph& g, const LpSolution& y, int k,
                       const VertexSet& u);

}  // namespace nzflow
