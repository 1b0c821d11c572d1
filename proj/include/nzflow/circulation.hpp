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
#include <optional>
#include <variant>
#include <vector>

#include "nzflow/graph.hpp"

namespace nzflow {

struct BoundedArc {
  Vertex tail = 0;
  Vertex head = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t cost = 0;
};

struct BoundedDigraph {
  int vertex_count = 0;
  std::vector<BoundedArc> arcs;

  int add_arc(Vertex tail, Vertex head, std::int64_t lower, std::int64_t upper,
              std::int64_t cost = 0) {
    arcs.push_back({tail, head, lower, upper, cost});
    return static_cast<int>(arcs.size()) - 1;
  }
  // Throws kIndexOutOfRange / kBoundViolated on malformed arcs.
  void validate() const;
};

struct Circulation {
  std::vector<std::int64_t> flow;
  friend bool operator==(const Circulation&, const Circulation&) = default;
};

// Either a feasible circulation or a set U with
//   sum of lower bounds on arcs entering U > sum of upper bounds leaving U.
using FeasibilityResult = std::variant<Circulation, VertexSet>;

FeasibilityResult feasible_circulation(const BoundedDigraph& d);

// Checks bounds and conservation directly.
bool is_circulation(const BoundedDigraph& d, const Circulation& x);
std::int64_t circulation_cost(const BoundedDigraph& d, const Circulation& x);
// True iff U certifies infeasibility in the Hoffman sense.
bool is_hoffman_certificate(const BoundedDigraph& d, const VertexSet& u);

// Successive shortest paths with potentials. Throws kInfeasible when no
// circulation meets the bounds, kOverflowRisk when |cost|*cap*m >= 2^62.
Circulation min_cost_circulation(const BoundedDigraph& d);
// Reference engine: feasible start then Bellman-Ford cycle canceling.
Circulation min_cost_circulation_cycle_canceling(const BoundedDigraph& d);

struct WeightedArc {
  Vertex tail = 0;
  Vertex head = 0;
  std::int64_t weight = 0;
};

// Indices into arcs forming a simple directed cycle of negative total weight,
// in traversal order, or nullopt.
std::optional<std::vector<int>> find_negative_cycle(
    int vertex_count, const std::vector<WeightedArc>& arcs);

// Residual arcs of x in d (costs as weights) plus the arc index each maps to;
// exposed so tests can check optimality.
struct ResidualArc {
  WeightedArc arc;
  int source_arc = 0;
  bool forward = true;
};
std::vector<ResidualArc> residual_arcs(const BoundedDigraph& d,
                                       const Circulation& x);

}  // namespace nzflow
