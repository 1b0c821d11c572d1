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

// Independent reference implementations used only by tests. They share
// nothing with the library beyond the plain data types.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nzflow/circulation.hpp"
#include "nzflow/graph.hpp"
#include "nzflow/simplex.hpp"

namespace nzflow::oracle {

// k |delta+(U)| >= |delta(U)| over every nonempty proper U, by enumeration.
bool cut_balanced(const Graph& g, const Orientation& o, int k);

// No U has k |delta+_F(U)| > (k-1) |delta_F(U)|, by enumeration.
bool partial_cut_balanced(const Graph& g, const PartialOrientation& po, int k);

// Some values in [1, k-1] on the arcs of o conserve flow. Enumerates the
// cotree values and solves the tree edges.
bool flow_exists_on_orientation(const Graph& g, const Orientation& o, int k);

// Minimum cost over all signed values in [-(k-1), k-1] \ {0}. m <= 7.
std::optional<std::int64_t> min_nzk_cost_naive(const Graph& g,
                                               const CostFunction& c, int k);

// Minimum cost over all integer circulations, or nullopt.
std::optional<std::int64_t> min_cost_circulation_naive(const BoundedDigraph& d);

// Optimal objective by basis enumeration for full-row-rank bounded LPs.
std::optional<Rational> lp_optimum_by_bases(const LinearProgram& lp);

// 2-edge-connectivity by deleting each edge in turn.
bool two_edge_connected_naive(const Graph& g);

// One representative per isomorphism class of 2-edge-connected loopless
// multigraphs with at most max_edges edges (and at least 2 vertices).
std::vector<Graph> two_edge_connected_multigraphs(int max_edges);

}  // namespace nzflow::oracle
