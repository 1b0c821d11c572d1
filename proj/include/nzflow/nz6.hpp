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

#include "nzflow/flow.hpp"
#include "nzflow/graph.hpp"

namespace nzflow {

// Nowhere-zero 6-flow for a 2-edge-connected graph. The result always passes
// the 6-flow checker; throws kNotTwoEdgeConnected otherwise.
Flow nz6_flow(const Graph& g);

// The constructive path alone, without the small-instance brute-force
// fallback. Throws kStructureViolation if the construction gets stuck.
Flow nz6_flow_constructive(const Graph& g);

// All-+-1 flow along Euler circuits when every degree is even.
std::optional<Flow> nz2_or_none(const Graph& g);

struct BruteForceOptions {
  std::int64_t node_budget = 200'000'000;
  // For an unbounded k, |value| is capped at unbounded_factor * m.
  std::int64_t unbounded_factor = 6;
};

struct BruteForceResult {
  Flow flow;
  std::int64_t cost = 0;
};

// Exact minimum-cost nowhere-zero k-flow by depth-first search with
// conservation propagation and cost bounding. Throws kBudgetExceeded.
std::optional<BruteForceResult> brute_force_min_nzk(
    const Graph& g, const CostFunction& c, KBound k,
    const BruteForceOptions& options = {});

}  // namespace nzflow
