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

namespace nzflow {

enum class ViolationKind {
  kConservation,
  kZeroEdge,
  kRangeExceeded,
  kCutUnbalanced,
  kNegativeCycle,
};

std::string_view to_string(ViolationKind kind);

// A re-checkable reason why a candidate solution fails.
struct Violation {
  ViolationKind kind = ViolationKind::kConservation;
  Vertex vertex = -1;          // kConservation
  EdgeId edge = -1;            // kZeroEdge, kRangeExceeded
  VertexSet cut;               // kCutUnbalanced
  std::vector<ArcRef> cycle;   // kNegativeCycle, in traversal order
};

// nullopt means the candidate passes.
using Verdict = std::optional<Violation>;

enum class CutMethod { kHoffman, kBrute };

// Conservation, then nonzero, then |v| <= k - 1 (skipped when unbounded).
Verdict verify_nowhere_zero_k_flow(const Graph& g, const Flow& f, KBound k);

// Every nonempty proper U has at least |delta(U)| / k leaving arcs. A witness
// U has fewer. The brute method needs n <= 30.
Verdict verify_cut_balanced(const Graph& g, const Orientation& o, int k,
                            CutMethod method = CutMethod::kHoffman);

// Bound |delta+_F(U)| <= (k-1)/k |delta_F(U)| over the oriented edges F only.
// A witness U has too many leaving arcs.
Verdict verify_partial_cut_balanced(const Graph& g,
                                    const PartialOrientation& po, int k,
                                    CutMethod method = CutMethod::kHoffman);

// No directed cycle of the flow's orientation has negative weight under
// c(e) (3 - |f(e)|). Throws kNotSymmetric / kNotNz6Flow on bad input.
Verdict verify_locally_optimal(const Graph& g, const CostFunction& c,
                               const Flow& f);

// Direct re-evaluation of a witness from the definitions.
bool recheck_flow_violation(const Graph& g, const Flow& f, KBound k,
                            const Violation& v);
// True iff U breaks the lower bound (|delta+| < |delta| / k) or the upper
// bound (k |delta+| > (k-1) |delta|) counted over oriented edges of po.
bool recheck_cut_violation(const Graph& g, const PartialOrientation& po,
                           int k, const Violation& v);
bool recheck_cycle_violation(const Graph& g, const CostFunction& c,
                             const Flow& f, const Violation& v);

}  // namespace nzflow
