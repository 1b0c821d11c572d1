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
#include <variant>

#include "nzflow/flow.hpp"
#include "nzflow/graph.hpp"
#include "nzflow/simplex.hpp"

namespace nzflow {

// Output bound record: output_cost <= ratio * lp_value, and the output was
// verified at flow_bound.
struct ApproxCertificate {
  std::string problem;
  KBound k = KBound::unbounded();
  Rational lp_value;
  std::int64_t output_cost = 0;
  Rational ratio;
  std::int64_t flow_bound = 0;
};

// Error carrying the cut that refutes k-cut-balancedness.
class NotCutBalancedError : public Error {
 public:
  NotCutBalancedError(VertexSet witness, const std::string& what)
      : Error(ErrorKind::kNotCutBalanced, what), witness_(std::move(witness)) {}
  const VertexSet& witness() const { return witness_; }

 private:
  VertexSet witness_;
};

// Nowhere-zero k-flow whose orientation is o, via circulation bounds
// [1, k-1]. Throws NotCutBalancedError.
Flow flow_from_cut_balanced(const Graph& g, const Orientation& o, int k);
// Same over the oriented edges of po; zero elsewhere.
Flow flow_from_partial_cut_balanced(const Graph& g,
                                    const PartialOrientation& po, int k);

struct WnzfResult {
  Flow flow;
  ApproxCertificate certificate;
};
WnzfResult wnzf_bicriteria(const Graph& g, const CostFunction& c, KBound k);

// Either an extension F of e1 that is partial k-cut-balanced, or a cut U with
// |delta+_{e1}(U)| > (k-1)/k |delta(U)|.
std::variant<PartialOrientation, VertexSet> extend_partial_cut_balanced(
    const Graph& g, const PartialOrientation& e1, int k);

struct WcboResult {
  Orientation orientation;
  ApproxCertificate certificate;
};
WcboResult wcbo_bicriteria(const Graph& g, const CostFunction& c, int k);

struct SwnzfResult {
  Flow flow;
  ApproxCertificate certificate;
  int iterations = 0;
};
// One min-cost circulation step from `start` (default: nz6_flow).
SwnzfResult swnzf_local_search(const Graph& g, const CostFunction& c,
                               std::optional<Flow> start = std::nullopt);
// Repeated negative-cycle flips from `start` (default: nz6_flow).
SwnzfResult swnzf_cycle_canceling(const Graph& g, const CostFunction& c,
                                  std::optional<Flow> start = std::nullopt);

}  // namespace nzflow
