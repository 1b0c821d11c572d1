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

#include "nzflow/approx.hpp"

#include <cstdlib>
#include <string>

#include "nzflow/circulation.hpp"
#include "nzflow/lp.hpp"
#include "nzflow/nz6.hpp"
#include "nzflow/verify.hpp"

namespace nzflow {
namespace {

[[noreturn]] void failed_check(const std::string& what) {
  throw Error(ErrorKind::kStructureViolation, what);
}

std::variant<Flow, VertexSet> induced_flow(const Graph& g,
                                           const PartialOrientation& po,
                                           int k) {
  if (static_cast<int>(po.dir.size()) != g.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "orientation length differs");
  }
  if (k < 2) throw Error(ErrorKind::kKTooSmall, "k must be at least 2");
  BoundedDigraph d;
  d.vertex_count = g.vertex_count();
  std::vector<int> arc_of(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!po.dir[e]) continue;
    const ArcRef a{e, *po.dir[e]};
    arc_of[e] = d.add_arc(g.tail(a), g.head(a), 1, k - 1);
  }
  auto result = feasible_circulation(d);
  if (auto* u = std::get_if<VertexSet>(&result)) return *u;
  const auto& x = std::get<Circulation>(result);
  Flow f = Flow::zero(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (arc_of[e] >= 0) f.value[e] = sign(*po.dir[e]) * x.flow[arc_of[e]];
  }
  return f;
}

void require_symmetric(const Graph& g, const CostFunction& c) {
  if (c.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "cost length differs from m");
  }
  if (!c.is_symmetric()) {
    throw Error(ErrorKind::kNotSymmetric, "costs must be symmetric");
  }
}

Flow checked_start(const Graph& g, std::optional<Flow> start) {
  Flow f = start ? std::move(*start) : nz6_flow(g);
  if (verify_nowhere_zero_k_flow(g, f, KBound::finite(6))) {
    throw Error(ErrorKind::kNotNz6Flow, "start is not a nowhere-zero 6-flow");
  }
  return f;
}

std::int64_t total_cost(const Graph& g, const CostFunction& c) {
  std::int64_t sum = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) sum += c.symmetric(e);
  return sum;
}

ApproxCertificate local_search_certificate(const Graph& g,
                                           const CostFunction& c,
                                           const Flow& f) {
  ApproxCertificate cert;
  cert.problem = "swnzf";
  cert.k = KBound::finite(6);
  cert.lp_value = Rational(static_cast<long>(total_cost(g, c)));
  cert.output_cost = flow_cost(f, c);
  cert.ratio = 3;
  cert.flow_bound = 6;
  if (verify_nowhere_zero_k_flow(g, f, KBound::finite(6)) ||
      verify_locally_optimal(g, c, f)) {
    failed_check("local search output failed verification");
  }
  if (Rational(static_cast<long>(cert.output_cost)) >
      cert.ratio * cert.lp_value) {
    failed_check("local search output exceeds three times the edge costs");
  }
  return cert;
}

}  // namespace

Flow flow_from_cut_balanced(const Graph& g, const Orientation& o, int k) {
  auto r = induced_flow(g, PartialOrientation::from(o), k);
  if (auto* u = std::get_if<VertexSet>(&r)) {
    throw NotCutBalancedError(*u, "orientation is not " + std::to_string(k) +
                                      "-cut-balanced");
  }
  return std::get<Flow>(r);
}

Flow flow_from_partial_cut_balanced(const Graph& g,
                                    const PartialOrientation& po, int k) {
  auto r = induced_flow(g, po, k);
  if (auto* u = std::get_if<VertexSet>(&r)) {
    throw NotCutBalancedError(u->complement(),
                              "partial orientation is not " +
                                  std::to_string(k) + "-cut-balanced");
  }
  return std::get<Flow>(r);
}

WnzfResult wnzf_bicriteria(const Graph& g, const CostFunction& c, KBound k) {
  const LpSolution z = solve_wnzf_lp(g, c, k);
  const FlowLpClassification split = classify_flow_extreme_point(g, z, k);
  const Flow g6 = nz6_flow(g);
  const Flow& f = split.integral_flow;
  Flow plus = scale_add(6, f, 1, g6);
  Flow minus = scale_add(6, f, -1, g6);
  const std::int64_t cost_plus = flow_cost(plus, c);
  const std::int64_t cost_minus = flow_cost(minus, c);
  WnzfResult out;
  out.flow = cost_minus < cost_plus ? std::move(minus) : std::move(plus);
  auto& cert = out.certificate;
  cert.problem = "wnzf";
  cert.k = k;
  cert.lp_value = z.objective;
  cert.output_cost = std::min(cost_plus, cost_minus);
  cert.ratio = 6;
  cert.flow_bound =
      k.is_unbounded() ? 6 * (f.max_abs() + 1) : 6 * std::int64_t{k.value()};
  if (verify_nowhere_zero_k_flow(g, out.flow, KBound::finite(cert.flow_bound))) {
    failed_check("bicriteria flow failed verification");
  }
  if (Rational(static_cast<long>(cert.output_cost)) >
      cert.ratio * cert.lp_value) {
    failed_check("bicriteria flow exceeds six times the LP value");
  }
  return out;
}

std::variant<PartialOrientation, VertexSet> extend_partial_cut_balanced(
    const Graph& g, const PartialOrientation& e1, int k) {
  if (static_cast<int>(e1.dir.size()) != g.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "orientation length differs");
  }
  if (k < 2) throw Error(ErrorKind::kKTooSmall, "k must be at least 2");
  BoundedDigraph d;
  d.vertex_count = g.vertex_count();
  std::vector<int> fw(g.edge_count(), -1), bw(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e1.dir[e]) {
      const ArcRef a{e, *e1.dir[e]};
      fw[e] = d.add_arc(g.tail(a), g.head(a), 1, k - 1);
    } else {
      fw[e] = d.add_arc(g.edge(e).tail, g.edge(e).head, 0, k - 1);
      bw[e] = d.add_arc(g.edge(e).head, g.edge(e).tail, 0, k - 1);
    }
  }
  auto result = feasible_circulation(d);
  if (auto* x = std::get_if<VertexSet>(&result)) return x->complement();
  const auto& flow = std::get<Circulation>(result).flow;
  PartialOrientation f = e1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e1.dir[e]) continue;
    // Two-sided flow cancels; what remains orients the edge.
    const std::int64_t net = flow[fw[e]] - flow[bw[e]];
    if (net > 0) f.dir[e] = Dir::kForward;
    if (net < 0) f.dir[e] = Dir::kBackward;
  }
  return f;
}

WcboResult wcbo_bicriteria(const Graph& g, const CostFunction& c, int k) {
  const LpSolution y = solve_wcbo_lp(g, c, k);
  PartialOrientation e1 = PartialOrientation::undecided(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (y.forward[e] == 1) e1.dir[e] = Dir::kForward;
    if (y.backward[e] == 1) e1.dir[e] = Dir::kBackward;
  }
  auto extended = extend_partial_cut_balanced(g, e1, k);
  if (!std::holds_alternative<PartialOrientation>(extended)) {
    failed_check("LP support could not be extended");
  }
  const Flow f = flow_from_partial_cut_balanced(
      g, std::get<PartialOrientation>(extended), k);
  const Flow g6 = nz6_flow(g);
  const SupportOrientation s = support_orientation(scale_add(6, f, 1, g6));
  WcboResult out;
  out.orientation = s.orientation.to_orientation();
  auto& cert = out.certificate;
  cert.problem = "wcbo";
  cert.k = KBound::finite(k);
  cert.lp_value = y.objective;
  cert.output_cost = orientation_cost(out.orientation, c);
  cert.ratio = k;
  cert.flow_bound = 6 * std::int64_t{k};
  if (verify_cut_balanced(g, out.orientation, static_cast<int>(cert.flow_bound),
                          CutMethod::kHoffman)) {
    failed_check("bicriteria orientation failed verification");
  }
  if (Rational(static_cast<long>(cert.output_cost)) >
      cert.ratio * cert.lp_value) {
    failed_check("bicriteria orientation exceeds k times the LP value");
  }
  return out;
}

SwnzfResult swnzf_local_search(const Graph& g, const CostFunction& c,
                               std::optional<Flow> start) {
  require_symmetric(g, c);
  Flow f = checked_start(g, std::move(start));
  BoundedDigraph d;
  d.vertex_count = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    // Reverse of the arc the flow uses.
    const ArcRef a{e, f.value[e] > 0 ? Dir::kBackward : Dir::kForward};
    d.add_arc(g.tail(a), g.head(a), 0, 1,
              c.symmetric(e) * (3 - std::abs(f.value[e])));
  }
  const Circulation x = min_cost_circulation(d);
  SwnzfResult out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (x.flow[e] == 1) f.value[e] -= 6 * (f.value[e] > 0 ? 1 : -1);
  }
  out.iterations = 1;
  out.certificate = local_search_certificate(g, c, f);
  out.flow = std::move(f);
  return out;
}

SwnzfResult swnzf_cycle_canceling(const Graph& g, const CostFunction& c,
                                  std::optional<Flow> start) {
  require_symmetric(g, c);
  Flow f = checked_start(g, std::move(start));
  const std::int64_t limit = 5 * total_cost(g, c) + 1;
  SwnzfResult out;
  while (true) {
    std::vector<WeightedArc> arcs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const ArcRef a{e, f.value[e] > 0 ? Dir::kForward : Dir::kBackward};
      arcs.push_back(
          {g.tail(a), g.head(a), c.symmetric(e) * (3 - std::abs(f.value[e]))});
    }
    const auto cycle = find_negative_cycle(g.vertex_count(), arcs);
    if (!cycle) break;
    if (++out.iterations > limit) failed_check("cycle canceling did not stop");
    for (int e : *cycle) f.value[e] -= 6 * (f.value[e] > 0 ? 1 : -1);
  }
  out.certificate = local_search_certificate(g, c, f);
  out.flow = std::move(f);
  return out;
}

}  // namespace nzflow
