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

#include "nzflow/verify.hpp"

#include <cstdlib>
#include <variant>

#include "nzflow/circulation.hpp"
#include "nzflow/cut_kernel.hpp"

namespace nzflow {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kConservation: return "Conservation";
    case ViolationKind::kZeroEdge: return "ZeroEdge";
    case ViolationKind::kRangeExceeded: return "RangeExceeded";
    case ViolationKind::kCutUnbalanced: return "CutUnbalanced";
    case ViolationKind::kNegativeCycle: return "NegativeCycle";
  }
  return "Unknown";
}

namespace {

void require_length(const Graph& g, std::size_t len) {
  if (static_cast<int>(len) != g.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "solution length differs from m");
  }
}

Violation cut_violation(VertexSet u) {
  Violation v;
  v.kind = ViolationKind::kCutUnbalanced;
  v.cut = std::move(u);
  return v;
}

// Oriented crossing counts over po for the set u.
std::pair<long, long> leaving_and_crossing(const Graph& g,
                                           const PartialOrientation& po,
                                           const VertexSet& u) {
  long leaving = 0, crossing = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!po.dir[e]) continue;
    const Vertex from = *po.dir[e] == Dir::kForward ? g.edge(e).tail
                                                    : g.edge(e).head;
    const Vertex to = g.other_end(e, from);
    if (u.contains(from) == u.contains(to)) continue;
    ++crossing;
    if (u.contains(from)) ++leaving;
  }
  return {leaving, crossing};
}

// Circulation with bounds [1, k-1] on the oriented arcs of po.
BoundedDigraph oriented_bounds(const Graph& g, const PartialOrientation& po,
                               int k) {
  BoundedDigraph d;
  d.vertex_count = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!po.dir[e]) continue;
    const ArcRef a{e, *po.dir[e]};
    d.add_arc(g.tail(a), g.head(a), 1, k - 1);
  }
  return d;
}

}  // namespace

Verdict verify_nowhere_zero_k_flow(const Graph& g, const Flow& f, KBound k) {
  require_length(g, f.value.size());
  std::vector<std::int64_t> net(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    net[g.edge(e).tail] += f.value[e];
    net[g.edge(e).head] -= f.value[e];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (net[v] != 0) {
      Violation out;
      out.kind = ViolationKind::kConservation;
      out.vertex = v;
      return out;
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f.value[e] == 0) {
      Violation out;
      out.kind = ViolationKind::kZeroEdge;
      out.edge = e;
      return out;
    }
  }
  if (!k.is_unbounded()) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (std::abs(f.value[e]) > k.value() - 1) {
        Violation out;
        out.kind = ViolationKind::kRangeExceeded;
        out.edge = e;
        return out;
      }
    }
  }
  return std::nullopt;
}

Verdict verify_cut_balanced(const Graph& g, const Orientation& o, int k,
                            CutMethod method) {
  require_length(g, o.dir.size());
  if (k < 2) throw Error(ErrorKind::kKTooSmall, "k must be at least 2");
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  if (method == CutMethod::kBrute) {
    // k |delta+(U)| - |delta(U)| summed per crossing edge.
    std::vector<CutTerm> terms;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const ArcRef a = o.arc(e);
      terms.push_back({g.tail(a), g.head(a), k - 1, -1});
    }
    const CutMinimum best = min_cut_enumerate(n, terms);
    if (best.value >= 0) return std::nullopt;
    return cut_violation(VertexSet::from_mask(n, best.mask));
  }
  const auto result =
      feasible_circulation(oriented_bounds(g, PartialOrientation::from(o), k));
  if (std::holds_alternative<Circulation>(result)) return std::nullopt;
  return cut_violation(std::get<VertexSet>(result));
}

Verdict verify_partial_cut_balanced(const Graph& g,
                                    const PartialOrientation& po, int k,
                                    CutMethod method) {
  require_length(g, po.dir.size());
  if (k < 2) throw Error(ErrorKind::kKTooSmall, "k must be at least 2");
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  if (method == CutMethod::kBrute) {
    // (k-1) |delta_F(U)| - k |delta+_F(U)| summed per crossing edge.
    std::vector<CutTerm> terms;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!po.dir[e]) continue;
      const ArcRef a{e, *po.dir[e]};
      terms.push_back({g.tail(a), g.head(a), -1, k - 1});
    }
    const CutMinimum best = min_cut_enumerate(n, terms);
    if (best.value >= 0) return std::nullopt;
    return cut_violation(VertexSet::from_mask(n, best.mask));
  }
  const auto result = feasible_circulation(oriented_bounds(g, po, k));
  if (std::holds_alternative<Circulation>(result)) return std::nullopt;
  // The circulation certificate has too few leaving arcs; its complement
  // has too many.
  return cut_violation(std::get<VertexSet>(result).complement());
}

Verdict verify_locally_optimal(const Graph& g, const CostFunction& c,
                               const Flow& f) {
  require_length(g, f.value.size());
  if (!c.is_symmetric() || c.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::kNotSymmetric, "costs must be symmetric");
  }
  if (verify_nowhere_zero_k_flow(g, f, KBound::finite(6))) {
    throw Error(ErrorKind::kNotNz6Flow, "input is not a nowhere-zero 6-flow");
  }
  std::vector<WeightedArc> arcs;
  std::vector<ArcRef> refs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const ArcRef a{e, f.value[e] > 0 ? Dir::kForward : Dir::kBackward};
    arcs.push_back(
        {g.tail(a), g.head(a), c.symmetric(e) * (3 - std::abs(f.value[e]))});
    refs.push_back(a);
  }
  const auto cycle = find_negative_cycle(g.vertex_count(), arcs);
  if (!cycle) return std::nullopt;
  Violation out;
  out.kind = ViolationKind::kNegativeCycle;
  for (int i : *cycle) out.cycle.push_back(refs[i]);
  return out;
}

bool recheck_flow_violation(const Graph& g, const Flow& f, KBound k,
                            const Violation& v) {
  switch (v.kind) {
    case ViolationKind::kConservation: {
      std::int64_t net = 0;
      for (EdgeId e : g.incident(v.vertex)) {
        net += g.edge(e).tail == v.vertex ? f.value[e] : -f.value[e];
      }
      return net != 0;
    }
    case ViolationKind::kZeroEdge:
      return f.value.at(v.edge) == 0;
    case ViolationKind::kRangeExceeded:
      return !k.is_unbounded() && std::abs(f.value.at(v.edge)) > k.value() - 1;
    default:
      return false;
  }
}

bool recheck_cut_violation(const Graph& g, const PartialOrientation& po,
                           int k, const Violation& v) {
  if (v.kind != ViolationKind::kCutUnbalanced ||
      v.cut.universe() != g.vertex_count() || !v.cut.proper_nonempty()) {
    return false;
  }
  const auto [leaving, crossing] = leaving_and_crossing(g, po, v.cut);
  return k * leaving < crossing || k * leaving > (k - 1) * crossing;
}

bool recheck_cycle_violation(const Graph& g, const CostFunction& c,
                             const Flow& f, const Violation& v) {
  if (v.kind != ViolationKind::kNegativeCycle || v.cycle.empty()) return false;
  std::int64_t weight = 0;
  for (std::size_t i = 0; i < v.cycle.size(); ++i) {
    const ArcRef a = v.cycle[i];
    const std::int64_t val = f.value.at(a.edge);
    if (val == 0 || (val > 0) != (a.dir == Dir::kForward)) return false;
    const ArcRef next = v.cycle[(i + 1) % v.cycle.size()];
    if (g.head(a) != g.tail(next)) return false;
    weight += c.symmetric(a.edge) * (3 - std::abs(val));
  }
  return weight < 0;
}

}  // namespace nzflow
