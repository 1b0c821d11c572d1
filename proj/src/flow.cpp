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

#include "nzflow/flow.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <string>

namespace nzflow {

std::int64_t Flow::max_abs() const {
  std::int64_t best = 0;
  for (std::int64_t v : value) best = std::max(best, std::abs(v));
  return best;
}

std::vector<std::int64_t> excess(const Graph& g, const Flow& f) {
  if (f.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "flow length differs from m");
  }
  std::vector<std::int64_t> ex(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    ex[g.edge(e).tail] += f.value[e];
    ex[g.edge(e).head] -= f.value[e];
  }
  return ex;
}

bool conserves(const Graph& g, const Flow& f) {
  const auto ex = excess(g, f);
  return std::all_of(ex.begin(), ex.end(),
                     [](std::int64_t x) { return x == 0; });
}

static void require_conservation(const Graph& g, const Flow& f) {
  const auto ex = excess(g, f);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (ex[v] != 0) {
      throw Error(ErrorKind::kConservationViolated,
                  "net outflow " + std::to_string(ex[v]) + " at vertex " +
                      std::to_string(v));
    }
  }
}

Flow extend(const Graph& g, const PartialOrientation& po,
            const std::vector<std::int64_t>& values) {
  const int m = g.edge_count();
  if (static_cast<int>(po.dir.size()) != m ||
      static_cast<int>(values.size()) != m) {
    throw Error(ErrorKind::kGraphMismatch, "orientation/value length != m");
  }
  Flow f = Flow::zero(m);
  for (EdgeId e = 0; e < m; ++e) {
    if (!po.dir[e]) continue;
    if (values[e] < 1) {
      throw Error(ErrorKind::kNonpositiveValue,
                  "edge " + std::to_string(e) + " has value " +
                      std::to_string(values[e]));
    }
    f.value[e] = sign(*po.dir[e]) * values[e];
  }
  require_conservation(g, f);
  return f;
}

Flow negate(const Flow& f) {
  Flow r = f;
  for (auto& v : r.value) v = -v;
  return r;
}

Flow scale_add(std::int64_t a, const Flow& f1, std::int64_t b,
               const Flow& f2) {
  if (f1.edge_count() != f2.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "flows have different lengths");
  }
  Flow r = Flow::zero(f1.edge_count());
  for (int e = 0; e < f1.edge_count(); ++e) {
    r.value[e] = a * f1.value[e] + b * f2.value[e];
  }
  return r;
}

Flow compose_nowhere_zero(const Graph& g, const Flow& f1, int k1,
                          const Flow& f2, int k2) {
  if (f1.edge_count() != g.edge_count() || f2.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "flow length differs from m");
  }
  if (f1.max_abs() > k1 - 1 || f2.max_abs() > k2 - 1) {
    throw Error(ErrorKind::kBoundViolated, "input is not a k_i-flow");
  }
  require_conservation(g, f1);
  require_conservation(g, f2);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f1.value[e] == 0 && f2.value[e] == 0) {
      throw Error(ErrorKind::kSupportNotCovering,
                  "edge " + std::to_string(e) + " is in neither support");
    }
  }
  Flow r = scale_add(k2, f1, 1, f2);
  assert(conserves(g, r));
  assert(r.max_abs() <= static_cast<std::int64_t>(k1) * k2 - 1);
  assert(std::none_of(r.value.begin(), r.value.end(),
                      [](std::int64_t v) { return v == 0; }));
  return r;
}

SupportOrientation support_orientation(const Flow& f) {
  SupportOrientation s;
  s.orientation = PartialOrientation::undecided(f.edge_count());
  for (int e = 0; e < f.edge_count(); ++e) {
    if (f.value[e] == 0) continue;
    s.edges.push_back(e);
    s.orientation.dir[e] = f.value[e] > 0 ? Dir::kForward : Dir::kBackward;
  }
  return s;
}

std::int64_t flow_cost(const Flow& f, const CostFunction& c) {
  if (f.edge_count() != c.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "cost length differs from m");
  }
  std::int64_t total = 0;
  for (int e = 0; e < f.edge_count(); ++e) {
    const std::int64_t v = f.value[e];
    if (v == 0) continue;
    const ArcRef a{e, v > 0 ? Dir::kForward : Dir::kBackward};
    total += c.finite(a) * std::abs(v);
  }
  return total;
}

}  // namespace nzflow
