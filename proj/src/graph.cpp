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

#include "nzflow/graph.hpp"

#include <algorithm>
#include <functional>

namespace nzflow {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw Error(ErrorKind::kIndexOutOfRange, "negative vertex count");
  }
  incidence_.assign(vertex_count_, {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const auto [t, h] = edges_[e];
    if (t < 0 || t >= vertex_count_ || h < 0 || h >= vertex_count_) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "edge " + std::to_string(e) + " has an endpoint outside [0," +
                      std::to_string(vertex_count_) + ")");
    }
    if (t == h) {
      throw Error(ErrorKind::kSelfLoop,
                  "edge " + std::to_string(e) + " is a self-loop");
    }
    incidence_[t].push_back(e);
    incidence_[h].push_back(e);
  }
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [u, v] : edge_list) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

VertexSet::VertexSet(int n, std::initializer_list<Vertex> members)
    : bits_(n, false) {
  for (Vertex v : members) bits_.at(v) = true;
}

VertexSet VertexSet::from_mask(int n, std::uint64_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) s.bits_[v] = true;
  }
  return s;
}

int VertexSet::size() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe());
  for (int v = 0; v < universe(); ++v) s.bits_[v] = !bits_[v];
  return s;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (int v = 0; v < universe(); ++v) {
    if (bits_[v]) out.push_back(v);
  }
  return out;
}

Orientation Orientation::reversed() const {
  Orientation r = *this;
  for (Dir& d : r.dir) d = reverse(d);
  return r;
}

PartialOrientation PartialOrientation::from(const Orientation& o) {
  PartialOrientation po;
  po.dir.assign(o.dir.begin(), o.dir.end());
  return po;
}

bool PartialOrientation::is_complete() const {
  return std::all_of(dir.begin(), dir.end(),
                     [](const auto& d) { return d.has_value(); });
}

int PartialOrientation::oriented_count() const {
  return static_cast<int>(std::count_if(
      dir.begin(), dir.end(), [](const auto& d) { return d.has_value(); }));
}

Orientation PartialOrientation::to_orientation() const {
  Orientation o;
  o.dir.reserve(dir.size());
  for (std::size_t e = 0; e < dir.size(); ++e) {
    if (!dir[e]) {
      throw Error(ErrorKind::kBoundViolated,
                  "edge " + std::to_string(e) + " is not oriented");
    }
    o.dir.push_back(*dir[e]);
  }
  return o;
}

CostFunction::CostFunction(std::vector<Entry> forward,
                           std::vector<Entry> backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  if (forward_.size() != backward_.size()) {
    throw Error(ErrorKind::kGraphMismatch, "cost vectors differ in length");
  }
  for (const auto* side : {&forward_, &backward_}) {
    for (const Entry& c : *side) {
      if (c && *c < 0) throw Error(ErrorKind::kBoundViolated, "negative cost");
    }
  }
}

CostFunction CostFunction::uniform(int m, std::int64_t c) {
  return CostFunction(std::vector<Entry>(m, c), std::vector<Entry>(m, c));
}

void CostFunction::set(ArcRef a, Entry c) {
  if (c && *c < 0) throw Error(ErrorKind::kBoundViolated, "negative cost");
  (a.dir == Dir::kForward ? forward_ : backward_).at(a.edge) = c;
}

std::int64_t CostFunction::finite(ArcRef a) const {
  const Entry& c = at(a);
  if (!c) {
    throw Error(ErrorKind::kForbiddenArcUsed,
                "arc " + std::to_string(a.edge) +
                    (a.dir == Dir::kForward ? "+" : "-") + " is forbidden");
  }
  return *c;
}

bool CostFunction::is_symmetric() const {
  for (std::size_t e = 0; e < forward_.size(); ++e) {
    if (!forward_[e] || !backward_[e] || *forward_[e] != *backward_[e]) {
      return false;
    }
  }
  return true;
}

KBound KBound::finite(int k) {
  if (k < 2) throw Error(ErrorKind::kKTooSmall, "k must be at least 2");
  return KBound(k);
}

std::string KBound::to_string() const {
  return is_unbounded() ? "inf" : std::to_string(k_);
}

KBound KBound::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "unbounded") {
    return unbounded();
  }
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParseError, "bad k value '" + text + "'");
  }
  if (used != text.size()) {
    throw Error(ErrorKind::kParseError, "bad k value '" + text + "'");
  }
  return finite(k);
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<EdgeId> bridges(const Graph& g) {
  // Iterative lowpoint DFS; parallel edges are handled by skipping only the
  // tree edge id, not every edge to the parent.
  const int n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeId> result;
  int counter = 0;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const Vertex w = g.other_end(e, f.v);
        if (order[w] == -1) {
          order[w] = low[w] = counter++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          const Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > order[parent]) result.push_back(done.via);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<EdgeId>> blocks;
  int counter = 0;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const Vertex w = g.other_end(e, f.v);
        if (order[w] == -1) {
          edge_stack.push_back(e);
          order[w] = low[w] = counter++;
          stack.push_back({w, e, 0});
        } else if (order[w] < order[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (stack.empty()) break;
        const Vertex parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] >= order[parent]) {
          std::vector<EdgeId> block;
          while (true) {
            const EdgeId top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == done.via) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

bool is_two_edge_connected(const Graph& g) {
  return is_connected(g) && bridges(g).empty();
}

std::vector<EdgeId> cut_edges(const Graph& g, const VertexSet& u) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (u.contains(g.edge(e).tail) != u.contains(g.edge(e).head)) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<ArcRef> out_arcs(const Graph& g, const PartialOrientation& po,
                             const VertexSet& u) {
  std::vector<ArcRef> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!po.dir[e]) continue;
    const ArcRef a{e, *po.dir[e]};
    if (u.contains(g.tail(a)) && !u.contains(g.head(a))) out.push_back(a);
  }
  return out;
}

std::int64_t orientation_cost(const Orientation& o, const CostFunction& c) {
  std::int64_t total = 0;
  for (EdgeId e = 0; e < static_cast<EdgeId>(o.dir.size()); ++e) {
    total += c.finite(o.arc(e));
  }
  return total;
}

}  // namespace nzflow
