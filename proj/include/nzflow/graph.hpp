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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nzflow/error.hpp"

namespace nzflow {

using Vertex = int;
using EdgeId = int;

// Direction of an arc relative to its edge: forward is tail->head (e+),
// backward is head->tail (e-).
enum class Dir : std::uint8_t { kForward, kBackward };

constexpr Dir reverse(Dir d) {
  return d == Dir::kForward ? Dir::kBackward : Dir::kForward;
}
constexpr int sign(Dir d) { return d == Dir::kForward ? 1 : -1; }

struct ArcRef {
  EdgeId edge = 0;
  Dir dir = Dir::kForward;

  ArcRef reversed() const { return {edge, reverse(dir)}; }
  // Dense index in [0, 2m): 2*edge for e+, 2*edge+1 for e-.
  int index() const { return 2 * edge + (dir == Dir::kForward ? 0 : 1); }
  static ArcRef from_index(int i) {
    return {i / 2, (i % 2 == 0) ? Dir::kForward : Dir::kBackward};
  }
  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected loopless multigraph with stable edge ids. Each edge is stored
// with a reference direction (tail, head) that names its e+ arc.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  Vertex tail(ArcRef a) const {
    return a.dir == Dir::kForward ? edges_[a.edge].tail : edges_[a.edge].head;
  }
  Vertex head(ArcRef a) const {
    return a.dir == Dir::kForward ? edges_[a.edge].head : edges_[a.edge].tail;
  }
  Vertex other_end(EdgeId e, Vertex v) const {
    return edges_[e].tail == v ? edges_[e].head : edges_[e].tail;
  }

  std::span<const EdgeId> incident(Vertex v) const { return incidence_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incidence_[v].size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);

// Vertex subset as a bit set over [0, n).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : bits_(n, false) {}
  VertexSet(int n, std::initializer_list<Vertex> members);
  static VertexSet from_mask(int n, std::uint64_t mask);

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(Vertex v) const { return bits_[v]; }
  void insert(Vertex v) { bits_[v] = true; }
  void erase(Vertex v) { bits_[v] = false; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool proper_nonempty() const {
    const int s = size();
    return s > 0 && s < universe();
  }
  VertexSet complement() const;
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
};

struct Orientation {
  std::vector<Dir> dir;

  static Orientation all_forward(int m) {
    return {std::vector<Dir>(m, Dir::kForward)};
  }
  ArcRef arc(EdgeId e) const { return {e, dir[e]}; }
  Orientation reversed() const;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

struct PartialOrientation {
  std::vector<std::optional<Dir>> dir;

  static PartialOrientation undecided(int m) {
    return {std::vector<std::optional<Dir>>(m)};
  }
  static PartialOrientation from(const Orientation& o);
  bool is_complete() const;
  int oriented_count() const;
  // Throws kBoundViolated if some edge is undecided.
  Orientation to_orientation() const;
  friend bool operator==(const PartialOrientation&,
                         const PartialOrientation&) = default;
};

// Per-arc nonnegative integer costs; std::nullopt is the FORBIDDEN marker.
class CostFunction {
 public:
  using Entry = std::optional<std::int64_t>;
  static constexpr Entry kForbidden = std::nullopt;

  CostFunction() = default;
  CostFunction(std::vector<Entry> forward, std::vector<Entry> backward);

  static CostFunction uniform(int m, std::int64_t c);
  static CostFunction zeros(int m) { return uniform(m, 0); }

  int edge_count() const { return static_cast<int>(forward_.size()); }
  const Entry& at(ArcRef a) const {
    return a.dir == Dir::kForward ? forward_[a.edge] : backward_[a.edge];
  }
  void set(ArcRef a, Entry c);
  bool forbidden(ArcRef a) const { return !at(a).has_value(); }
  // Cost of a finite arc; throws kForbiddenArcUsed on FORBIDDEN.
  std::int64_t finite(ArcRef a) const;
  bool is_symmetric() const;
  // Symmetric cost c(e); requires is_symmetric().
  std::int64_t symmetric(EdgeId e) const { return *forward_[e]; }

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  std::vector<Entry> forward_;
  std::vector<Entry> backward_;
};

// Either a finite k >= 2 or the unbounded case (k = infinity).
class KBound {
 public:
  static KBound finite(int k);
  static KBound unbounded() { return KBound(0); }

  bool is_unbounded() const { return k_ == 0; }
  // Requires !is_unbounded().
  int value() const { return k_; }
  // Largest admissible |flow value| given a cap used in the unbounded case.
  std::int64_t max_value(std::int64_t unbounded_cap) const {
    return is_unbounded() ? unbounded_cap : k_ - 1;
  }
  std::string to_string() const;
  static KBound parse(const std::string& text);

  friend bool operator==(const KBound&, const KBound&) = default;

 private:
  explicit KBound(int k) : k_(k) {}
  int k_;
};

bool is_connected(const Graph& g);
std::vector<EdgeId> bridges(const Graph& g);
bool is_two_edge_connected(const Graph& g);
// Edge sets of the blocks (maximal 2-vertex-connected pieces, bridges as
// singleton blocks). Parallel edges share a block; isolated vertices are
// ignored.
std::vector<std::vector<EdgeId>> biconnected_blocks(const Graph& g);

// delta_E(U): edges with exactly one end in U.
std::vector<EdgeId> cut_edges(const Graph& g, const VertexSet& u);
// delta^+(U) among the oriented edges of po.
std::vector<ArcRef> out_arcs(const Graph& g, const PartialOrientation& po,
                             const VertexSet& u);

std::int64_t orientation_cost(const Orientation& o, const CostFunction& c);

}  // namespace nzflow
