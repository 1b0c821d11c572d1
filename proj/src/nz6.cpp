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

#include "nzflow/nz6.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>

#include "nzflow/detail_dsu.hpp"
#include "nzflow/max_flow.hpp"

namespace nzflow {
namespace {

// (edge, +1 when traversed tail->head, -1 otherwise)
using SignedEdge = std::pair<EdgeId, int>;
using Walk = std::vector<SignedEdge>;

int step_sign(const Graph& g, EdgeId e, Vertex from) {
  return g.edge(e).tail == from ? 1 : -1;
}

Walk reversed_walk(const Walk& w) {
  Walk r(w.rbegin(), w.rend());
  for (auto& [e, s] : r) s = -s;
  return r;
}

void append(Walk& dst, const Walk& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

[[noreturn]] void stuck(const std::string& what) {
  throw Error(ErrorKind::kStructureViolation, "nz6 construction: " + what);
}

// Shortest a->b walk over edges with usable[e].
Walk bfs_path(const Graph& g, Vertex a, Vertex b,
              const std::vector<bool>& usable) {
  if (a == b) return {};
  std::vector<EdgeId> via(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<Vertex> q;
  q.push(a);
  seen[a] = true;
  while (!q.empty() && !seen[b]) {
    const Vertex v = q.front();
    q.pop();
    for (EdgeId e : g.incident(v)) {
      if (!usable[e]) continue;
      const Vertex w = g.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      q.push(w);
    }
  }
  if (!seen[b]) stuck("no path inside the grown subgraph");
  Walk path;
  for (Vertex v = b; v != a;) {
    const EdgeId e = via[v];
    const Vertex prev = g.other_end(e, v);
    path.push_back({e, step_sign(g, e, prev)});
    v = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Two internally vertex-disjoint p->q walks using only `edges`.
std::pair<Walk, Walk> two_disjoint_paths(const Graph& g,
                                         const std::vector<EdgeId>& edges,
                                         Vertex p, Vertex q) {
  const int n = g.vertex_count();
  MaxFlow<std::int64_t> mf(2 * n);
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  std::vector<bool> split(n, false);
  struct Use {
    int id;
    EdgeId e;
    Vertex from;
    Vertex to;
  };
  std::vector<Use> uses;
  for (EdgeId e : edges) {
    for (Vertex v : {g.edge(e).tail, g.edge(e).head}) {
      if (!split[v] && v != p && v != q) {
        split[v] = true;
        mf.add_edge(in(v), out(v), 1);
      }
    }
    const auto [x, y] = g.edge(e);
    if (x != q && y != p) uses.push_back({mf.add_edge(out(x), in(y), 1), e, x, y});
    if (y != q && x != p) uses.push_back({mf.add_edge(out(y), in(x), 1), e, y, x});
  }
  if (mf.run(out(p), in(q)) < 2) stuck("no cycle through two attachments");
  std::vector<bool> consumed(uses.size(), false);
  auto walk = [&]() {
    Walk w;
    Vertex v = p;
    while (v != q) {
      bool moved = false;
      for (std::size_t i = 0; i < uses.size(); ++i) {
        if (consumed[i] || uses[i].from != v || mf.flow(uses[i].id) != 1) {
          continue;
        }
        consumed[i] = true;
        w.push_back({uses[i].e, step_sign(g, uses[i].e, v)});
        v = uses[i].to;
        moved = true;
        break;
      }
      if (!moved) stuck("flow decomposition");
    }
    return w;
  };
  Walk first = walk();
  Walk second = walk();
  return {std::move(first), std::move(second)};
}

struct Closure {
  std::vector<EdgeId> fresh;
  Walk cycle;
};

struct GrowthPlan {
  std::vector<Walk> even_cycles;  // pairwise vertex-disjoint
  std::vector<Closure> closures;
};

// Grows a vertex set S from vertex 0 in a cubic 3-connected multigraph. Each
// closure adds at most two edges that close a walk with the grown part; when
// none exists, a cycle outside S meeting two S-edges is absorbed whole.
GrowthPlan grow(const Graph& g) {
  const int n = g.vertex_count(), m = g.edge_count();
  GrowthPlan plan;
  std::vector<bool> in_s(n, false), in_h(m, false);
  int s_size = 1;
  in_s[0] = true;
  while (true) {
    for (EdgeId e = 0; e < m; ++e) {
      const auto [x, y] = g.edge(e);
      if (in_h[e] || !in_s[x] || !in_s[y]) continue;
      Walk cycle{{e, 1}};
      append(cycle, bfs_path(g, y, x, in_h));
      plan.closures.push_back({{e}, std::move(cycle)});
      in_h[e] = true;
    }
    if (s_size == n) break;

    Vertex attach_u = -1;
    std::vector<EdgeId> links;
    for (Vertex u = 0; u < n && attach_u < 0; ++u) {
      if (in_s[u]) continue;
      links.clear();
      for (EdgeId e : g.incident(u)) {
        if (in_s[g.other_end(e, u)]) links.push_back(e);
      }
      if (links.size() >= 2) attach_u = u;
    }
    if (attach_u >= 0) {
      const EdgeId e1 = links[0], e2 = links[1];
      const Vertex a = g.other_end(e1, attach_u);
      const Vertex b = g.other_end(e2, attach_u);
      Walk cycle{{e1, step_sign(g, e1, attach_u)}};
      append(cycle, bfs_path(g, a, b, in_h));
      cycle.push_back({e2, step_sign(g, e2, b)});
      plan.closures.push_back({{e1, e2}, std::move(cycle)});
      in_h[e1] = in_h[e2] = true;
      in_s[attach_u] = true;
      ++s_size;
      continue;
    }

    // Every outside vertex has at most one edge into S.
    std::vector<int> local(n, -1);
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_s[v]) {
        local[v] = static_cast<int>(verts.size());
        verts.push_back(v);
      }
    }
    std::vector<Edge> t_edges;
    std::vector<EdgeId> t_map;
    for (EdgeId e = 0; e < m; ++e) {
      const auto [x, y] = g.edge(e);
      if (!in_s[x] && !in_s[y]) {
        t_edges.push_back({local[x], local[y]});
        t_map.push_back(e);
      }
    }
    std::vector<EdgeId> s_link(n, -1);
    for (Vertex v : verts) {
      for (EdgeId e : g.incident(v)) {
        if (in_s[g.other_end(e, v)]) s_link[v] = e;
      }
    }
    const Graph outside(static_cast<int>(verts.size()), std::move(t_edges));
    bool absorbed = false;
    for (const auto& block : biconnected_blocks(outside)) {
      if (block.size() < 2) continue;
      std::vector<Vertex> attached;
      for (EdgeId le : block) {
        for (Vertex lv : {outside.edge(le).tail, outside.edge(le).head}) {
          const Vertex v = verts[lv];
          if (s_link[v] >= 0 &&
              std::find(attached.begin(), attached.end(), v) ==
                  attached.end()) {
            attached.push_back(v);
          }
        }
      }
      if (attached.size() < 2) continue;
      std::vector<EdgeId> global_block;
      for (EdgeId le : block) global_block.push_back(t_map[le]);
      const Vertex p = attached[0], q = attached[1];
      auto [p1, p2] = two_disjoint_paths(g, global_block, p, q);
      Walk ring = p1;
      append(ring, reversed_walk(p2));
      for (const auto& [e, s] : ring) {
        in_h[e] = true;
        in_s[g.edge(e).tail] = in_s[g.edge(e).head] = true;
      }
      s_size = static_cast<int>(std::count(in_s.begin(), in_s.end(), true));
      const EdgeId ep = s_link[p], eq = s_link[q];
      const Vertex sp = g.other_end(ep, p), sq = g.other_end(eq, q);
      std::vector<bool> old_h = in_h;
      for (const auto& [e, s] : ring) old_h[e] = false;
      Walk cycle{{ep, step_sign(g, ep, p)}};
      append(cycle, bfs_path(g, sp, sq, old_h));
      cycle.push_back({eq, step_sign(g, eq, sq)});
      append(cycle, reversed_walk(p2));
      plan.closures.push_back({{ep, eq}, std::move(cycle)});
      in_h[ep] = in_h[eq] = true;
      plan.even_cycles.push_back(std::move(ring));
      absorbed = true;
      break;
    }
    if (!absorbed) stuck("no block with two attachments");
  }
  return plan;
}

// Integer 3-flow whose values are congruent to z (mod 3) on every edge.
std::vector<std::int64_t> lift_z3(const Graph& g, const std::vector<int>& z) {
  const int n = g.vertex_count(), m = g.edge_count();
  // Orient each support edge so its residue is 1; the integer value along
  // that direction is 1 - 3h for a 0/1 choice h found by max flow.
  std::vector<int> dir(m, 0);
  std::vector<std::int64_t> beta(n, 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (z[e] == 0) continue;
    dir[e] = z[e] == 1 ? 1 : -1;
    const Vertex from = dir[e] == 1 ? g.edge(e).tail : g.edge(e).head;
    const Vertex to = g.other_end(e, from);
    beta[from] += 1;
    beta[to] -= 1;
  }
  MaxFlow<std::int64_t> mf(n + 2);
  const int src = n, dst = n + 1;
  std::int64_t need = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (beta[v] % 3 != 0) stuck("residues do not conserve");
    const std::int64_t b = beta[v] / 3;
    if (b > 0) {
      mf.add_edge(src, v, b);
      need += b;
    } else if (b < 0) {
      mf.add_edge(v, dst, -b);
    }
  }
  std::vector<int> ids(m, -1);
  for (EdgeId e = 0; e < m; ++e) {
    if (dir[e] == 0) continue;
    const Vertex from = dir[e] == 1 ? g.edge(e).tail : g.edge(e).head;
    ids[e] = mf.add_edge(from, g.other_end(e, from), 1);
  }
  if (mf.run(src, dst) != need) stuck("Z3 lift infeasible");
  std::vector<std::int64_t> out(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (dir[e] == 0) continue;
    out[e] = dir[e] * (1 - 3 * mf.flow(ids[e]));
  }
  return out;
}

Flow core_flow(const Graph& g) {
  const int m = g.edge_count();
  const GrowthPlan plan = grow(g);
  Flow f1 = Flow::zero(m);
  for (const auto& ring : plan.even_cycles) {
    for (const auto& [e, s] : ring) f1.value[e] = s;
  }
  std::vector<int> z(m, 0);
  auto mod3 = [](std::int64_t x) { return static_cast<int>(((x % 3) + 3) % 3); };
  for (auto it = plan.closures.rbegin(); it != plan.closures.rend(); ++it) {
    int chosen = -1;
    for (int alpha = 0; alpha < 3 && chosen < 0; ++alpha) {
      bool ok = true;
      for (const auto& [e, s] : it->cycle) {
        if (std::find(it->fresh.begin(), it->fresh.end(), e) !=
                it->fresh.end() &&
            mod3(z[e] + alpha * s) == 0) {
          ok = false;
        }
      }
      if (ok) chosen = alpha;
    }
    if (chosen < 0) stuck("no admissible Z3 coefficient");
    for (const auto& [e, s] : it->cycle) z[e] = mod3(z[e] + chosen * s);
  }
  const Flow f2{lift_z3(g, z)};
  return compose_nowhere_zero(g, f1, 2, f2, 3);
}

// Replaces every vertex of degree d >= 4 by a d-cycle. Edge i of the input
// is edge i of the output.
Graph inflate_to_cubic(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> base(n), used(n, 0);
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    base[v] = count;
    count += g.degree(v) >= 4 ? g.degree(v) : 1;
  }
  auto slot = [&](Vertex v) {
    return g.degree(v) >= 4 ? base[v] + used[v]++ : base[v];
  };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex t = slot(e.tail);
    edges.push_back({t, slot(e.head)});
  }
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d < 4) continue;
    for (int i = 0; i < d; ++i) {
      edges.push_back({base[v] + i, base[v] + (i + 1) % d});
    }
  }
  return Graph(count, std::move(edges));
}

// A 2-edge cut of a bridgeless connected multigraph, or nullopt. Uses random
// cycle-space labels: two edges form a cut iff their labels coincide (up to
// hash collisions, which the explicit check rules out).
std::optional<std::pair<EdgeId, EdgeId>> find_two_cut(const Graph& g,
                                                      std::mt19937_64& rng) {
  const int n = g.vertex_count(), m = g.edge_count();
  if (m < 2) return std::nullopt;
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false), tree(m, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      parent_edge[w] = e;
      tree[e] = true;
      stack.push_back(w);
    }
  }
  std::vector<std::uint64_t> acc(n, 0), label(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (tree[e]) continue;
    label[e] = rng() | 1U;
    acc[g.edge(e).tail] ^= label[e];
    acc[g.edge(e).head] ^= label[e];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (parent_edge[v] < 0) continue;
    label[parent_edge[v]] = acc[v];
    acc[g.other_end(parent_edge[v], v)] ^= acc[v];
  }
  std::unordered_map<std::uint64_t, EdgeId> first;
  for (EdgeId e = 0; e < m; ++e) {
    const auto [it, fresh] = first.emplace(label[e], e);
    if (fresh) continue;
    const EdgeId f = it->second;
    // Confirm: removing both disconnects.
    std::vector<bool> reach(n, false);
    std::vector<Vertex> st{0};
    reach[0] = true;
    int reached = 1;
    while (!st.empty()) {
      const Vertex v = st.back();
      st.pop_back();
      for (EdgeId x : g.incident(v)) {
        if (x == e || x == f) continue;
        const Vertex w = g.other_end(x, v);
        if (!reach[w]) {
          reach[w] = true;
          ++reached;
          st.push_back(w);
        }
      }
    }
    if (reached < n) return std::make_pair(f, e);
  }
  return std::nullopt;
}

}  // namespace

Flow nz6_flow_constructive(const Graph& g) {
  if (!is_two_edge_connected(g)) {
    throw Error(ErrorKind::kNotTwoEdgeConnected, "graph has a bridge");
  }
  const int n = g.vertex_count(), m = g.edge_count();
  detail::DisjointSets uf(std::max(n, 1));
  std::vector<bool> contracted(m, false);
  struct Contraction {
    EdgeId e1, e2;
    int s;  // +1 when e2's tail sits on e1's tail side of the cut
  };
  std::vector<Contraction> contractions;
  std::mt19937_64 rng(0x6e7a666c6f77ULL);

  Graph work;
  std::vector<EdgeId> work_map;
  std::vector<int> vertex_index(n, -1);
  auto rebuild = [&]() {
    std::fill(vertex_index.begin(), vertex_index.end(), -1);
    int count = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (uf.find(v) == v) vertex_index[v] = count++;
    }
    std::vector<Edge> edges;
    work_map.clear();
    for (EdgeId e = 0; e < m; ++e) {
      if (contracted[e]) continue;
      const Vertex a = uf.find(g.edge(e).tail), b = uf.find(g.edge(e).head);
      if (a == b) continue;
      edges.push_back({vertex_index[a], vertex_index[b]});
      work_map.push_back(e);
    }
    work = Graph(count, std::move(edges));
  };

  while (true) {
    rebuild();
    const auto cut = find_two_cut(work, rng);
    if (!cut) break;
    const auto [l1, l2] = *cut;
    const EdgeId e1 = work_map[l1], e2 = work_map[l2];
    std::vector<bool> usable(work.edge_count(), true);
    usable[l1] = usable[l2] = false;
    const Vertex from = work.edge(l1).tail, probe = work.edge(l2).tail;
    std::vector<bool> reach(work.vertex_count(), false);
    std::vector<Vertex> st{from};
    reach[from] = true;
    while (!st.empty()) {
      const Vertex v = st.back();
      st.pop_back();
      for (EdgeId x : work.incident(v)) {
        if (!usable[x]) continue;
        const Vertex w = work.other_end(x, v);
        if (!reach[w]) {
          reach[w] = true;
          st.push_back(w);
        }
      }
    }
    contractions.push_back({e1, e2, reach[probe] ? 1 : -1});
    contracted[e1] = true;
    uf.unite(g.edge(e1).tail, g.edge(e1).head);
  }

  std::vector<std::int64_t> value(m, 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (!contracted[e] &&
        uf.find(g.edge(e).tail) == uf.find(g.edge(e).head)) {
      value[e] = 1;
    }
  }
  for (const auto& block : biconnected_blocks(work)) {
    std::vector<int> local(work.vertex_count(), -1);
    std::vector<Edge> edges;
    int count = 0;
    for (EdgeId le : block) {
      for (Vertex v : {work.edge(le).tail, work.edge(le).head}) {
        if (local[v] < 0) local[v] = count++;
      }
      edges.push_back({local[work.edge(le).tail], local[work.edge(le).head]});
    }
    const Graph piece(count, std::move(edges));
    const Flow f = core_flow(inflate_to_cubic(piece));
    for (std::size_t i = 0; i < block.size(); ++i) {
      value[work_map[block[i]]] = f.value[i];
    }
  }
  for (auto it = contractions.rbegin(); it != contractions.rend(); ++it) {
    value[it->e1] = -it->s * value[it->e2];
  }
  Flow result{std::move(value)};
  if (!conserves(g, result) || result.max_abs() > 5 ||
      std::any_of(result.value.begin(), result.value.end(),
                  [](std::int64_t v) { return v == 0; })) {
    stuck("assembled flow failed its check");
  }
  return result;
}

Flow nz6_flow(const Graph& g) {
  try {
    return nz6_flow_constructive(g);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::kStructureViolation || g.edge_count() > 16) {
      throw;
    }
  }
  auto found = brute_force_min_nzk(g, CostFunction::zeros(g.edge_count()),
                                   KBound::finite(6));
  if (!found) stuck("no nowhere-zero 6-flow found by search");
  return found->flow;
}

std::optional<Flow> nz2_or_none(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) return std::nullopt;
  }
  const int m = g.edge_count();
  Flow f = Flow::zero(m);
  std::vector<bool> used(m, false);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  // Closed trails: with all degrees even a walk can only get stuck where it
  // started.
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    while (true) {
      Vertex v = start;
      bool moved = false;
      while (true) {
        const auto inc = g.incident(v);
        while (cursor[v] < inc.size() && used[inc[cursor[v]]]) ++cursor[v];
        if (cursor[v] == inc.size()) break;
        const EdgeId e = inc[cursor[v]];
        used[e] = true;
        f.value[e] = step_sign(g, e, v);
        v = g.other_end(e, v);
        moved = true;
      }
      if (!moved) break;
    }
  }
  return f;
}

namespace {

class BruteSearch {
 public:
  BruteSearch(const Graph& g, const CostFunction& c, std::int64_t cap,
              std::int64_t budget)
      : g_(g), c_(c), cap_(cap), budget_(budget) {
    const int n = g.vertex_count(), m = g.edge_count();
    value_.assign(m, 0);
    assigned_.assign(m, false);
    open_.assign(n, 0);
    excess_.assign(n, 0);
    min_unit_.assign(m, 0);
    for (EdgeId e = 0; e < m; ++e) {
      const auto& fw = c.at({e, Dir::kForward});
      const auto& bw = c.at({e, Dir::kBackward});
      if (!fw && !bw) impossible_ = true;
      min_unit_[e] = std::min(fw.value_or(INT64_MAX), bw.value_or(INT64_MAX));
      if (impossible_) min_unit_[e] = 0;
      lower_ += min_unit_[e];
    }
    global_lower_ = lower_;
    for (Vertex v = 0; v < n; ++v) open_[v] = g.degree(v);
  }

  std::optional<BruteForceResult> run() {
    if (impossible_) return std::nullopt;
    std::vector<Vertex> touched;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) touched.push_back(v);
    if (propagate(touched)) dfs();
    if (!best_) return std::nullopt;
    return BruteForceResult{Flow{*best_}, best_cost_};
  }

 private:
  bool allowed(EdgeId e, std::int64_t v) const {
    return c_.at({e, v > 0 ? Dir::kForward : Dir::kBackward}).has_value();
  }
  std::int64_t unit(EdgeId e, std::int64_t v) const {
    return *c_.at({e, v > 0 ? Dir::kForward : Dir::kBackward});
  }

  void assign(EdgeId e, std::int64_t v) {
    value_[e] = v;
    assigned_[e] = true;
    excess_[g_.edge(e).tail] += v;
    excess_[g_.edge(e).head] -= v;
    --open_[g_.edge(e).tail];
    --open_[g_.edge(e).head];
    cost_ += unit(e, v) * std::abs(v);
    lower_ -= min_unit_[e];
    trail_.push_back(e);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const EdgeId e = trail_.back();
      trail_.pop_back();
      const std::int64_t v = value_[e];
      excess_[g_.edge(e).tail] -= v;
      excess_[g_.edge(e).head] += v;
      ++open_[g_.edge(e).tail];
      ++open_[g_.edge(e).head];
      cost_ -= unit(e, v) * std::abs(v);
      lower_ += min_unit_[e];
      assigned_[e] = false;
      value_[e] = 0;
    }
  }

  // Forces edges at vertices with one open edge; false on contradiction.
  bool propagate(std::vector<Vertex> queue) {
    while (!queue.empty()) {
      const Vertex x = queue.back();
      queue.pop_back();
      if (open_[x] == 0) {
        if (excess_[x] != 0) return false;
        continue;
      }
      if (std::abs(excess_[x]) > cap_ * open_[x]) return false;
      if (open_[x] != 1) continue;
      EdgeId e = -1;
      for (EdgeId y : g_.incident(x)) {
        if (!assigned_[y]) e = y;
      }
      const std::int64_t v =
          g_.edge(e).tail == x ? -excess_[x] : excess_[x];
      if (v == 0 || std::abs(v) > cap_ || !allowed(e, v)) return false;
      assign(e, v);
      if (cost_ + lower_ >= best_cost_) return false;
      queue.push_back(g_.edge(e).tail);
      queue.push_back(g_.edge(e).head);
    }
    return true;
  }

  void dfs() {
    if (done_) return;
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "brute-force search exceeded its node budget");
    }
    if (cost_ + lower_ >= best_cost_) return;
    Vertex pick = -1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (open_[v] > 0 && (pick < 0 || open_[v] < open_[pick])) pick = v;
    }
    if (pick < 0) {
      best_cost_ = cost_;
      best_ = value_;
      if (best_cost_ == global_lower_) done_ = true;
      return;
    }
    EdgeId e = -1;
    for (EdgeId y : g_.incident(pick)) {
      if (!assigned_[y]) {
        e = y;
        break;
      }
    }
    const std::int64_t rest = cost_ + lower_ - min_unit_[e];
    for (std::int64_t mag = 1; mag <= cap_ && !done_; ++mag) {
      bool any = false;
      for (const std::int64_t v : {mag, -mag}) {
        if (!allowed(e, v) || rest + unit(e, v) * mag >= best_cost_) continue;
        any = true;
        const std::size_t mark = trail_.size();
        assign(e, v);
        if (propagate({g_.edge(e).tail, g_.edge(e).head})) dfs();
        undo_to(mark);
        if (done_) return;
      }
      // Cost grows with magnitude, so once both signs are priced out or
      // forbidden no larger magnitude can help.
      if (!any) break;
    }
  }

  const Graph& g_;
  const CostFunction& c_;
  std::int64_t cap_;
  std::int64_t budget_;
  std::vector<std::int64_t> value_;
  std::vector<bool> assigned_;
  std::vector<int> open_;
  std::vector<std::int64_t> excess_;
  std::vector<std::int64_t> min_unit_;
  std::vector<EdgeId> trail_;
  std::int64_t cost_ = 0;
  std::int64_t lower_ = 0;
  std::int64_t global_lower_ = 0;
  std::int64_t best_cost_ = INT64_MAX;
  std::optional<std::vector<std::int64_t>> best_;
  std::int64_t nodes_ = 0;
  bool impossible_ = false;
  bool done_ = false;
};

}  // namespace

std::optional<BruteForceResult> brute_force_min_nzk(
    const Graph& g, const CostFunction& c, KBound k,
    const BruteForceOptions& options) {
  if (c.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "cost length differs from m");
  }
  const std::int64_t cap =
      k.max_value(options.unbounded_factor *
                  std::max<std::int64_t>(g.edge_count(), 1));
  BruteSearch search(g, c, cap, options.node_budget);
  return search.run();
}

}  // namespace nzflow
