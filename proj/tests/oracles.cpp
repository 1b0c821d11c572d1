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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace nzflow::oracle {
namespace {

bool connected_without(const Graph& g, EdgeId skip) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<std::vector<Vertex>> adj(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == skip) continue;
    adj[g.edge(e).tail].push_back(g.edge(e).head);
    adj[g.edge(e).head].push_back(g.edge(e).tail);
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace

bool cut_balanced(const Graph& g, const Orientation& o, int k) {
  const int n = g.vertex_count();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    int out = 0, total = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const ArcRef a = o.arc(e);
      const bool t = (mask >> g.tail(a)) & 1u;
      const bool h = (mask >> g.head(a)) & 1u;
      if (t != h) ++total;
      if (t && !h) ++out;
    }
    if (k * out < total) return false;
  }
  return true;
}

bool partial_cut_balanced(const Graph& g, const PartialOrientation& po, int k) {
  const int n = g.vertex_count();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    int out = 0, total = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!po.dir[e]) continue;
      const ArcRef a{e, *po.dir[e]};
      const bool t = (mask >> g.tail(a)) & 1u;
      const bool h = (mask >> g.head(a)) & 1u;
      if (t != h) ++total;
      if (t && !h) ++out;
    }
    if (k * out > (k - 1) * total) return false;
  }
  return true;
}

bool flow_exists_on_orientation(const Graph& g, const Orientation& o, int k) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  // BFS forest; order lists vertices so parents precede children.
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<bool> seen(n, false), tree(m, false);
  std::vector<Vertex> order;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    order.push_back(root);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      const Vertex v = order[i];
      for (EdgeId e : g.incident(v)) {
        const Vertex w = g.other_end(e, v);
        if (seen[w]) continue;
        seen[w] = true;
        parent_edge[w] = e;
        tree[e] = true;
        order.push_back(w);
      }
    }
  }
  std::vector<EdgeId> cotree;
  for (EdgeId e = 0; e < m; ++e) {
    if (!tree[e]) cotree.push_back(e);
  }
  std::vector<std::int64_t> value(m, 0);
  std::vector<int> digit(cotree.size(), 1);
  while (true) {
    for (std::size_t i = 0; i < cotree.size(); ++i) {
      value[cotree[i]] = sign(o.dir[cotree[i]]) * digit[i];
    }
    bool ok = true;
    for (auto it = order.rbegin(); it != order.rend() && ok; ++it) {
      const Vertex v = *it;
      const EdgeId pe = parent_edge[v];
      if (pe < 0) continue;
      std::int64_t net = 0;
      for (EdgeId e : g.incident(v)) {
        if (e == pe) continue;
        net += g.edge(e).tail == v ? value[e] : -value[e];
      }
      value[pe] = g.edge(pe).tail == v ? -net : net;
      const std::int64_t along = sign(o.dir[pe]) * value[pe];
      ok = along >= 1 && along <= k - 1;
    }
    // Each root balances because the rest of its component does.
    if (ok) return true;
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == k - 1) digit[i++] = 1;
    if (i == digit.size()) return false;
    ++digit[i];
  }
}

std::optional<std::int64_t> min_nzk_cost_naive(const Graph& g,
                                               const CostFunction& c, int k) {
  const int m = g.edge_count();
  std::vector<std::int64_t> value(m, -(k - 1));
  std::optional<std::int64_t> best;
  auto next = [&]() {
    for (int e = 0; e < m; ++e) {
      if (value[e] == k - 1) {
        value[e] = -(k - 1);
        continue;
      }
      value[e] = value[e] == -1 ? 1 : value[e] + 1;
      return true;
    }
    return false;
  };
  do {
    std::vector<std::int64_t> net(g.vertex_count(), 0);
    std::optional<std::int64_t> cost = 0;
    for (EdgeId e = 0; e < m; ++e) {
      net[g.edge(e).tail] += value[e];
      net[g.edge(e).head] -= value[e];
      const auto& unit = c.at({e, value[e] > 0 ? Dir::kForward : Dir::kBackward});
      if (!unit) {
        cost.reset();
        break;
      }
      *cost += *unit * (value[e] > 0 ? value[e] : -value[e]);
    }
    if (!cost) continue;
    if (std::any_of(net.begin(), net.end(), [](auto x) { return x != 0; })) continue;
    if (!best || *cost < *best) best = cost;
  } while (m > 0 && next());
  return best;
}

std::optional<std::int64_t> min_cost_circulation_naive(const BoundedDigraph& d) {
  const std::size_t a = d.arcs.size();
  std::vector<std::int64_t> x(a);
  for (std::size_t i = 0; i < a; ++i) x[i] = d.arcs[i].lower;
  std::optional<std::int64_t> best;
  while (true) {
    std::vector<std::int64_t> net(d.vertex_count, 0);
    std::int64_t cost = 0;
    for (std::size_t i = 0; i < a; ++i) {
      net[d.arcs[i].tail] += x[i];
      net[d.arcs[i].head] -= x[i];
      cost += d.arcs[i].cost * x[i];
    }
    if (std::all_of(net.begin(), net.end(), [](auto v) { return v == 0; }) &&
        (!best || cost < *best)) {
      best = cost;
    }
    std::size_t i = 0;
    while (i < a && x[i] == d.arcs[i].upper) {
      x[i] = d.arcs[i].lower;
      ++i;
    }
    if (i == a) return best;
    ++x[i];
  }
}

std::optional<Rational> lp_optimum_by_bases(const LinearProgram& lp) {
  // Equality form with one slack per inequality row.
  const int rows = static_cast<int>(lp.rows.size());
  int cols = lp.variable_count;
  std::vector<std::vector<Rational>> a(rows);
  std::vector<Rational> b(rows), cost(lp.objective);
  cost.resize(cols, 0);
  for (int r = 0; r < rows; ++r) {
    a[r].assign(lp.variable_count, 0);
    for (const auto& [j, v] : lp.rows[r].terms) a[r][j] += v;
    b[r] = lp.rows[r].rhs;
  }
  for (int r = 0; r < rows; ++r) {
    if (lp.rows[r].sense == Sense::kEq) continue;
    for (int s = 0; s < rows; ++s) a[s].push_back(0);
    a[r].back() = lp.rows[r].sense == Sense::kLe ? 1 : -1;
    cost.push_back(0);
    ++cols;
  }
  std::optional<Rational> best;
  std::vector<int> pick(rows);
  std::function<void(int, int)> choose = [&](int idx, int from) {
    if (idx == rows) {
      // Gauss-Jordan on the chosen columns.
      std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(rows + 1));
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < rows; ++c) m[r][c] = a[r][pick[c]];
        m[r][rows] = b[r];
      }
      for (int c = 0; c < rows; ++c) {
        int p = c;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) return;
        std::swap(m[p], m[c]);
        for (int r = 0; r < rows; ++r) {
          if (r == c || m[r][c] == 0) continue;
          const Rational f = m[r][c] / m[c][c];
          for (int q = c; q <= rows; ++q) m[r][q] -= f * m[c][q];
        }
      }
      Rational obj = 0;
      for (int c = 0; c < rows; ++c) {
        const Rational x = m[c][rows] / m[c][c];
        if (x < 0) return;
        obj += cost[pick[c]] * x;
      }
      if (!best || obj < *best) best = obj;
      return;
    }
    for (int c = from; c < cols; ++c) {
      pick[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return best;
}

bool two_edge_connected_naive(const Graph& g) {
  if (!connected_without(g, -1)) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!connected_without(g, e)) return false;
  }
  return true;
}

std::vector<Graph> two_edge_connected_multigraphs(int max_edges) {
  using EdgeList = std::vector<std::pair<int, int>>;
  std::vector<Graph> out;
  for (int n = 2; n <= max_edges; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    std::set<EdgeList> classes;
    EdgeList chosen;
    std::vector<int> degree(n, 0);
    // Labelings are restricted to nonincreasing degree; the canonical form
    // is then the least sorted edge list over degree-preserving relabelings.
    auto canonical = [&](const EdgeList& edges) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      EdgeList best;
      std::function<void(int)> permute = [&](int start) {
        if (start == n) {
          EdgeList mapped;
          for (auto [x, y] : edges) {
            mapped.emplace_back(std::min(perm[x], perm[y]), std::max(perm[x], perm[y]));
          }
          std::sort(mapped.begin(), mapped.end());
          if (best.empty() || mapped < best) best = mapped;
          return;
        }
        int end = start;
        while (end < n && degree[end] == degree[start]) ++end;
        std::sort(perm.begin() + start, perm.begin() + end);
        do {
          permute(end);
        } while (std::next_permutation(perm.begin() + start, perm.begin() + end));
      };
      permute(0);
      return best;
    };
    std::function<void(int, int)> grow = [&](int from, int left) {
      if (left == 0) {
        for (int v = 0; v < n; ++v) {
          if (degree[v] < 2 || (v > 0 && degree[v] > degree[v - 1])) return;
        }
        std::vector<Edge> edges;
        for (auto [x, y] : chosen) edges.push_back({x, y});
        if (!two_edge_connected_naive(Graph(n, edges))) return;
        classes.insert(canonical(chosen));
        return;
      }
      for (int p = from; p < static_cast<int>(pairs.size()); ++p) {
        chosen.push_back(pairs[p]);
        ++degree[pairs[p].first];
        ++degree[pairs[p].second];
        grow(p, left - 1);
        --degree[pairs[p].first];
        --degree[pairs[p].second];
        chosen.pop_back();
      }
    };
    for (int m = n; m <= max_edges; ++m) grow(0, m);
    for (const EdgeList& edges : classes) {
      std::vector<Edge> list;
      for (auto [x, y] : edges) list.push_back({x, y});
      out.emplace_back(n, std::move(list));
    }
  }
  return out;
}

}  // namespace nzflow::oracle
