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

#include "nzflow/circulation.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "nzflow/max_flow.hpp"

namespace nzflow {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

void check_overflow(const BoundedDigraph& d) {
  __int128 max_cost = 0, max_cap = 1;
  for (const auto& a : d.arcs) {
    max_cost = std::max<__int128>(max_cost, a.cost < 0 ? -(__int128)a.cost
                                                       : (__int128)a.cost);
    max_cap = std::max<__int128>(max_cap, a.upper);
  }
  const __int128 m = std::max<std::size_t>(d.arcs.size(), 1);
  if (max_cost * max_cap * m >= (static_cast<__int128>(1) << 62)) {
    throw Error(ErrorKind::kOverflowRisk,
                "|cost| * capacity * m exceeds 2^62");
  }
}

// Residual network for successive shortest paths.
class CostFlowNetwork {
 public:
  explicit CostFlowNetwork(int n) : adj_(n) {}

  int add_edge(int from, int to, std::int64_t cap, std::int64_t cost) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to), cap_.push_back(cap), cost_.push_back(cost);
    adj_[from].push_back(id);
    to_.push_back(from), cap_.push_back(0), cost_.push_back(-cost);
    adj_[to].push_back(id + 1);
    return id;
  }

  std::int64_t residual(int id) const { return cap_[id]; }

  // Sends up to `want` units s->t along shortest paths; edge costs must be
  // nonnegative initially. Returns the amount sent.
  std::int64_t run(int s, int t, std::int64_t want) {
    const int n = static_cast<int>(adj_.size());
    std::vector<std::int64_t> pot(n, 0), dist(n);
    std::vector<int> pred(n);
    std::int64_t sent = 0;
    while (sent < want) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(pred.begin(), pred.end(), -1);
      using Item = std::pair<std::int64_t, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      dist[s] = 0;
      pq.push({0, s});
      while (!pq.empty()) {
        const auto [dv, v] = pq.top();
        pq.pop();
        if (dv != dist[v]) continue;
        for (int id : adj_[v]) {
          if (cap_[id] <= 0) continue;
          const int w = to_[id];
          const std::int64_t nd = dv + cost_[id] + pot[v] - pot[w];
          if (nd < dist[w]) {
            dist[w] = nd;
            pred[w] = id;
            pq.push({nd, w});
          }
        }
      }
      if (dist[t] >= kInf) break;
      for (int v = 0; v < n; ++v) {
        if (dist[v] < kInf) pot[v] += dist[v];
      }
      std::int64_t push = want - sent;
      for (int v = t; v != s; v = to_[pred[v] ^ 1]) {
        push = std::min(push, cap_[pred[v]]);
      }
      for (int v = t; v != s; v = to_[pred[v] ^ 1]) {
        cap_[pred[v]] -= push;
        cap_[pred[v] ^ 1] += push;
      }
      sent += push;
    }
    return sent;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<std::int64_t> cap_;
  std::vector<std::int64_t> cost_;
};

}  // namespace

void BoundedDigraph::validate() const {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    if (a.tail < 0 || a.tail >= vertex_count || a.head < 0 ||
        a.head >= vertex_count) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "arc " + std::to_string(i) + " endpoint out of range");
    }
    if (a.lower < 0 || a.lower > a.upper) {
      throw Error(ErrorKind::kBoundViolated,
                  "arc " + std::to_string(i) + " has bad bounds");
    }
  }
}

bool is_circulation(const BoundedDigraph& d, const Circulation& x) {
  if (x.flow.size() != d.arcs.size()) return false;
  std::vector<std::int64_t> net(d.vertex_count, 0);
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const auto& a = d.arcs[i];
    if (x.flow[i] < a.lower || x.flow[i] > a.upper) return false;
    net[a.tail] += x.flow[i];
    net[a.head] -= x.flow[i];
  }
  return std::all_of(net.begin(), net.end(),
                     [](std::int64_t v) { return v == 0; });
}

std::int64_t circulation_cost(const BoundedDigraph& d, const Circulation& x) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    total += d.arcs[i].cost * x.flow[i];
  }
  return total;
}

bool is_hoffman_certificate(const BoundedDigraph& d, const VertexSet& u) {
  std::int64_t lower_in = 0, upper_out = 0;
  for (const auto& a : d.arcs) {
    const bool t = u.contains(a.tail), h = u.contains(a.head);
    if (!t && h) lower_in += a.lower;
    if (t && !h) upper_out += a.upper;
  }
  return lower_in > upper_out;
}

FeasibilityResult feasible_circulation(const BoundedDigraph& d) {
  d.validate();
  const int n = d.vertex_count;
  const int s = n, t = n + 1;
  MaxFlow<std::int64_t> mf(n + 2);
  std::vector<std::int64_t> imbalance(n, 0);
  std::vector<int> ids(d.arcs.size());
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const auto& a = d.arcs[i];
    ids[i] = mf.add_edge(a.tail, a.head, a.upper - a.lower);
    imbalance[a.head] += a.lower;
    imbalance[a.tail] -= a.lower;
  }
  std::int64_t demand = 0;
  for (int v = 0; v < n; ++v) {
    if (imbalance[v] > 0) {
      mf.add_edge(s, v, imbalance[v]);
      demand += imbalance[v];
    } else if (imbalance[v] < 0) {
      mf.add_edge(v, t, -imbalance[v]);
    }
  }
  if (mf.run(s, t) == demand) {
    Circulation c;
    c.flow.resize(d.arcs.size());
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
      c.flow[i] = d.arcs[i].lower + mf.flow(ids[i]);
    }
    return c;
  }
  const auto side = mf.source_side(s);
  VertexSet u(n);
  for (int v = 0; v < n; ++v) {
    if (side[v]) u.insert(v);
  }
  return u;
}

Circulation min_cost_circulation(const BoundedDigraph& d) {
  d.validate();
  check_overflow(d);
  const int n = d.vertex_count;
  const int s = n, t = n + 1;
  CostFlowNetwork net(n + 2);
  // base[i] is the flow fixed on arc i before augmentation; saturated
  // negative arcs are modelled by a reversed residual arc.
  std::vector<std::int64_t> base(d.arcs.size());
  std::vector<int> ids(d.arcs.size());
  std::vector<bool> flipped(d.arcs.size(), false);
  std::vector<std::int64_t> supply(n, 0);
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const auto& a = d.arcs[i];
    const std::int64_t cap = a.upper - a.lower;
    if (a.cost < 0) {
      flipped[i] = true;
      base[i] = a.upper;
      ids[i] = net.add_edge(a.head, a.tail, cap, -a.cost);
    } else {
      base[i] = a.lower;
      ids[i] = net.add_edge(a.tail, a.head, cap, a.cost);
    }
    supply[a.head] += base[i];
    supply[a.tail] -= base[i];
  }
  std::int64_t demand = 0;
  for (int v = 0; v < n; ++v) {
    if (supply[v] > 0) {
      net.add_edge(s, v, supply[v], 0);
      demand += supply[v];
    } else if (supply[v] < 0) {
      net.add_edge(v, t, -supply[v], 0);
    }
  }
  if (net.run(s, t, demand) != demand) {
    throw Error(ErrorKind::kInfeasible, "no circulation meets the bounds");
  }
  Circulation c;
  c.flow.resize(d.arcs.size());
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const std::int64_t cap = d.arcs[i].upper - d.arcs[i].lower;
    const std::int64_t moved = cap - net.residual(ids[i]);
    c.flow[i] = flipped[i] ? base[i] - moved : base[i] + moved;
  }
  return c;
}

std::vector<ResidualArc> residual_arcs(const BoundedDigraph& d,
                                       const Circulation& x) {
  std::vector<ResidualArc> out;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const auto& a = d.arcs[i];
    if (x.flow[i] < a.upper) {
      out.push_back({{a.tail, a.head, a.cost}, static_cast<int>(i), true});
    }
    if (x.flow[i] > a.lower) {
      out.push_back({{a.head, a.tail, -a.cost}, static_cast<int>(i), false});
    }
  }
  return out;
}

Circulation min_cost_circulation_cycle_canceling(const BoundedDigraph& d) {
  d.validate();
  check_overflow(d);
  auto start = feasible_circulation(d);
  if (!std::holds_alternative<Circulation>(start)) {
    throw Error(ErrorKind::kInfeasible, "no circulation meets the bounds");
  }
  Circulation x = std::get<Circulation>(std::move(start));
  while (true) {
    const auto res = residual_arcs(d, x);
    std::vector<WeightedArc> arcs;
    arcs.reserve(res.size());
    for (const auto& r : res) arcs.push_back(r.arc);
    const auto cycle = find_negative_cycle(d.vertex_count, arcs);
    if (!cycle) return x;
    std::int64_t push = kInf;
    for (int id : *cycle) {
      const auto& r = res[id];
      const auto& a = d.arcs[r.source_arc];
      push = std::min(push, r.forward ? a.upper - x.flow[r.source_arc]
                                      : x.flow[r.source_arc] - a.lower);
    }
    for (int id : *cycle) {
      const auto& r = res[id];
      x.flow[r.source_arc] += r.forward ? push : -push;
    }
  }
}

std::optional<std::vector<int>> find_negative_cycle(
    int vertex_count, const std::vector<WeightedArc>& arcs) {
  const int n = vertex_count;
  if (n == 0) return std::nullopt;
  std::vector<std::int64_t> dist(n, 0);
  std::vector<int> pred(n, -1);
  int touched = -1;
  for (int pass = 0; pass < n; ++pass) {
    touched = -1;
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
      const auto& a = arcs[i];
      if (dist[a.tail] + a.weight < dist[a.head]) {
        dist[a.head] = dist[a.tail] + a.weight;
        pred[a.head] = i;
        touched = a.head;
      }
    }
    if (touched < 0) return std::nullopt;
  }
  // Walking back n steps lands on the predecessor cycle.
  int v = touched;
  for (int i = 0; i < n; ++i) v = arcs[pred[v]].tail;
  std::vector<int> cycle;
  int u = v;
  do {
    cycle.push_back(pred[u]);
    u = arcs[pred[u]].tail;
  } while (u != v);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace nzflow
