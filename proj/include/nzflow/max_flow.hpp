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

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

namespace nzflow {

// Dinic max flow, templated on the capacity type so the LP separation can run
// it over exact rationals. T needs +, -, <, == and construction from 0.
template <typename T>
class MaxFlow {
 public:
  explicit MaxFlow(int n) : adj_(n), level_(n), it_(n) {}

  int add_edge(int from, int to, T cap) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, cap, T(0)});
    adj_[from].push_back(id);
    edges_.push_back({from, T(0), T(0)});
    adj_[to].push_back(id + 1);
    return id;
  }

  T run(int s, int t) {
    T total(0);
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (true) {
        T pushed = dfs(s, t, std::nullopt);
        if (pushed == T(0)) break;
        total += pushed;
      }
    }
    return total;
  }

  T flow(int edge_id) const { return edges_[edge_id].flow; }

  // Vertices reachable from s in the residual graph after run().
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int id : adj_[v]) {
        const Arc& a = edges_[id];
        if (!seen[a.to] && T(0) < residual(id)) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    T cap;
    T flow;
  };

  T residual(int id) const { return edges_[id].cap - edges_[id].flow; }

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int id : adj_[v]) {
        const int w = edges_[id].to;
        if (level_[w] < 0 && T(0) < residual(id)) {
          level_[w] = level_[v] + 1;
          q.push(w);
        }
      }
    }
    return level_[t] >= 0;
  }

  // limit == nullopt means unbounded.
  T dfs(int v, int t, std::optional<T> limit) {
    if (v == t) return limit ? *limit : T(0);
    for (int& i = it_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      const int id = adj_[v][i];
      const int w = edges_[id].to;
      if (level_[w] != level_[v] + 1 || !(T(0) < residual(id))) continue;
      T cap = residual(id);
      if (limit && *limit < cap) cap = *limit;
      T got = dfs(w, t, cap);
      if (T(0) < got) {
        edges_[id].flow += got;
        edges_[id ^ 1].flow -= got;
        return got;
      }
    }
    return T(0);
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> edges_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace nzflow
