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

#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "nzflow/circulation.hpp"
#include "nzflow/max_flow.hpp"

using namespace nzflow;

namespace {

BoundedDigraph random_digraph(std::mt19937_64& rng, int max_arcs, int cap) {
  BoundedDigraph d;
  d.vertex_count = 2 + static_cast<int>(rng() % 4);
  const int arcs = 1 + static_cast<int>(rng() % max_arcs);
  for (int i = 0; i < arcs; ++i) {
    int t = static_cast<int>(rng() % d.vertex_count);
    int h = static_cast<int>(rng() % d.vertex_count);
    if (t == h) h = (h + 1) % d.vertex_count;
    const std::int64_t upper = static_cast<std::int64_t>(rng() % (cap + 1));
    const std::int64_t lower = static_cast<std::int64_t>(rng() % (upper + 1)) *
                               (rng() % 3 == 0 ? 1 : 0);
    const std::int64_t cost = static_cast<std::int64_t>(rng() % 11) - 5;
    d.add_arc(t, h, lower, upper, cost);
  }
  return d;
}

}  // namespace

TEST_CASE("max flow on a small network") {
  MaxFlow<std::int64_t> mf(4);
  mf.add_edge(0, 1, 3);
  mf.add_edge(0, 2, 2);
  const int mid = mf.add_edge(1, 2, 5);
  mf.add_edge(1, 3, 2);
  mf.add_edge(2, 3, 3);
  CHECK(mf.run(0, 3) == 5);
  CHECK(mf.flow(mid) == 1);
  const auto side = mf.source_side(0);
  CHECK(side[0]);
  CHECK_FALSE(side[3]);
}

TEST_CASE("feasibility matches enumeration and certificates are valid") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const BoundedDigraph d = random_digraph(rng, 7, 3);
    const auto naive = oracle::min_cost_circulation_naive(d);
    const auto result = feasible_circulation(d);
    if (const auto* x = std::get_if<Circulation>(&result)) {
      CHECK(naive.has_value());
      CHECK(is_circulation(d, *x));
    } else {
      CHECK_FALSE(naive.has_value());
      CHECK(is_hoffman_certificate(d, std::get<VertexSet>(result)));
    }
  }
}

TEST_CASE("min-cost engines match enumeration") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 400; ++trial) {
    const BoundedDigraph d = random_digraph(rng, 7, 3);
    const auto naive = oracle::min_cost_circulation_naive(d);
    if (!naive) {
      CHECK_THROWS_AS(min_cost_circulation(d), Error);
      CHECK_THROWS_AS(min_cost_circulation_cycle_canceling(d), Error);
      continue;
    }
    const Circulation a = min_cost_circulation(d);
    const Circulation b = min_cost_circulation_cycle_canceling(d);
    CHECK(is_circulation(d, a));
    CHECK(is_circulation(d, b));
    CHECK(circulation_cost(d, a) == *naive);
    CHECK(circulation_cost(d, b) == *naive);
    std::vector<WeightedArc> residual;
    for (const auto& r : residual_arcs(d, a)) residual.push_back(r.arc);
    CHECK_FALSE(find_negative_cycle(d.vertex_count, residual).has_value());
  }
}

TEST_CASE("negative cycle is returned in traversal order") {
  const std::vector<WeightedArc> arcs{
      {0, 1, 1}, {1, 2, -3}, {2, 0, 1}, {2, 3, -10}};
  const auto cycle = find_negative_cycle(4, arcs);
  REQUIRE(cycle.has_value());
  REQUIRE(cycle->size() == 3);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < cycle->size(); ++i) {
    const auto& a = arcs[(*cycle)[i]];
    const auto& b = arcs[(*cycle)[(i + 1) % cycle->size()]];
    CHECK(a.head == b.tail);
    total += a.weight;
  }
  CHECK(total == -1);
  CHECK_FALSE(find_negative_cycle(3, {{0, 1, 1}, {1, 0, -1}}).has_value());
}

TEST_CASE("malformed digraphs are rejected") {
  BoundedDigraph d;
  d.vertex_count = 2;
  d.add_arc(0, 1, 2, 1);
  CHECK_THROWS_AS(feasible_circulation(d), Error);
  BoundedDigraph e;
  e.vertex_count = 2;
  e.add_arc(0, 5, 0, 1);
  CHECK_THROWS_AS(min_cost_circulation(e), Error);
}

TEST_CASE("overflow guard") {
  BoundedDigraph d;
  d.vertex_count = 2;
  d.add_arc(0, 1, 0, std::int64_t{1} << 40, -(std::int64_t{1} << 30));
  d.add_arc(1, 0, 0, std::int64_t{1} << 40, 0);
  try {
    min_cost_circulation(d);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kOverflowRisk);
  }
}
