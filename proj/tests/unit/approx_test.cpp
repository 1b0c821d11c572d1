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
#include "nzflow/approx.hpp"
#include "nzflow/gadgets.hpp"
#include "nzflow/nz6.hpp"
#include "nzflow/verify.hpp"

using namespace nzflow;

TEST_CASE("flows from cut-balanced orientations") {
  const Graph g = complete_graph(4);
  // K4 has no nowhere-zero 3-flow, so no orientation is 3-cut-balanced.
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    Orientation o = Orientation::all_forward(6);
    for (int e = 0; e < 6; ++e) {
      if ((mask >> e) & 1u) o.dir[e] = Dir::kBackward;
    }
    try {
      flow_from_cut_balanced(g, o, 3);
      FAIL("K4 has no 3-flow");
    } catch (const NotCutBalancedError& e) {
      CHECK(recheck_cut_violation(g, PartialOrientation::from(o), 3,
                                  Violation{ViolationKind::kCutUnbalanced, -1, -1,
                                            e.witness(), {}}));
    }
    if (oracle::cut_balanced(g, o, 4)) {
      const Flow f = flow_from_cut_balanced(g, o, 4);
      CHECK_FALSE(verify_nowhere_zero_k_flow(g, f, KBound::finite(4)));
      CHECK(support_orientation(f).orientation.to_orientation().dir == o.dir);
    }
  }
}

TEST_CASE("extension of partial orientations") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = random_two_edge_connected(n, n + static_cast<int>(rng() % 5), rng());
    const int k = 2 + static_cast<int>(rng() % 5);
    PartialOrientation e1 = PartialOrientation::undecided(g.edge_count());
    for (auto& d : e1.dir) {
      if (rng() % 2) d = rng() % 2 ? Dir::kForward : Dir::kBackward;
    }
    const auto r = extend_partial_cut_balanced(g, e1, k);
    if (const auto* f = std::get_if<PartialOrientation>(&r)) {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e1.dir[e]) CHECK(f->dir[e] == e1.dir[e]);
      }
      CHECK(oracle::partial_cut_balanced(g, *f, k));
      const Flow x = flow_from_partial_cut_balanced(g, *f, k);
      CHECK(conserves(g, x));
    } else {
      const VertexSet& u = std::get<VertexSet>(r);
      CHECK(recheck_cut_violation(g, e1, k,
                                  Violation{ViolationKind::kCutUnbalanced, -1, -1, u, {}}));
    }
  }
}

TEST_CASE("bicriteria flow meets its certificate") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const Graph g = random_two_edge_connected(n, n + 3, seed);
    const CostFunction c = random_costs(g.edge_count(), 12, false, 10, seed + 7);
    for (KBound k : {KBound::finite(3), KBound::finite(6), KBound::unbounded()}) {
      WnzfResult r;
      try {
        r = wnzf_bicriteria(g, c, k);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kInfeasible);
        continue;
      }
      CHECK(r.certificate.output_cost == flow_cost(r.flow, c));
      CHECK(r.certificate.output_cost <= r.certificate.ratio * r.certificate.lp_value);
      CHECK_FALSE(verify_nowhere_zero_k_flow(g, r.flow, KBound::finite(r.certificate.flow_bound)));
    }
  }
}

TEST_CASE("bicriteria orientation meets its certificate") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const Graph g = random_two_edge_connected(n, n + 4, seed);
    const CostFunction c = random_costs(g.edge_count(), 12, false, 0, seed + 9);
    for (int k : {3, 6}) {
      const WcboResult r = wcbo_bicriteria(g, c, k);
      CHECK(r.certificate.output_cost == orientation_cost(r.orientation, c));
      CHECK(r.certificate.output_cost <= r.certificate.ratio * r.certificate.lp_value);
      CHECK(oracle::cut_balanced(g, r.orientation, 6 * k));
    }
  }
}

TEST_CASE("local search engines reach local optima") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const Graph g = random_two_edge_connected(n, n + 3, seed);
    const CostFunction c = random_costs(g.edge_count(), 9, true, 0, seed + 3);
    const SwnzfResult a = swnzf_local_search(g, c);
    const SwnzfResult b = swnzf_cycle_canceling(g, c);
    for (const auto* r : {&a, &b}) {
      CHECK_FALSE(verify_locally_optimal(g, c, r->flow));
      CHECK(r->certificate.output_cost == flow_cost(r->flow, c));
      CHECK(r->certificate.output_cost <= 3 * r->certificate.lp_value);
    }
  }
}

TEST_CASE("local search needs symmetric costs") {
  const Graph g = gen_cycle(3);
  try {
    swnzf_local_search(g, CostFunction({1, 1, 1}, {2, 1, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotSymmetric);
  }
}
