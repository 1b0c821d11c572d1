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
#include "nzflow/gadgets.hpp"
#include "nzflow/nz6.hpp"
#include "nzflow/verify.hpp"

using namespace nzflow;

TEST_CASE("flow verifier reports the first failing check") {
  const Graph g(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(verify_nowhere_zero_k_flow(g, Flow{{2, 2, 2}}, KBound::finite(3)));
  auto v = verify_nowhere_zero_k_flow(g, Flow{{2, 2, 2}}, KBound::finite(2));
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kRangeExceeded);
  v = verify_nowhere_zero_k_flow(g, Flow{{0, 0, 0}}, KBound::finite(2));
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kZeroEdge);
  v = verify_nowhere_zero_k_flow(g, Flow{{1, 2, 1}}, KBound::unbounded());
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kConservation);
  CHECK(recheck_flow_violation(g, Flow{{1, 2, 1}}, KBound::unbounded(), *v));
}

TEST_CASE("cut verifiers agree with enumeration") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_two_edge_connected(n, n + static_cast<int>(rng() % 5), rng());
    const int k = 2 + static_cast<int>(rng() % 5);
    PartialOrientation po = PartialOrientation::undecided(g.edge_count());
    for (auto& d : po.dir) {
      const auto r = rng() % 3;
      if (r == 0) d = Dir::kForward;
      if (r == 1) d = Dir::kBackward;
    }
    const bool partial_ok = oracle::partial_cut_balanced(g, po, k);
    for (CutMethod method : {CutMethod::kHoffman, CutMethod::kBrute}) {
      const auto v = verify_partial_cut_balanced(g, po, k, method);
      CHECK(v.has_value() != partial_ok);
      if (v) CHECK(recheck_cut_violation(g, po, k, *v));
    }
    for (auto& d : po.dir) {
      if (!d) d = Dir::kForward;
    }
    const Orientation o = po.to_orientation();
    const bool ok = oracle::cut_balanced(g, o, k);
    for (CutMethod method : {CutMethod::kHoffman, CutMethod::kBrute}) {
      const auto v = verify_cut_balanced(g, o, k, method);
      CHECK(v.has_value() != ok);
      if (v) CHECK(recheck_cut_violation(g, po, k, *v));
    }
  }
}

TEST_CASE("local optimality on a cycle") {
  const Graph g = gen_cycle(4);
  const CostFunction c = CostFunction::uniform(4, 1);
  CHECK_FALSE(verify_locally_optimal(g, c, Flow{{3, 3, 3, 3}}));
  CHECK_FALSE(verify_locally_optimal(g, c, Flow{{1, 1, 1, 1}}));
  const Flow f{{5, 5, 5, 5}};
  const auto v = verify_locally_optimal(g, c, f);
  REQUIRE(v);
  CHECK(v->kind == ViolationKind::kNegativeCycle);
  CHECK(v->cycle.size() == 4);
  CHECK(recheck_cycle_violation(g, c, f, *v));
}

TEST_CASE("local optimality preconditions") {
  const Graph g = gen_cycle(3);
  CostFunction asym({1, 1, 1}, {1, 2, 1});
  CHECK_THROWS_AS(verify_locally_optimal(g, asym, Flow{{1, 1, 1}}), Error);
  try {
    verify_locally_optimal(g, CostFunction::uniform(3, 1), Flow{{6, 6, 6}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotNz6Flow);
  }
}

TEST_CASE("length mismatch is an error") {
  CHECK_THROWS_AS(verify_nowhere_zero_k_flow(gen_cycle(3), Flow{{1, 1}}, KBound::finite(3)),
                  Error);
}
