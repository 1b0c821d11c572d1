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

#include <sstream>

#include "nzflow/gadgets.hpp"
#include "nzflow/io.hpp"

using namespace nzflow;

namespace {

template <typename T, typename Reader>
T parse(const std::string& text, Reader reader) {
  std::istringstream in(text);
  return reader(in);
}

ErrorKind parse_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInfeasible;
}

}  // namespace

TEST_CASE("graph files round-trip") {
  const Graph g = random_two_edge_connected(6, 9, 4);
  const CostFunction c = random_costs(9, 7, false, 30, 5);
  std::ostringstream out;
  write_graph(out, g, c);
  const CostedGraph back = parse<CostedGraph>(out.str(), [](auto& s) { return read_graph(s); });
  CHECK(back.graph.vertex_count() == 6);
  CHECK(std::equal(back.graph.edges().begin(), back.graph.edges().end(), g.edges().begin()));
  CHECK(back.cost == c);
}

TEST_CASE("graph parser accepts comments and rejects junk") {
  const auto ok = parse<CostedGraph>("# hi\nnzg 2 2\n0 1 3 X # tail\n\n1 0 0 0\n",
                                     [](auto& s) { return read_graph(s); });
  CHECK(ok.cost.forbidden({0, Dir::kBackward}));
  for (const char* bad : {"nzg 2 1\n0 0 1 1\n", "nzg 2 1\n0 2 1 1\n", "nzg 2 2\n0 1 1 1\n",
                          "nzg 2 1\n0 1 -1 1\n", "nzg 2 1\n0 1 1 1\n1 0 1 1\n", "zzz 1 1\n"}) {
    CHECK(parse_kind([&] {
            parse<CostedGraph>(bad, [](auto& s) { return read_graph(s); });
          }) == ErrorKind::kParseError);
  }
}

TEST_CASE("flow, orientation and LP files round-trip") {
  const Flow f{{3, -1, 0, 5}};
  std::ostringstream fo;
  write_flow(fo, f);
  CHECK(parse<Flow>(fo.str(), [](auto& s) { return read_flow(s); }) == f);

  PartialOrientation po = PartialOrientation::undecided(3);
  po.dir[0] = Dir::kBackward;
  po.dir[2] = Dir::kForward;
  std::ostringstream oo;
  write_orientation(oo, po);
  CHECK(parse<PartialOrientation>(oo.str(), [](auto& s) { return read_orientation(s); }).dir ==
        po.dir);

  LpSolution s;
  s.forward = {Rational(1, 2), 1};
  s.backward = {Rational(1, 2), 0};
  s.objective = Rational(7, 3);
  s.extreme = true;
  std::ostringstream lo;
  write_lp(lo, s);
  CHECK(parse<LpSolution>(lo.str(), [](auto& in) { return read_lp(in); }) == s);
}

TEST_CASE("flow parser rejects duplicates and gaps") {
  for (const char* bad : {"nzf 2\n0 1\n0 1\n", "nzf 2\n0 1\n", "nzf 1\n1 4\n", "nzf 1\n0 x\n"}) {
    CHECK(parse_kind([&] {
            parse<Flow>(bad, [](auto& s) { return read_flow(s); });
          }) == ErrorKind::kParseError);
  }
  CHECK(parse_kind([] {
          parse<PartialOrientation>("nzo 1\n0 >\n", [](auto& s) { return read_orientation(s); });
        }) == ErrorKind::kParseError);
}

TEST_CASE("certificate json round-trip") {
  ApproxCertificate c;
  c.problem = "wnzf";
  c.k = KBound::unbounded();
  c.lp_value = Rational(13, 2);
  c.output_cost = 30;
  c.ratio = 6;
  c.flow_bound = 42;
  const auto j = to_json(c);
  CHECK(j["lp_value"] == "13/2");
  const ApproxCertificate back = certificate_from_json(j);
  CHECK(back.k.is_unbounded());
  CHECK(back.lp_value == c.lp_value);
  CHECK(back.output_cost == 30);
  CHECK(back.ratio == 6);
  CHECK(back.flow_bound == 42);
}

TEST_CASE("violation json") {
  Violation v;
  v.kind = ViolationKind::kCutUnbalanced;
  v.cut = VertexSet(4, {1, 3});
  const auto j = to_json(v);
  CHECK(j["cut"] == nlohmann::json::array({1, 3}));
  v.kind = ViolationKind::kNegativeCycle;
  v.cycle = {{0, Dir::kForward}, {2, Dir::kBackward}};
  CHECK(to_json(v)["cycle"][1]["dir"] == "-");
}
