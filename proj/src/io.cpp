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

#include "nzflow/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

namespace nzflow {
namespace {

// Tokenized non-comment lines with their 1-based line numbers.
class LineReader {
 public:
  LineReader(std::istream& in, std::string format)
      : in_(in), format_(std::move(format)) {}

  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::vector<std::string> tokens{std::istream_iterator<std::string>(ls),
                                      std::istream_iterator<std::string>()};
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  std::vector<std::string> expect(std::size_t count) {
    auto tokens = next();
    if (!tokens) fail("unexpected end of input");
    if (tokens->size() != count) {
      fail("expected " + std::to_string(count) + " fields");
    }
    return *tokens;
  }

  int header(const std::string& magic) {
    const auto tokens = expect(magic == "nzg" ? 3 : 2);
    if (tokens[0] != magic) fail("expected header '" + magic + "'");
    return to_int(tokens.back());
  }

  void finish() {
    if (next()) fail("trailing content");
  }

  std::int64_t to_int64(const std::string& s) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    fail("bad integer '" + s + "'");
  }

  int to_int(const std::string& s) {
    const std::int64_t v = to_int64(s);
    if (v < 0 || v > (1 << 30)) fail("count out of range '" + s + "'");
    return static_cast<int>(v);
  }

  int edge_index(const std::string& s, int m, std::vector<bool>& seen) {
    const std::int64_t e = to_int64(s);
    if (e < 0 || e >= m) fail("edge index out of range");
    if (seen[e]) fail("duplicate edge index");
    seen[e] = true;
    return static_cast<int>(e);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParseError, format_ + " line " +
                                            std::to_string(line_no_) + ": " +
                                            what);
  }

 private:
  std::istream& in_;
  std::string format_;
  int line_no_ = 0;
};

void require_all(const LineReader& r, const std::vector<bool>& seen) {
  for (bool s : seen) {
    if (!s) r.fail("missing edge entries");
  }
}

}  // namespace

CostedGraph read_graph(std::istream& in) {
  LineReader r(in, "graph");
  const auto head = r.expect(3);
  if (head[0] != "nzg") r.fail("expected header 'nzg'");
  const int n = r.to_int(head[1]);
  const int m = r.to_int(head[2]);
  std::vector<Edge> edges;
  std::vector<CostFunction::Entry> fw, bw;
  auto cost = [&r](const std::string& s) -> CostFunction::Entry {
    if (s == "X") return CostFunction::kForbidden;
    const std::int64_t c = r.to_int64(s);
    if (c < 0) r.fail("negative cost");
    return c;
  };
  for (int e = 0; e < m; ++e) {
    const auto t = r.expect(4);
    const std::int64_t u = r.to_int64(t[0]);
    const std::int64_t v = r.to_int64(t[1]);
    if (u < 0 || u >= n || v < 0 || v >= n) r.fail("vertex out of range");
    if (u == v) r.fail("self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    fw.push_back(cost(t[2]));
    bw.push_back(cost(t[3]));
  }
  r.finish();
  return {Graph(n, std::move(edges)), CostFunction(std::move(fw), std::move(bw))};
}

void write_graph(std::ostream& out, const Graph& g, const CostFunction& c) {
  auto cost = [](const CostFunction::Entry& x) {
    return x ? std::to_string(*x) : std::string("X");
  };
  out << "nzg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.edge(e).tail << ' ' << g.edge(e).head << ' '
        << cost(c.at({e, Dir::kForward})) << ' '
        << cost(c.at({e, Dir::kBackward})) << '\n';
  }
}

Flow read_flow(std::istream& in) {
  LineReader r(in, "flow");
  const int m = r.header("nzf");
  Flow f = Flow::zero(m);
  std::vector<bool> seen(m, false);
  for (int i = 0; i < m; ++i) {
    const auto t = r.expect(2);
    f.value[r.edge_index(t[0], m, seen)] = r.to_int64(t[1]);
  }
  r.finish();
  require_all(r, seen);
  return f;
}

void write_flow(std::ostream& out, const Flow& f) {
  out << "nzf " << f.edge_count() << '\n';
  for (EdgeId e = 0; e < f.edge_count(); ++e) {
    out << e << ' ' << f.value[e] << '\n';
  }
}

PartialOrientation read_orientation(std::istream& in) {
  LineReader r(in, "orientation");
  const int m = r.header("nzo");
  PartialOrientation po = PartialOrientation::undecided(m);
  std::vector<bool> seen(m, false);
  for (int i = 0; i < m; ++i) {
    const auto t = r.expect(2);
    const int e = r.edge_index(t[0], m, seen);
    if (t[1] == "+") {
      po.dir[e] = Dir::kForward;
    } else if (t[1] == "-") {
      po.dir[e] = Dir::kBackward;
    } else if (t[1] != "?") {
      r.fail("direction must be +, - or ?");
    }
  }
  r.finish();
  require_all(r, seen);
  return po;
}

void write_orientation(std::ostream& out, const PartialOrientation& po) {
  out << "nzo " << po.dir.size() << '\n';
  for (std::size_t e = 0; e < po.dir.size(); ++e) {
    const char d = !po.dir[e] ? '?' : (*po.dir[e] == Dir::kForward ? '+' : '-');
    out << e << ' ' << d << '\n';
  }
}

LpSolution read_lp(std::istream& in) {
  LineReader r(in, "lp");
  const int m = r.header("nzl");
  LpSolution s;
  s.forward.assign(m, 0);
  s.backward.assign(m, 0);
  auto rational = [&r](const std::string& text) {
    try {
      return parse_rational(text);
    } catch (const Error&) {
      r.fail("bad rational '" + text + "'");
    }
  };
  const auto obj = r.expect(2);
  if (obj[0] != "objective") r.fail("expected objective line");
  s.objective = rational(obj[1]);
  std::vector<bool> seen_fw(m, false), seen_bw(m, false);
  for (int i = 0; i < 2 * m; ++i) {
    const auto t = r.expect(3);
    if (t[1] == "+") {
      s.forward[r.edge_index(t[0], m, seen_fw)] = rational(t[2]);
    } else if (t[1] == "-") {
      s.backward[r.edge_index(t[0], m, seen_bw)] = rational(t[2]);
    } else {
      r.fail("direction must be + or -");
    }
  }
  r.finish();
  require_all(r, seen_fw);
  require_all(r, seen_bw);
  s.extreme = true;
  return s;
}

void write_lp(std::ostream& out, const LpSolution& s) {
  out << "nzl " << s.edge_count() << '\n';
  out << "objective " << to_string(s.objective) << '\n';
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    out << e << " + " << to_string(s.forward[e]) << '\n';
    out << e << " - " << to_string(s.backward[e]) << '\n';
  }
}

nlohmann::json to_json(const ApproxCertificate& c) {
  return {{"problem", c.problem},
          {"k", c.k.to_string()},
          {"lp_value", to_string(c.lp_value)},
          {"output_cost", c.output_cost},
          {"ratio", to_string(c.ratio)},
          {"flow_bound", c.flow_bound}};
}

ApproxCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    ApproxCertificate c;
    c.problem = j.at("problem").get<std::string>();
    c.k = KBound::parse(j.at("k").get<std::string>());
    c.lp_value = parse_rational(j.at("lp_value").get<std::string>());
    c.output_cost = j.at("output_cost").get<std::int64_t>();
    c.ratio = parse_rational(j.at("ratio").get<std::string>());
    c.flow_bound = j.at("flow_bound").get<std::int64_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("certificate: ") + e.what());
  }
}

nlohmann::json to_json(const Violation& v) {
  nlohmann::json j{{"kind", std::string(to_string(v.kind))}};
  switch (v.kind) {
    case ViolationKind::kConservation:
      j["vertex"] = v.vertex;
      break;
    case ViolationKind::kZeroEdge:
    case ViolationKind::kRangeExceeded:
      j["edge"] = v.edge;
      break;
    case ViolationKind::kCutUnbalanced:
      j["cut"] = v.cut.members();
      break;
    case ViolationKind::kNegativeCycle: {
      auto arcs = nlohmann::json::array();
      for (const ArcRef& a : v.cycle) {
        arcs.push_back({{"edge", a.edge},
                        {"dir", a.dir == Dir::kForward ? "+" : "-"}});
      }
      j["cycle"] = std::move(arcs);
      break;
    }
  }
  return j;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace nzflow
