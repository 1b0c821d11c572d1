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

#include "nzflow/lp.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nzflow/cut_kernel.hpp"
#include "nzflow/max_flow.hpp"

namespace nzflow {
namespace {

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

// Column index per dense arc index, -1 for forbidden arcs.
std::vector<int> arc_columns(const CostFunction& c, int m, int* count) {
  std::vector<int> col(2 * m, -1);
  int next = 0;
  for (int i = 0; i < 2 * m; ++i) {
    if (!c.forbidden(ArcRef::from_index(i))) col[i] = next++;
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (col[2 * e] < 0 && col[2 * e + 1] < 0) {
      throw Error(ErrorKind::kInfeasible,
                  "both arcs of edge " + std::to_string(e) + " are forbidden");
    }
  }
  *count = next;
  return col;
}

LpSolution unpack(const std::vector<int>& col, const LpResult& r, int m) {
  LpSolution s;
  s.forward.resize(m);
  s.backward.resize(m);
  for (EdgeId e = 0; e < m; ++e) {
    if (col[2 * e] >= 0) s.forward[e] = r.x[col[2 * e]];
    if (col[2 * e + 1] >= 0) s.backward[e] = r.x[col[2 * e + 1]];
  }
  s.objective = r.objective;
  s.extreme = true;
  return s;
}

void check_shape(const Graph& g, const CostFunction& c) {
  if (c.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::kGraphMismatch, "cost length differs from m");
  }
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace

LpSolution solve_wnzf_lp(const Graph& g, const CostFunction& c, KBound k) {
  check_shape(g, c);
  const int n = g.vertex_count(), m = g.edge_count();
  LinearProgram lp;
  const auto col = arc_columns(c, m, &lp.variable_count);
  lp.objective.resize(lp.variable_count);
  lp.secondary.assign(lp.variable_count, Rational(1));
  std::vector<LinearProgram::Row> conservation(n);
  for (EdgeId e = 0; e < m; ++e) {
    LinearProgram::Row both;
    for (Dir d : {Dir::kForward, Dir::kBackward}) {
      const ArcRef a{e, d};
      const int j = col[a.index()];
      if (j < 0) continue;
      lp.objective[j] = q(*c.at(a));
      conservation[g.tail(a)].terms.push_back({j, Rational(1)});
      conservation[g.head(a)].terms.push_back({j, Rational(-1)});
      both.terms.push_back({j, Rational(1)});
    }
    both.sense = Sense::kGe;
    both.rhs = 1;
    lp.rows.push_back(both);
    if (!k.is_unbounded()) {
      both.sense = Sense::kLe;
      both.rhs = k.value() - 1;
      lp.rows.push_back(both);
    }
  }
  for (auto& row : conservation) {
    row.sense = Sense::kEq;
    row.rhs = 0;
    lp.rows.push_back(std::move(row));
  }
  const LpResult r = solve_exact(lp);
  if (r.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kInfeasible, "flow relaxation has no solution");
  }
  return unpack(col, r, m);
}

FlowLpClassification classify_flow_extreme_point(const Graph& g,
                                                 const LpSolution& z,
                                                 KBound k) {
  const int m = g.edge_count();
  if (z.edge_count() != m) {
    throw Error(ErrorKind::kGraphMismatch, "LP solution length differs");
  }
  const Rational half(1, 2);
  FlowLpClassification out;
  out.integral_flow = Flow::zero(m);
  auto violation = [](EdgeId e, const std::string& what) {
    return Error(ErrorKind::kStructureViolation,
                 "edge " + std::to_string(e) + ": " + what);
  };
  for (EdgeId e = 0; e < m; ++e) {
    const Rational& a = z.forward[e];
    const Rational& b = z.backward[e];
    if (a < 0 || b < 0) throw violation(e, "negative coordinate");
    if (!is_integer(2 * a) || !is_integer(2 * b)) {
      throw violation(e, "coordinate not half-integral");
    }
    if (a > 0 && b > 0 && a + b != 1) {
      throw violation(e, "both arcs used with sum != 1");
    }
    if (a == half && b == half) {
      out.fractional_edges.push_back(e);
      continue;
    }
    if (!is_integer(a) || !is_integer(b)) {
      throw violation(e, "fractional arc without a 1/2 partner");
    }
    const Rational v = a - b;
    out.integral_flow.value[e] = v.get_num().get_si();
    if (v == 0) throw violation(e, "edge carries nothing");
  }
  if (!conserves(g, out.integral_flow)) {
    throw Error(ErrorKind::kStructureViolation,
                "integral part does not conserve");
  }
  if (!k.is_unbounded() && out.integral_flow.max_abs() > k.value() - 1) {
    throw Error(ErrorKind::kStructureViolation,
                "integral part exceeds k - 1");
  }
  return out;
}

Rational cut_violation(const Graph& g, const LpSolution& y, int k,
                       const VertexSet& u) {
  Rational leaving;
  long crossing = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool t = u.contains(g.edge(e).tail), h = u.contains(g.edge(e).head);
    if (t == h) continue;
    ++crossing;
    leaving += t ? y.forward[e] : y.backward[e];
  }
  return k * leaving - Rational(k - 1) * crossing;
}

std::optional<VertexSet> separate_cut_constraint(const Graph& g,
                                                 const LpSolution& y, int k) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  // Per-edge cost of a crossing, rewritten so that every pairwise term is
  // nonnegative: negative direction weights move into unary terms.
  std::vector<Rational> unary(n);
  struct Pair {
    int from, to;
    Rational w;
  };
  std::vector<Pair> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [t, h] = g.edge(e);
    const Rational a = Rational(k - 1) - k * y.forward[e];
    const Rational b = Rational(k - 1) - k * y.backward[e];
    if (a < 0) {
      unary[t] += a;
      unary[h] -= a;
      pairs.push_back({h, t, a + b});
    } else if (b < 0) {
      unary[h] += b;
      unary[t] -= b;
      pairs.push_back({t, h, a + b});
    } else {
      pairs.push_back({t, h, a});
      pairs.push_back({h, t, b});
    }
  }
  Rational big(1), constant;
  for (const auto& p : pairs) big += abs(p.w);
  for (const auto& u : unary) big += abs(u);
  for (const auto& u : unary) {
    if (u < 0) constant += u;
  }
  std::optional<VertexSet> best;
  Rational best_value;
  const int s = n, t = n + 1;
  for (int inside_zero = 0; inside_zero < 2; ++inside_zero) {
    for (Vertex other = 1; other < n; ++other) {
      MaxFlow<Rational> mf(n + 2);
      for (Vertex v = 0; v < n; ++v) {
        if (unary[v] > 0) mf.add_edge(v, t, unary[v]);
        if (unary[v] < 0) mf.add_edge(s, v, -unary[v]);
      }
      for (const auto& p : pairs) {
        if (p.w > 0) mf.add_edge(p.from, p.to, p.w);
      }
      const Vertex in = inside_zero ? 0 : other;
      const Vertex out = inside_zero ? other : 0;
      mf.add_edge(s, in, big);
      mf.add_edge(out, t, big);
      const Rational value = mf.run(s, t) + constant;
      if (!best || value < best_value) {
        const auto side = mf.source_side(s);
        VertexSet u(n);
        for (Vertex v = 0; v < n; ++v) {
          if (side[v]) u.insert(v);
        }
        best = u;
        best_value = value;
      }
    }
  }
  if (!best || best_value >= 0) return std::nullopt;
  if (cut_violation(g, y, k, *best) <= 0) {
    throw Error(ErrorKind::kStructureViolation,
                "separation produced a cut that does not re-check");
  }
  return best;
}

std::optional<VertexSet> separate_cut_constraint_brute(const Graph& g,
                                                       const LpSolution& y,
                                                       int k) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  std::vector<std::pair<Rational, Rational>> w;
  mpz_class scale = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Rational a = Rational(k - 1) - k * y.forward[e];
    const Rational b = Rational(k - 1) - k * y.backward[e];
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a.get_den().get_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b.get_den().get_mpz_t());
    w.push_back({a, b});
  }
  std::vector<CutTerm> terms;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Rational a = w[e].first * scale, b = w[e].second * scale;
    if (!a.get_num().fits_slong_p() || !b.get_num().fits_slong_p()) {
      throw Error(ErrorKind::kOverflowRisk, "scaled cut weights overflow");
    }
    terms.push_back({g.edge(e).tail, g.edge(e).head, a.get_num().get_si(),
                     b.get_num().get_si()});
  }
  const CutMinimum best = min_cut_enumerate(n, terms);
  if (best.value >= 0) return std::nullopt;
  return VertexSet::from_mask(n, best.mask);
}

LpSolution solve_wcbo_lp(const Graph& g, const CostFunction& c, int k,
                         CutPlaneStats* stats) {
  check_shape(g, c);
  if (k < 2) throw Error(ErrorKind::kKTooSmall, "k must be at least 2");
  const int n = g.vertex_count(), m = g.edge_count();
  int columns = 0;
  const auto col = arc_columns(c, m, &columns);
  std::set<std::vector<bool>> seen;
  std::vector<VertexSet> cuts;
  auto add_cut = [&](const VertexSet& u) {
    std::vector<bool> key(n);
    for (Vertex v = 0; v < n; ++v) key[v] = u.contains(v);
    if (seen.insert(key).second) cuts.push_back(u);
  };
  if (n >= 2) {
    for (Vertex v = 0; v < n; ++v) {
      add_cut(VertexSet(n, {v}));
      add_cut(VertexSet(n, {v}).complement());
    }
  }
  CutPlaneStats local;
  while (true) {
    ++local.rounds;
    LinearProgram lp;
    lp.variable_count = columns;
    lp.objective.resize(columns);
    for (EdgeId e = 0; e < m; ++e) {
      LinearProgram::Row row;
      for (Dir d : {Dir::kForward, Dir::kBackward}) {
        const ArcRef a{e, d};
        const int j = col[a.index()];
        if (j < 0) continue;
        lp.objective[j] = q(*c.at(a));
        row.terms.push_back({j, Rational(1)});
      }
      row.sense = Sense::kEq;
      row.rhs = 1;
      lp.rows.push_back(std::move(row));
    }
    for (const auto& u : cuts) {
      LinearProgram::Row row;
      long crossing = 0;
      for (EdgeId e = 0; e < m; ++e) {
        const bool t = u.contains(g.edge(e).tail);
        const bool h = u.contains(g.edge(e).head);
        if (t == h) continue;
        ++crossing;
        const int j = col[ArcRef{e, t ? Dir::kForward : Dir::kBackward}.index()];
        if (j >= 0) row.terms.push_back({j, Rational(k)});
      }
      row.sense = Sense::kLe;
      row.rhs = Rational(k - 1) * crossing;
      lp.rows.push_back(std::move(row));
    }
    const LpResult r = solve_exact(lp);
    local.pivots += r.pivots;
    if (r.status != LpStatus::kOptimal) {
      throw Error(ErrorKind::kInfeasible,
                  "orientation relaxation has no solution");
    }
    LpSolution y = unpack(col, r, m);
    const auto cut = separate_cut_constraint(g, y, k);
    if (!cut) {
      local.cuts = static_cast<int>(cuts.size());
      if (stats) *stats = local;
      return y;
    }
    const std::size_t before = cuts.size();
    add_cut(*cut);
    if (cuts.size() == before) {
      throw Error(ErrorKind::kStructureViolation,
                  "separation returned a cut already in the model");
    }
  }
}

}  // namespace nzflow
