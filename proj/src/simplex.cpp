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

#include "nzflow/simplex.hpp"

#include <algorithm>

#include "nzflow/error.hpp"

namespace nzflow {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? "1" : text.substr(slash + 1);
  mpz_class p, q;
  try {
    p = mpz_class(num);
    q = mpz_class(den);
  } catch (const std::exception&) {
    throw Error(ErrorKind::kParseError, "bad rational '" + text + "'");
  }
  if (q == 0) {
    throw Error(ErrorKind::kParseError, "zero denominator in '" + text + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp) : structural_(lp.variable_count) {
    int slack_count = 0, artificial_count = 0;
    for (const auto& row : lp.rows) {
      const bool flip = row.rhs < 0;
      Sense s = row.sense;
      if (flip && s != Sense::kEq) s = s == Sense::kLe ? Sense::kGe : Sense::kLe;
      if (s != Sense::kEq) ++slack_count;
      if (s != Sense::kLe) ++artificial_count;
    }
    first_artificial_ = structural_ + slack_count;
    cols_ = first_artificial_ + artificial_count;
    int next_slack = structural_, next_art = first_artificial_;
    for (const auto& row : lp.rows) {
      std::vector<Rational> t(cols_ + 1);
      const bool flip = row.rhs < 0;
      const int sgn = flip ? -1 : 1;
      for (const auto& [j, a] : row.terms) t[j] += sgn * a;
      t[cols_] = sgn * row.rhs;
      Sense s = row.sense;
      if (flip && s != Sense::kEq) s = s == Sense::kLe ? Sense::kGe : Sense::kLe;
      int basic = -1;
      if (s == Sense::kLe) {
        t[next_slack] = 1;
        basic = next_slack++;
      } else {
        if (s == Sense::kGe) t[next_slack++] = -1;
        t[next_art] = 1;
        basic = next_art++;
      }
      rows_.push_back(std::move(t));
      basis_.push_back(basic);
    }
  }

  bool artificial(int j) const { return j >= first_artificial_; }

  // Reduced-cost row for costs over structural columns.
  std::vector<Rational> reduced(const std::vector<Rational>& cost) const {
    std::vector<Rational> r(cols_ + 1);
    for (int j = 0; j < cols_; ++j) r[j] = column_cost(cost, j);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational cb = column_cost(cost, basis_[i]);
      if (cb == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (rows_[i][j] != 0) r[j] -= cb * rows_[i][j];
      }
    }
    return r;  // r[cols_] holds -objective
  }

  std::vector<Rational> phase_one_cost() const {
    std::vector<Rational> c(cols_);
    for (int j = first_artificial_; j < cols_; ++j) c[j] = 1;
    return c;
  }

  // Bland's rule; `allowed` filters entering columns. Returns false when the
  // objective is unbounded below.
  template <typename Allowed>
  bool optimize(std::vector<Rational>& red, Allowed allowed,
                std::vector<Rational>* also = nullptr) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (red[j] < 0 && allowed(j)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter, red, also);
    }
  }

  void pivot(int r, int j, std::vector<Rational>& red,
             std::vector<Rational>* also) {
    ++pivots_;
    auto& pr = rows_[r];
    const Rational p = pr[j];
    std::vector<int> nz;
    for (int c = 0; c <= cols_; ++c) {
      if (pr[c] != 0) {
        pr[c] /= p;
        nz.push_back(c);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[j] == 0) return;
      const Rational f = row[j];
      for (int c : nz) row[c] -= f * pr[c];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) != r) eliminate(rows_[i]);
    }
    eliminate(red);
    if (also) eliminate(*also);
    basis_[r] = j;
  }

  // After phase one: pivots zero-level artificials out of the basis and drops
  // rows that turn out to be redundant.
  void expel_artificials() {
    std::vector<Rational> dummy(cols_ + 1);
    for (std::size_t i = 0; i < rows_.size();) {
      if (!artificial(basis_[i])) {
        ++i;
        continue;
      }
      int j = 0;
      while (j < first_artificial_ && rows_[i][j] == 0) ++j;
      if (j < first_artificial_) {
        pivot(static_cast<int>(i), j, dummy, nullptr);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(structural_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rows_[i][cols_];
    }
    return x;
  }

  int cols() const { return cols_; }
  long pivots() const { return pivots_; }

 private:
  Rational column_cost(const std::vector<Rational>& cost, int j) const {
    return j < static_cast<int>(cost.size()) ? cost[j] : Rational(0);
  }

  int structural_;
  int first_artificial_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  long pivots_ = 0;
};

}  // namespace

LpResult solve_exact(const LinearProgram& lp) {
  for (const auto& row : lp.rows) {
    for (const auto& [j, a] : row.terms) {
      if (j < 0 || j >= lp.variable_count) {
        throw Error(ErrorKind::kIndexOutOfRange, "LP column out of range");
      }
    }
  }
  Tableau t(lp);
  LpResult result;
  auto phase1 = t.reduced(t.phase_one_cost());
  t.optimize(phase1, [](int) { return true; });
  if (phase1[t.cols()] != 0) {
    result.status = LpStatus::kInfeasible;
    result.pivots = t.pivots();
    return result;
  }
  t.expel_artificials();
  auto not_artificial = [&](int j) { return !t.artificial(j); };
  auto primary = t.reduced(lp.objective);
  if (!t.optimize(primary, not_artificial)) {
    result.status = LpStatus::kUnbounded;
    result.pivots = t.pivots();
    return result;
  }
  if (!lp.secondary.empty()) {
    auto secondary = t.reduced(lp.secondary);
    const auto frozen = primary;
    t.optimize(
        secondary,
        [&](int j) { return not_artificial(j) && frozen[j] == 0; },
        &primary);
  }
  result.status = LpStatus::kOptimal;
  result.x = t.solution();
  for (int j = 0; j < lp.variable_count; ++j) {
    if (j < static_cast<int>(lp.objective.size())) {
      result.objective += lp.objective[j] * result.x[j];
    }
  }
  result.pivots = t.pivots();
  return result;
}

}  // namespace nzflow
