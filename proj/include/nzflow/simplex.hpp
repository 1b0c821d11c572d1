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

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace nzflow {

// Arbitrary-precision rational in canonical form.
using Rational = mpq_class;

std::string to_string(const Rational& q);  // "num/den", always with "/"
Rational parse_rational(const std::string& text);

enum class Sense { kLe, kEq, kGe };

struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, Rational>> terms;
    Sense sense = Sense::kEq;
    Rational rhs;
  };
  int variable_count = 0;
  std::vector<Row> rows;
  std::vector<Rational> objective;  // minimized; x >= 0 implicit
  // Optional tie-break, minimized over the optimal face of `objective`.
  std::vector<Rational> secondary;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;  // a basic solution when optimal
  Rational objective;
  long pivots = 0;
};

// Two-phase primal simplex over exact rationals with Bland's rule.
LpResult solve_exact(const LinearProgram& lp);

}  // namespace nzflow
