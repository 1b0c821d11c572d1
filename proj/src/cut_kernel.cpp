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

#include "nzflow/cut_kernel.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "nzflow/error.hpp"

namespace nzflow {
namespace {

std::int64_t term_value(const CutTerm& t, std::uint64_t mask) {
  const bool in_t = (mask >> t.tail) & 1U;
  const bool in_h = (mask >> t.head) & 1U;
  if (in_t && !in_h) return t.w_out;
  if (!in_t && in_h) return t.w_in;
  return 0;
}

void check_size(int n, const std::vector<CutTerm>& terms) {
  if (n < 2 || n > kMaxCutKernelVertices) {
    throw Error(ErrorKind::kBudgetExceeded,
                "cut enumeration needs 2 <= n <= " +
                    std::to_string(kMaxCutKernelVertices));
  }
  for (const auto& t : terms) {
    if (t.tail < 0 || t.tail >= n || t.head < 0 || t.head >= n) {
      throw Error(ErrorKind::kIndexOutOfRange, "cut term endpoint");
    }
  }
}

std::vector<std::vector<int>> incidence(int n,
                                        const std::vector<CutTerm>& terms) {
  std::vector<std::vector<int>> inc(n);
  for (int i = 0; i < static_cast<int>(terms.size()); ++i) {
    inc[terms[i].tail].push_back(i);
    if (terms[i].head != terms[i].tail) inc[terms[i].head].push_back(i);
  }
  return inc;
}

constexpr std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

// Scans Gray-code positions [lo, hi) and folds the best (value, mask) into
// `best`. Ties go to the numerically smallest mask.
void scan(const std::vector<CutTerm>& terms,
          const std::vector<std::vector<int>>& inc, std::uint64_t full,
          std::uint64_t lo, std::uint64_t hi, CutMinimum& best) {
  std::uint64_t mask = gray(lo);
  std::int64_t value = cut_value(terms, mask);
  for (std::uint64_t i = lo;;) {
    if (mask != 0 && mask != full &&
        (value < best.value || (value == best.value && mask < best.mask))) {
      best = {value, mask};
    }
    if (++i >= hi) break;
    const int v = std::countr_zero(i);
    const std::uint64_t next = mask ^ (std::uint64_t{1} << v);
    for (int id : inc[v]) {
      value += term_value(terms[id], next) - term_value(terms[id], mask);
    }
    mask = next;
  }
}

CutMinimum worst() {
  return {std::numeric_limits<std::int64_t>::max(),
          std::numeric_limits<std::uint64_t>::max()};
}

}  // namespace

std::int64_t cut_value(const std::vector<CutTerm>& terms, std::uint64_t mask) {
  std::int64_t total = 0;
  for (const auto& t : terms) total += term_value(t, mask);
  return total;
}

CutMinimum min_cut_serial(int n, const std::vector<CutTerm>& terms) {
  check_size(n, terms);
  const auto inc = incidence(n, terms);
  const std::uint64_t count = std::uint64_t{1} << n;
  CutMinimum best = worst();
  scan(terms, inc, count - 1, 0, count, best);
  return best;
}

CutMinimum min_cut_parallel(int n, const std::vector<CutTerm>& terms) {
  check_size(n, terms);
  const auto inc = incidence(n, terms);
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t chunk = std::max<std::uint64_t>(count / 256, 1024);
  const std::int64_t chunks =
      static_cast<std::int64_t>((count + chunk - 1) / chunk);
  CutMinimum best = worst();
#pragma omp parallel
  {
    CutMinimum local = worst();
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
      scan(terms, inc, count - 1, lo, std::min(count, lo + chunk), local);
    }
#pragma omp critical(nzflow_cut_min)
    if (local.value < best.value ||
        (local.value == best.value && local.mask < best.mask)) {
      best = local;
    }
  }
  return best;
}

CutMinimum min_cut_enumerate(int n, const std::vector<CutTerm>& terms) {
  return n >= 16 ? min_cut_parallel(n, terms) : min_cut_serial(n, terms);
}

}  // namespace nzflow
