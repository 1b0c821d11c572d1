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

#include <cstdint>
#include <vector>

namespace nzflow {

// A pairwise term of a cut function over vertex masks: contributes w_out when
// tail is inside and head outside, w_in when head is inside and tail outside.
struct CutTerm {
  int tail = 0;
  int head = 0;
  std::int64_t w_out = 0;
  std::int64_t w_in = 0;
};

struct CutMinimum {
  std::int64_t value = 0;
  std::uint64_t mask = 0;  // smallest mask attaining value
  friend bool operator==(const CutMinimum&, const CutMinimum&) = default;
};

inline constexpr int kMaxCutKernelVertices = 30;

std::int64_t cut_value(const std::vector<CutTerm>& terms, std::uint64_t mask);

// Minimum of cut_value over nonempty proper subsets of [0, n). Requires
// 2 <= n <= kMaxCutKernelVertices.
CutMinimum min_cut_serial(int n, const std::vector<CutTerm>& terms);
CutMinimum min_cut_parallel(int n, const std::vector<CutTerm>& terms);

// Dispatches to the parallel kernel above a size threshold.
CutMinimum min_cut_enumerate(int n, const std::vector<CutTerm>& terms);

}  // namespace nzflow
