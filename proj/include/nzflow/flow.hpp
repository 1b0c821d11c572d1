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
#include <optional>
#include <vector>

#include "nzflow/graph.hpp"

namespace nzflow {

// Signed per-edge flow: value[e] is the amount on e+ and -value[e] on e-.
struct Flow {
  std::vector<std::int64_t> value;

  static Flow zero(int m) { return {std::vector<std::int64_t>(m, 0)}; }
  int edge_count() const { return static_cast<int>(value.size()); }
  std::int64_t max_abs() const;
  friend bool operator==(const Flow&, const Flow&) = default;
};

// Net outflow at every vertex (tail side counts +v, head side -v).
std::vector<std::int64_t> excess(const Graph& g, const Flow& f);
bool conserves(const Graph& g, const Flow& f);

// values[e] is read only on oriented edges of po.
Flow extend(const Graph& g, const PartialOrientation& po,
            const std::vector<std::int64_t>& values);
Flow negate(const Flow& f);
Flow scale_add(std::int64_t a, const Flow& f1, std::int64_t b, const Flow& f2);
Flow compose_nowhere_zero(const Graph& g, const Flow& f1, int k1,
                          const Flow& f2, int k2);

struct SupportOrientation {
  std::vector<EdgeId> edges;
  PartialOrientation orientation;
};
SupportOrientation support_orientation(const Flow& f);

std::int64_t flow_cost(const Flow& f, const CostFunction& c);

}  // namespace nzflow
