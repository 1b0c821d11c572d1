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

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nzflow/approx.hpp"
#include "nzflow/flow.hpp"
#include "nzflow/graph.hpp"
#include "nzflow/lp.hpp"
#include "nzflow/verify.hpp"

namespace nzflow {

struct CostedGraph {
  Graph graph;
  CostFunction cost;
};

// All readers throw kParseError with a line number on malformed input.
CostedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g, const CostFunction& c);

Flow read_flow(std::istream& in);
void write_flow(std::ostream& out, const Flow& f);

// `nzo <m>` then `i +`, `i -` or `i ?` per edge.
PartialOrientation read_orientation(std::istream& in);
void write_orientation(std::ostream& out, const PartialOrientation& po);

LpSolution read_lp(std::istream& in);
void write_lp(std::ostream& out, const LpSolution& s);

nlohmann::json to_json(const ApproxCertificate& c);
ApproxCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Violation& v);

// Reads a whole file, or stdin for "-". Throws kParseError if unreadable.
std::string slurp(const std::string& path);

}  // namespace nzflow
