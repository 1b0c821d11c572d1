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

#include "nzflow/error.hpp"

namespace nzflow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kConservationViolated: return "ConservationViolated";
    case ErrorKind::kNonpositiveValue: return "NonpositiveValue";
    case ErrorKind::kGraphMismatch: return "GraphMismatch";
    case ErrorKind::kSupportNotCovering: return "SupportNotCovering";
    case ErrorKind::kBoundViolated: return "BoundViolated";
    case ErrorKind::kForbiddenArcUsed: return "ForbiddenArcUsed";
    case ErrorKind::kInfeasible: return "Infeasible";
    case ErrorKind::kNotTwoEdgeConnected: return "NotTwoEdgeConnected";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kStructureViolation: return "StructureViolation";
    case ErrorKind::kNotCutBalanced: return "NotCutBalanced";
    case ErrorKind::kNotNz6Flow: return "NotNZ6Flow";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kNotRestrictedSat: return "NotRestrictedSat";
    case ErrorKind::kKTooSmall: return "KTooSmall";
    case ErrorKind::kNotNae3Sat: return "NotNae3Sat";
    case ErrorKind::kAssignmentNotNaeSatisfying:
      return "AssignmentNotNaeSatisfying";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kOverflowRisk: return "OverflowRisk";
  }
  return "Unknown";
}

}  // namespace nzflow
