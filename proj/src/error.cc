/*
 * Copyright 2026 The h2r Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "h2r/error.h"

namespace h2r {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kEmptyCloud: return "EmptyCloud";
    case ErrorKind::kNonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorKind::kDegenerateFrame: return "DegenerateFrame";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kNoSafeGrasp: return "NoSafeGrasp";
    case ErrorKind::kSamplingExhausted: return "SamplingExhausted";
    case ErrorKind::kClearanceViolation: return "ClearanceViolation";
    case ErrorKind::kStepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorKind::kPolicyFailure: return "PolicyFailure";
    case ErrorKind::kNonFiniteAction: return "NonFiniteAction";
    case ErrorKind::kUnknownFixture: return "UnknownFixture";
    case ErrorKind::kConfigError: return "ConfigError";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Error";
}

}  // namespace h2r
