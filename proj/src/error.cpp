// Copyright 2026 The cohcost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohcost/error.hpp"

namespace cohcost {

const char *to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::OutOfRegime: return "out of regime";
    case ErrorKind::SingularMetric: return "singular metric";
    case ErrorKind::ConditionNotMet: return "condition not met";
    case ErrorKind::InvariantViolation: return "invariant violation";
    case ErrorKind::Numerical: return "numerical failure";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "i/o error";
    }
    return "unknown error";
}

void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

}  // namespace cohcost
