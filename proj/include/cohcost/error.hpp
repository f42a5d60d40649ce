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

#ifndef COHCOST_ERROR_HPP
#define COHCOST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cohcost {

/// Category of a library failure. Mirrors the status codes of the C API.
enum class ErrorKind {
    InvalidArgument,
    Validation,
    DimensionMismatch,
    OutOfRegime,
    SingularMetric,
    ConditionNotMet,
    InvariantViolation,
    Numerical,
    Parse,
    Io,
};

const char *to_string(ErrorKind kind);

/// Every error thrown by the library derives from this type.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &what);

}  // namespace cohcost

#endif  // COHCOST_ERROR_HPP
