// Copyright 2026 The sympt Authors
//
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

#include <stdexcept>
#include <string>

namespace sympt {

// Validation errors mean the input was rejected; numerical errors mean a
// computation on valid input could not be completed reliably. The CLI maps
// them to exit codes 1 and 2.
enum class ErrorClass { Validation, Numerical };

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string &message, ErrorClass cls);

  const std::string &kind() const noexcept { return kind_; }
  ErrorClass error_class() const noexcept { return class_; }

 private:
  std::string kind_;
  ErrorClass class_;
};

#define SYMPT_DECLARE_ERROR(Name, Class)                   \
  class Name : public Error {                              \
   public:                                                 \
    explicit Name(const std::string &message)              \
        : Error(#Name, message, ErrorClass::Class) {}      \
  }

SYMPT_DECLARE_ERROR(DimensionMismatch, Validation);
SYMPT_DECLARE_ERROR(HermiticityViolation, Validation);
SYMPT_DECLARE_ERROR(SymmetryViolation, Validation);
SYMPT_DECLARE_ERROR(SingularMatrix, Validation);
SYMPT_DECLARE_ERROR(InvalidStructure, Validation);
SYMPT_DECLARE_ERROR(StructureViolation, Validation);
SYMPT_DECLARE_ERROR(NotUnitary, Validation);
SYMPT_DECLARE_ERROR(SqueezeOutOfRange, Validation);
SYMPT_DECLARE_ERROR(DimensionCap, Validation);
SYMPT_DECLARE_ERROR(ParseError, Validation);
SYMPT_DECLARE_ERROR(ValidationError, Validation);
SYMPT_DECLARE_ERROR(NoTransition, Numerical);
SYMPT_DECLARE_ERROR(SolverFailure, Numerical);
SYMPT_DECLARE_ERROR(OverflowRisk, Numerical);
SYMPT_DECLARE_ERROR(ZeroProbability, Numerical);

#undef SYMPT_DECLARE_ERROR

}  // namespace sympt
