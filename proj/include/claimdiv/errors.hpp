// Copyright 2026 The claimdiv Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace claimdiv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interval endpoints out of order or negative.
struct ConstructionError : Error {
    using Error::Error;
};

// A problem violates the bankruptcy condition or has negative data.
struct ProblemValidationError : Error {
    using Error::Error;
};

// Zero total claims with a positive estate. Unreachable through a validated
// problem; kept as a distinct type for direct rule invocations.
struct DegenerateProblem : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Game has too few players for the requested construction.
struct UnsupportedGame : Error {
    using Error::Error;
};

// A corner problem derived from an interval game is not a bankruptcy problem.
struct NotABankruptcyInstance : Error {
    using Error::Error;
};

struct UnknownProperty : Error {
    using Error::Error;
};

struct AssertionFailure : Error {
    using Error::Error;
};

} // namespace claimdiv
