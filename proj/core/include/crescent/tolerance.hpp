// Copyright 2026 The crescent Authors
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

namespace crescent {

// Single angular tolerance used by every predicate (radians).
inline constexpr double kEpsAngle = 1e-9;
// Unit-norm and rank tolerance.
inline constexpr double kEpsNorm = 1e-12;
// Strict-separation margin for simple convexity and interior overlap.
inline constexpr double kEpsMargin = 1e-6;
// Relative singular-value cutoff for dimension decisions.
inline constexpr double kRankRelTol = 1e-9;

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degenerate or inconsistent geometric input (zero vectors, non-collinear
/// quadruples, singular matrices).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The caller combined inputs that the operation does not accept.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace crescent
