// Copyright 2026 The hamrad Authors
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
#include <string_view>

namespace hamrad {

enum class ErrorKind {
  kInvalidArgument,
  kDimensionMismatch,
  kOutOfRange,
  kOverflow,
  kPartialLabeling,
  kNonPositiveLabel,
  kNotBijective,
  kParse,
  kBudgetExhausted,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kDimensionMismatch: return "dimension_mismatch";
    case ErrorKind::kOutOfRange: return "out_of_range";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kPartialLabeling: return "partial_labeling";
    case ErrorKind::kNonPositiveLabel: return "non_positive_label";
    case ErrorKind::kNotBijective: return "not_bijective";
    case ErrorKind::kParse: return "parse_error";
    case ErrorKind::kBudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hamrad
