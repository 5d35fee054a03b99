// Copyright 2026 The gusq Authors
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

#include <optional>
#include <stdexcept>
#include <string>

namespace gusq {

/// Failure categories. The numeric values double as `gusq` CLI exit codes.
enum class ErrorCode : int {
  kNumeric = 1,       // precondition or numerical failure (bad structure, unphysical state, ...)
  kInput = 2,         // malformed input document
  kSizeLimit = 3,     // requested object exceeds a dimension cap
  kInvalidGram = 4,   // Gram matrix not Hermitian positive semidefinite
  kEmptyRange = 5,    // sweep with no feasible point
  kTruncation = 6,    // Fock truncation too small for the requested parameters
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the Fock oracle; carries the smallest dimension found to satisfy
/// the tail bound, when the search succeeded.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, std::optional<int> suggested_dim)
      : Error(ErrorCode::kTruncation, what), suggested_dim_(suggested_dim) {}

  std::optional<int> suggested_dim() const noexcept { return suggested_dim_; }

 private:
  std::optional<int> suggested_dim_;
};

}  // namespace gusq
