// Copyright 2026 The tppb Authors
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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tppb {

enum class ErrorKind {
  NotLatinSquare,
  NoIdentityAtZero,
  NotAssociative,
  NotAPermutation,
  OrderLimitExceeded,
  UnknownFamily,
  BadParameter,
  LatticeLimitExceeded,
  NotASubgroup,
  EmptySet,
  UnsortedSizes,
  IndexOutOfRange,
  EigenspaceSplitFailure,
  InvariantViolation,
  DomainError,
  NoRootInRange,
  ParseError,
  UnknownElement,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and tested;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Populated for NotAssociative: (a, b, c) with (ab)c != a(bc).
  std::optional<std::array<std::uint32_t, 3>> witness;

 private:
  ErrorKind kind_;
};

}  // namespace tppb
