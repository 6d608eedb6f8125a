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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "tppb/group.hpp"

namespace tppb {

/// Sorted multiset of irreducible character degrees of a group of known order.
class CharacterDegrees {
 public:
  CharacterDegrees() = default;

  /// Sorts `degrees` and enforces: sum of squares = order, every degree
  /// divides order, at least one degree is 1. Throws InvariantViolation.
  static CharacterDegrees validated(std::uint64_t group_order, std::vector<std::uint64_t> degrees);

  const std::vector<std::uint64_t>& degrees() const noexcept { return degrees_; }
  std::uint64_t group_order() const noexcept { return order_; }
  std::size_t count() const noexcept { return degrees_.size(); }
  std::size_t linear_count() const;

  /// Sum of d^w, exact.
  std::uint64_t d_sum_int(unsigned w) const;
  /// Sum of d^x for real x in [2, 3]; throws DomainError outside.
  double d_sum_real(double x) const;

  friend bool operator==(const CharacterDegrees&, const CharacterDegrees&) = default;

 private:
  std::vector<std::uint64_t> degrees_;
  std::uint64_t order_ = 0;
};

/// Smallest prime p with p = 1 (mod exponent) and p > 2 sqrt(|G|).
std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent);
std::uint64_t dixon_prime(const Group& g);
/// Next prime after `p` that is also admissible for (order, exponent).
std::uint64_t next_dixon_prime(std::uint64_t group_order, std::uint64_t exponent, std::uint64_t p);

/// Degrees via common eigenvectors of the class matrices over GF(p). Retries
/// with the next admissible prime when a split fails.
CharacterDegrees character_degrees(const Group& g);
/// Single attempt with a fixed admissible prime; throws EigenspaceSplitFailure.
CharacterDegrees character_degrees_mod(const Group& g, std::uint64_t p);

/// Lines `<order>: d1 d2 ... dk`, `#` comments.
std::vector<CharacterDegrees> parse_degree_records(std::istream& in);
/// Reads a file holding exactly one record.
CharacterDegrees ingest_degrees(const std::filesystem::path& path);

}  // namespace tppb
