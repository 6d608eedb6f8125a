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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tppb/element_set.hpp"

namespace tppb {

inline constexpr std::size_t kDefaultOrderLimit = 2000;
// Full O(n^3) associativity validation is only run up to this order unless
// the caller raises TableOptions::max_order explicitly.
inline constexpr std::size_t kDefaultTableValidationLimit = 512;

/// One-line notation with 1-based images: p[i-1] = image of i.
using Permutation = std::vector<std::uint32_t>;

/// A finite group stored as its full multiplication table. Element 0 is
/// always the identity. Immutable once built; copies share nothing.
class Group {
 public:
  static constexpr Element kIdentity = 0;

  Group() = default;

  std::size_t order() const noexcept { return n_; }

  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  Element conj(Element g, Element x) const noexcept { return mul(mul(g, x), inv(g)); }

  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + std::size_t{a} * n_, n_};
  }

  const std::string& label(Element a) const { return labels_[a]; }
  std::span<const std::string> labels() const noexcept { return labels_; }

 private:
  friend Group make_group_unchecked(std::size_t n, std::vector<Element> table,
                                    std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

/// Builds a Group from a table already known to satisfy the group axioms
/// with identity 0. Labels default to decimal indices when empty.
Group make_group_unchecked(std::size_t n, std::vector<Element> table,
                           std::vector<std::string> labels = {});

struct TableOptions {
  std::size_t max_order = kDefaultTableValidationLimit;
};

/// Validates Latin square, identity at index 0, and associativity (full scan).
Group from_cayley_table(std::size_t n, const std::vector<std::vector<Element>>& table,
                        const TableOptions& options = {});

/// Closure of `gens` under composition, with (p*q)(x) = p(q(x)).
Group from_permutation_generators(std::size_t degree, std::span<const Permutation> gens,
                                  std::size_t order_limit = kDefaultOrderLimit);

/// Element (a, b) is indexed a * |B| + b.
Group direct_product(const Group& a, const Group& b,
                     std::size_t order_limit = kDefaultOrderLimit);

enum class Family { Cyclic, Dihedral, Dicyclic, Symmetric, Alternating, ElementaryAbelian };

struct BuiltinSpec {
  Family family = Family::Cyclic;
  // Order for cyclic/dihedral/dicyclic, degree for sym/alt, prime for elem_abelian.
  std::uint32_t parameter = 1;
  // Exponent k of elem_abelian:p^k; 1 otherwise.
  std::uint32_t power = 1;

  friend bool operator==(const BuiltinSpec&, const BuiltinSpec&) = default;
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);  // throws UnknownFamily

/// Throws BadParameter when the parameters fall outside the documented range.
void validate_builtin(const BuiltinSpec& spec);
/// Order of the group `spec` describes; saturates at UINT64_MAX.
std::uint64_t builtin_order(const BuiltinSpec& spec);
Group builtin(const BuiltinSpec& spec, std::size_t order_limit = kDefaultOrderLimit);

struct ConjugacyPartition {
  std::vector<ElementSet> classes;      // classes[0] = {identity}; ordered by least member
  std::vector<std::uint32_t> class_of;  // element -> class index
};

ConjugacyPartition conjugacy_classes(const Group& g);

/// Smallest subgroup containing `seed`; the result carries the subgroup flag.
ElementSet closure(const Group& g, const ElementSet& seed);

std::uint64_t element_order(const Group& g, Element x);

struct GroupStats {
  std::size_t order = 0;
  bool is_abelian = false;
  std::uint64_t exponent = 1;
  std::size_t center_size = 0;
};

GroupStats group_stats(const Group& g);
ElementSet center(const Group& g);
ElementSet derived_subgroup(const Group& g);

// ---- file formats -------------------------------------------------------

struct PermGenerators {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
};

/// ".pgens": `degree <d>` then one generator per line (1-based images).
PermGenerators parse_pgens(std::istream& in);
/// ".ctab": `<n>` then n rows of n 0-based indices.
std::vector<std::vector<Element>> parse_ctab(std::istream& in);

Group load_pgens(const std::filesystem::path& path, std::size_t order_limit = kDefaultOrderLimit);
Group load_ctab(const std::filesystem::path& path, const TableOptions& options = {});

}  // namespace tppb
