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
#include <optional>
#include <span>
#include <vector>

#include "tppb/element_set.hpp"
#include "tppb/group.hpp"

namespace tppb {

inline constexpr std::size_t kDefaultLatticeLimit = 100000;

/// All subgroups of a group, ascending by order with ties broken by the
/// lexicographic order of their sorted member lists. Indexing is 1-based:
/// at(1) is the trivial subgroup and at(size()) the whole group.
class SubgroupLattice {
 public:
  SubgroupLattice() = default;
  explicit SubgroupLattice(std::vector<ElementSet> sorted_items);

  std::size_t size() const noexcept { return items_.size(); }
  const ElementSet& at(std::size_t i) const;
  std::size_t order_at(std::size_t i) const { return at(i).size(); }

  std::span<const ElementSet> items() const noexcept { return items_; }

  /// 1-based index of `s`, if it is a member.
  std::optional<std::size_t> index_of(const ElementSet& s) const;

 private:
  std::vector<ElementSet> items_;
};

struct LatticeOptions {
  std::size_t max_subgroups = kDefaultLatticeLimit;
};

/// Seeds with every cyclic subgroup and closes under joins to a fixpoint.
SubgroupLattice enumerate_subgroups(const Group& g, const LatticeOptions& options = {});

/// Orders the given subgroups by (order, lexicographic members).
void sort_subgroups(std::vector<ElementSet>& items);

/// Contains 0 and is closed under multiplication and inversion.
bool is_subgroup(const Group& g, const ElementSet& s);

bool is_normal(const Group& g, const ElementSet& s);

/// Largest normal subgroup of g inside s: the intersection of all conjugates.
ElementSet normal_core(const Group& g, const ElementSet& s);

/// |Core_G(S_i)| for every lattice item, 0-based parallel to items().
std::vector<std::size_t> core_orders(const Group& g, const SubgroupLattice& lattice);

}  // namespace tppb
