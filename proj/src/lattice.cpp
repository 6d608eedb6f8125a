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

#include "tppb/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "tppb/error.hpp"

namespace tppb {

SubgroupLattice::SubgroupLattice(std::vector<ElementSet> sorted_items)
    : items_(std::move(sorted_items)) {}

const ElementSet& SubgroupLattice::at(std::size_t i) const {
  if (i < 1 || i > items_.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "subgroup index " + std::to_string(i) + " outside 1.." + std::to_string(items_.size()));
  return items_[i - 1];
}

std::optional<std::size_t> SubgroupLattice::index_of(const ElementSet& s) const {
  // Items are sorted by order first, so only the equal-order run needs scanning.
  const auto lo = std::lower_bound(items_.begin(), items_.end(), s.size(),
                                   [](const ElementSet& a, std::size_t n) { return a.size() < n; });
  for (auto it = lo; it != items_.end() && it->size() == s.size(); ++it)
    if (*it == s) return static_cast<std::size_t>(it - items_.begin()) + 1;
  return std::nullopt;
}

void sort_subgroups(std::vector<ElementSet>& items) {
  std::vector<std::vector<Element>> keys;
  keys.reserve(items.size());
  for (const auto& s : items) keys.push_back(s.elements());
  std::vector<std::size_t> perm(items.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].size() != keys[b].size()) return keys[a].size() < keys[b].size();
    return keys[a] < keys[b];
  });
  std::vector<ElementSet> sorted;
  sorted.reserve(items.size());
  for (std::size_t i : perm) sorted.push_back(std::move(items[i]));
  items = std::move(sorted);
}

namespace {

ElementSet closure_of(const Group& g, std::span<const Element> gens) {
  ElementSet seed(g.order());
  for (Element e : gens) seed.insert(e);
  return closure(g, seed);
}

}  // namespace

SubgroupLattice enumerate_subgroups(const Group& g, const LatticeOptions& options) {
  const std::size_t n = g.order();

  struct Item {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::vector<Item> items;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;

  const auto add = [&](ElementSet s, std::vector<Element> gens) {
    if (seen.contains(s)) return;
    if (items.size() >= options.max_subgroups)
      throw Error(ErrorKind::LatticeLimitExceeded,
                  "more than " + std::to_string(options.max_subgroups) + " subgroups");
    seen.emplace(s, items.size());
    items.push_back({std::move(s), std::move(gens)});
  };

  // One representative element per cyclic subgroup.
  std::vector<Element> cyclic_reps;
  add(closure_of(g, {}), {});
  for (std::size_t x = 1; x < n; ++x) {
    const Element e = static_cast<Element>(x);
    auto c = closure_of(g, std::span<const Element>(&e, 1));
    if (!seen.contains(c)) cyclic_reps.push_back(e);
    add(std::move(c), {e});
  }

  // Joining every subgroup with every cyclic subgroup reaches all joins,
  // since each subgroup is the join of its cyclic subgroups.
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (Element r : cyclic_reps) {
      if (items[i].members.contains(r)) continue;
      std::vector<Element> gens = items[i].gens;
      gens.push_back(r);
      auto joined = closure_of(g, gens);
      if (!seen.contains(joined)) add(std::move(joined), std::move(gens));
    }
  }

  std::vector<ElementSet> out;
  out.reserve(items.size());
  for (auto& it : items) {
    it.members.set_subgroup_flag(true);
    out.push_back(std::move(it.members));
  }
  sort_subgroups(out);
  return SubgroupLattice(std::move(out));
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(Group::kIdentity)) return false;
  bool ok = true;
  s.for_each([&](Element a) {
    if (!ok) return;
    if (!s.contains(g.inv(a))) {
      ok = false;
      return;
    }
    s.for_each([&](Element b) {
      if (ok && !s.contains(g.mul(a, b))) ok = false;
    });
  });
  return ok;
}

namespace {

void require_subgroup(const Group& g, const ElementSet& s) {
  if (s.subgroup_flag() && s.universe() == g.order()) return;
  if (!is_subgroup(g, s)) throw Error(ErrorKind::NotASubgroup, "set is not a subgroup");
}

}  // namespace

bool is_normal(const Group& g, const ElementSet& s) {
  require_subgroup(g, s);
  for (std::size_t h = 0; h < g.order(); ++h) {
    bool closed = true;
    s.for_each([&](Element x) {
      if (closed && !s.contains(g.conj(static_cast<Element>(h), x))) closed = false;
    });
    if (!closed) return false;
  }
  return true;
}

ElementSet normal_core(const Group& g, const ElementSet& s) {
  require_subgroup(g, s);
  ElementSet core = s;
  for (std::size_t h = 1; h < g.order() && core.size() > 1; ++h) {
    // core ∩ h^-1 S h, i.e. keep x only if h x h^-1 lies in S.
    ElementSet next(g.order());
    core.for_each([&](Element x) {
      if (s.contains(g.conj(static_cast<Element>(h), x))) next.insert(x);
    });
    core = std::move(next);
  }
  core.set_subgroup_flag(true);
  return core;
}

std::vector<std::size_t> core_orders(const Group& g, const SubgroupLattice& lattice) {
  std::vector<std::size_t> out;
  out.reserve(lattice.size());
  for (const auto& s : lattice.items()) out.push_back(normal_core(g, s).size());
  return out;
}

}  // namespace tppb
