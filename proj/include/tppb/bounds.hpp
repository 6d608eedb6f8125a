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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tppb/characters.hpp"
#include "tppb/group.hpp"
#include "tppb/lattice.hpp"

namespace tppb {

/// Necessary condition a(b + c - 1) <= g for a size-sorted TPP triple
/// a >= b >= c >= 1. Throws UnsortedSizes otherwise.
bool neumann_admissible(std::uint64_t g, std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Largest |A||B||C| over pairwise-distinct proper nontrivial subgroups
/// passing the Neumann condition, floored at |G|.
std::uint64_t compute_t(std::uint64_t group_order, const SubgroupLattice& lattice);

/// Largest 1-based i with |S_i| (|S_2| + |S_3| - 1) <= |G|; 1 when the
/// lattice has fewer than three members or no index qualifies.
std::size_t compute_N(std::uint64_t group_order, const SubgroupLattice& lattice);

/// Max |A||B| over distinct nontrivial A, B, both different from S_i, with
/// |B| <= |A| <= |S_i| and |S_i|(|A| + |B| - 1) <= |G|. This relaxes the
/// index condition 1 < k < j < i to orders, so it dominates every
/// tie-ordering of the index form.
std::optional<std::uint64_t> compute_delta(std::uint64_t group_order, const SubgroupLattice& lattice,
                                           std::size_t i);

/// The index form over an explicit 1-based order sequence (orders[0] = |S_1|):
/// max |S_j||S_k| over 1 < k < j < i with |S_i|(|S_j| + |S_k| - 1) <= |G|.
std::optional<std::uint64_t> compute_delta_indexed(std::uint64_t group_order,
                                                   std::span<const std::uint64_t> orders, std::size_t i);

struct CandidateRow {
  std::size_t i = 0;
  std::uint64_t order = 0;
  std::uint64_t core_order = 0;
  std::optional<std::uint64_t> delta;
  std::uint64_t left = 0;               // |G| |S_i| / |Core(S_i)|
  std::optional<std::uint64_t> right;   // |S_i| Delta(S_i)
  std::optional<std::uint64_t> minimum;
};

struct HBound {
  std::size_t n_index = 1;
  std::optional<std::uint64_t> b;
  std::uint64_t h = 0;
  std::vector<CandidateRow> rows;  // one per i in [4, N]
};

/// `cores` is parallel to lattice.items() (0-based).
HBound compute_h(std::uint64_t group_order, const SubgroupLattice& lattice,
                 std::span<const std::size_t> cores);

/// b(G) with the index form of Delta for one particular ordering of the
/// subgroups; `orders` and `cores` are 0-based and parallel.
std::optional<std::uint64_t> compute_b_indexed(std::uint64_t group_order,
                                               std::span<const std::uint64_t> orders,
                                               std::span<const std::size_t> cores);

struct BetaSearchOptions {
  std::optional<std::uint64_t> budget;  // max TPP checks
};

struct BetaSearchResult {
  std::uint64_t value = 0;
  std::array<std::size_t, 3> witness{};  // 1-based lattice indices, i >= j >= k
  bool exact = true;                     // false: budget ran out, value is a lower bound
  std::uint64_t checks = 0;
};

/// Exact subgroup capacity. Triples are visited by descending product and,
/// within a product, ascending (i, j, k); the first one satisfying the
/// property wins. Pruning uses only the Neumann condition and the core cap
/// |Core(X)| * (product of the other two orders) <= |G|.
BetaSearchResult search_beta_g(const Group& g, const SubgroupLattice& lattice,
                               std::span<const std::size_t> cores, const BetaSearchOptions& options = {});

struct ExclusionFlags {
  bool t_le_d3 = false;
  bool h_le_d3 = false;
  std::optional<bool> beta_le_d3;
};

ExclusionFlags exclusion_flags(std::uint64_t t, std::uint64_t h, std::optional<std::uint64_t> beta,
                               std::uint64_t d3);

/// Heuristic: the largest x in [2, 3] with sum d^x = beta^(x/3), located by a
/// 1e-4 grid scan downward from 3 and bisection to 1e-9. Assumes a single
/// crossing. Empty when beta <= D_3. Throws NoRootInRange.
std::optional<double> solve_omega_bound(std::uint64_t beta, const CharacterDegrees& degrees);

struct AnalyzeOptions {
  bool exact_beta = false;
  BetaSearchOptions beta;
  LatticeOptions lattice;
};

struct BoundsReport {
  std::string group_name;
  std::uint64_t order = 0;
  bool is_abelian = false;
  std::size_t subgroup_count = 0;
  std::size_t class_count = 0;
  std::size_t n_index = 1;
  std::uint64_t t = 0;
  std::optional<std::uint64_t> b;
  std::uint64_t h = 0;
  std::uint64_t d3 = 0;
  CharacterDegrees degrees;
  std::optional<BetaSearchResult> beta_g;
  ExclusionFlags flags;
  std::vector<CandidateRow> rows;
};

/// Group -> lattice -> cores -> t, b, h -> degrees -> D_3 -> flags.
BoundsReport compute_bounds_report(const Group& g, std::string name, const AnalyzeOptions& options = {});

}  // namespace tppb
