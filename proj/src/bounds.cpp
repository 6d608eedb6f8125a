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

#include "tppb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "tppb/error.hpp"
#include "tppb/tpp.hpp"

namespace tppb {

bool neumann_admissible(std::uint64_t g, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (!(a >= b && b >= c && c >= 1))
    throw Error(ErrorKind::UnsortedSizes, "sizes must satisfy a >= b >= c >= 1, got (" + std::to_string(a) +
                                              "," + std::to_string(b) + "," + std::to_string(c) + ")");
  return a * (b + c - 1) <= g;
}

namespace {

// Distinct subgroup orders with multiplicities, ascending.
std::map<std::uint64_t, std::size_t> order_counts(const SubgroupLattice& lattice) {
  std::map<std::uint64_t, std::size_t> counts;
  for (const auto& s : lattice.items()) ++counts[s.size()];
  return counts;
}

}  // namespace

std::uint64_t compute_t(std::uint64_t group_order, const SubgroupLattice& lattice) {
  auto counts = order_counts(lattice);
  counts.erase(1);
  counts.erase(group_order);
  std::uint64_t best = 0;
  for (const auto& [a, ca] : counts) {
    for (const auto& [b, cb] : counts) {
      if (b > a) break;
      for (const auto& [c, cc] : counts) {
        if (c > b) break;
        // Pairwise-distinct subgroups need enough members of each shared order.
        std::map<std::uint64_t, std::size_t> need;
        ++need[a], ++need[b], ++need[c];
        bool enough = true;
        for (const auto& [o, k] : need) enough = enough && counts.at(o) >= k;
        if (enough && neumann_admissible(group_order, a, b, c)) best = std::max(best, a * b * c);
      }
    }
  }
  return std::max(best, group_order);
}

std::size_t compute_N(std::uint64_t group_order, const SubgroupLattice& lattice) {
  if (lattice.size() < 3) return 1;
  const std::uint64_t denom = lattice.order_at(2) + lattice.order_at(3) - 1;
  std::size_t n_index = 1;
  for (std::size_t i = 1; i <= lattice.size(); ++i)
    if (lattice.order_at(i) * denom <= group_order) n_index = i;
  return n_index;
}

std::optional<std::uint64_t> compute_delta(std::uint64_t group_order, const SubgroupLattice& lattice,
                                           std::size_t i) {
  const std::uint64_t si = lattice.order_at(i);  // range-checks i
  auto counts = order_counts(lattice);
  counts.erase(1);
  if (auto it = counts.find(si); it != counts.end()) --it->second;  // S_i itself

  std::optional<std::uint64_t> best;
  for (const auto& [a, ca] : counts) {
    if (a > si) break;
    if (ca == 0) continue;
    for (const auto& [b, cb] : counts) {
      if (b > a) break;
      if (cb == 0 || (a == b && ca < 2)) continue;
      if (!neumann_admissible(group_order, si, a, b)) continue;
      if (!best || a * b > *best) best = a * b;
    }
  }
  return best;
}

std::optional<std::uint64_t> compute_delta_indexed(std::uint64_t group_order,
                                                   std::span<const std::uint64_t> orders, std::size_t i) {
  if (i < 1 || i > orders.size())
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." +
                                                std::to_string(orders.size()));
  const std::uint64_t si = orders[i - 1];
  std::optional<std::uint64_t> best;
  for (std::size_t j = 3; j < i; ++j) {
    for (std::size_t k = 2; k < j; ++k) {
      const std::uint64_t sj = orders[j - 1], sk = orders[k - 1];
      if (si * (sj + sk - 1) > group_order) continue;
      if (!best || sj * sk > *best) best = sj * sk;
    }
  }
  return best;
}

HBound compute_h(std::uint64_t group_order, const SubgroupLattice& lattice,
                 std::span<const std::size_t> cores) {
  if (cores.size() != lattice.size())
    throw Error(ErrorKind::IndexOutOfRange, "core table does not match lattice");
  HBound out;
  out.n_index = compute_N(group_order, lattice);
  for (std::size_t i = 4; i <= out.n_index; ++i) {
    CandidateRow row;
    row.i = i;
    row.order = lattice.order_at(i);
    row.core_order = cores[i - 1];
    row.left = group_order * row.order / row.core_order;
    row.delta = compute_delta(group_order, lattice, i);
    if (row.delta) {
      row.right = row.order * *row.delta;
      row.minimum = std::min(row.left, *row.right);
      if (!out.b || *row.minimum > *out.b) out.b = row.minimum;
    }
    out.rows.push_back(row);
  }
  out.h = std::max(out.b.value_or(group_order), group_order);
  return out;
}

std::optional<std::uint64_t> compute_b_indexed(std::uint64_t group_order,
                                               std::span<const std::uint64_t> orders,
                                               std::span<const std::size_t> cores) {
  if (orders.size() < 3) return std::nullopt;
  const std::uint64_t denom = orders[1] + orders[2] - 1;
  std::size_t n_index = 1;
  for (std::size_t i = 1; i <= orders.size(); ++i)
    if (orders[i - 1] * denom <= group_order) n_index = i;
  std::optional<std::uint64_t> b;
  for (std::size_t i = 4; i <= n_index; ++i) {
    const auto delta = compute_delta_indexed(group_order, orders, i);
    if (!delta) continue;
    const std::uint64_t m = std::min(group_order * orders[i - 1] / cores[i - 1], orders[i - 1] * *delta);
    if (!b || m > *b) b = m;
  }
  return b;
}

// ---- exact search -------------------------------------------------------

BetaSearchResult search_beta_g(const Group& g, const SubgroupLattice& lattice,
                               std::span<const std::size_t> cores, const BetaSearchOptions& options) {
  if (cores.size() != lattice.size())
    throw Error(ErrorKind::IndexOutOfRange, "core table does not match lattice");
  const std::uint64_t n = g.order();

  // Contiguous 1-based index range per order (the lattice is order-sorted).
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> range;
  for (std::size_t i = 1; i <= lattice.size(); ++i) {
    auto [it, fresh] = range.try_emplace(lattice.order_at(i), i, i);
    if (!fresh) it->second.second = i;
  }

  struct OrderTriple {
    std::uint64_t a, b, c;
  };
  // product -> order triples, ascending (a, b)
  std::map<std::uint64_t, std::vector<OrderTriple>, std::greater<>> levels;
  for (const auto& [a, ra] : range)
    for (const auto& [b, rb] : range) {
      if (b > a) break;
      for (const auto& [c, rc] : range) {
        if (c > b) break;
        if (neumann_admissible(n, a, b, c)) levels[a * b * c].push_back({a, b, c});
      }
    }

  // Core cap: if X has core K then (K, Y, Z) is a triple with a normal
  // member, so |K| |Y| |Z| <= |G|.
  const auto members = [&](std::uint64_t order, std::uint64_t others) {
    std::vector<std::size_t> out;
    const auto [lo, hi] = range.at(order);
    for (std::size_t i = lo; i <= hi; ++i)
      if (cores[i - 1] * others <= n) out.push_back(i);
    return out;
  };

  BetaSearchResult result;
  for (auto& [product, triples] : levels) {
    std::sort(triples.begin(), triples.end(),
              [](const OrderTriple& x, const OrderTriple& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });

    // Group by the largest order so i ascends across every triple at this level.
    for (std::size_t lo = 0; lo < triples.size();) {
      std::size_t hi = lo;
      while (hi < triples.size() && triples[hi].a == triples[lo].a) ++hi;

      struct Lists {
        std::vector<std::size_t> li, lj, lk;
      };
      std::vector<Lists> lists;
      std::vector<std::size_t> all_i;
      for (std::size_t t = lo; t < hi; ++t) {
        const auto& [a, b, c] = triples[t];
        Lists l{members(a, b * c), members(b, a * c), members(c, a * b)};
        if (l.li.empty() || l.lj.empty() || l.lk.empty()) l = {};
        all_i.insert(all_i.end(), l.li.begin(), l.li.end());
        lists.push_back(std::move(l));
      }
      std::sort(all_i.begin(), all_i.end());
      all_i.erase(std::unique(all_i.begin(), all_i.end()), all_i.end());

      for (std::size_t i : all_i) {
        for (const auto& l : lists) {
          if (!std::binary_search(l.li.begin(), l.li.end(), i)) continue;
          for (std::size_t j : l.lj) {
            if (j > i) break;
            for (std::size_t k : l.lk) {
              if (k > j) break;
              if (options.budget && result.checks >= *options.budget) {
                result.value = n;
                result.witness = {lattice.size(), 1, 1};
                result.exact = false;
                return result;
              }
              ++result.checks;
              if (satisfies_tpp(g, lattice.at(i), lattice.at(j), lattice.at(k)).holds) {
                result.value = product;
                result.witness = {i, j, k};
                return result;
              }
            }
          }
        }
      }
      lo = hi;
    }
  }
  // Unreachable for a valid lattice: (G, 1, 1) always holds.
  throw Error(ErrorKind::InvariantViolation, "no TPP triple found; lattice is incomplete");
}

ExclusionFlags exclusion_flags(std::uint64_t t, std::uint64_t h, std::optional<std::uint64_t> beta,
                               std::uint64_t d3) {
  ExclusionFlags f;
  f.t_le_d3 = t <= d3;
  f.h_le_d3 = h <= d3;
  if (beta) f.beta_le_d3 = *beta <= d3;
  return f;
}

std::optional<double> solve_omega_bound(std::uint64_t beta, const CharacterDegrees& degrees) {
  if (beta < 1) throw Error(ErrorKind::DomainError, "beta must be positive");
  if (beta <= degrees.d_sum_int(3)) return std::nullopt;
  const double b = static_cast<double>(beta);
  const auto f = [&](double x) { return degrees.d_sum_real(x) - std::pow(b, x / 3.0); };

  constexpr int kSteps = 10000;  // grid step 1e-4 on [2, 3]
  const auto grid = [](int k) { return 3.0 - static_cast<double>(k) / kSteps; };
  double hi = grid(0);  // f(hi) < 0 here
  for (int k = 1; k <= kSteps; ++k) {
    const double lo = grid(k);
    const double flo = f(lo);
    if (flo == 0.0) return lo;
    if (flo > 0.0) {
      double a = lo, z = hi;
      while (z - a > 1e-9) {
        const double mid = 0.5 * (a + z);
        if (f(mid) > 0.0) a = mid; else z = mid;
      }
      return 0.5 * (a + z);
    }
    hi = lo;
  }
  throw Error(ErrorKind::NoRootInRange,
              "beta = " + std::to_string(beta) + " exceeds D_3 but no sign change on [2, 3]");
}

BoundsReport compute_bounds_report(const Group& g, std::string name, const AnalyzeOptions& options) {
  BoundsReport r;
  r.group_name = std::move(name);
  r.order = g.order();
  r.is_abelian = group_stats(g).is_abelian;

  const SubgroupLattice lattice = enumerate_subgroups(g, options.lattice);
  const std::vector<std::size_t> cores = core_orders(g, lattice);
  r.subgroup_count = lattice.size();
  r.t = compute_t(r.order, lattice);
  const HBound hb = compute_h(r.order, lattice, cores);
  r.n_index = hb.n_index;
  r.b = hb.b;
  r.h = hb.h;
  r.rows = hb.rows;

  r.degrees = character_degrees(g);
  r.class_count = r.degrees.count();
  r.d3 = r.degrees.d_sum_int(3);

  if (options.exact_beta) r.beta_g = search_beta_g(g, lattice, cores, options.beta);
  std::optional<std::uint64_t> beta_value;
  if (r.beta_g && r.beta_g->exact) beta_value = r.beta_g->value;
  r.flags = exclusion_flags(r.t, r.h, beta_value, r.d3);
  return r;
}

}  // namespace tppb
