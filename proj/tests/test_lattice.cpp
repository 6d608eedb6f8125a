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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tppb/error.hpp"
#include "tppb/lattice.hpp"

using namespace tppb;
using tppb::testing::make;

namespace {

std::vector<std::size_t> orders_of(const SubgroupLattice& l) {
  std::vector<std::size_t> out;
  for (const auto& s : l.items()) out.push_back(s.size());
  return out;
}

std::uint32_t mask_of(const ElementSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](Element e) { m |= 1u << e; });
  return m;
}

ElementSet subgroup_of_order(const SubgroupLattice& l, std::size_t order) {
  for (const auto& s : l.items())
    if (s.size() == order) return s;
  FAIL("no subgroup of order " << order);
  return {};
}

}  // namespace

TEST_CASE("lattice sizes") {
  CHECK(enumerate_subgroups(make("cyclic:1")).size() == 1);
  CHECK(enumerate_subgroups(make("cyclic:12")).size() == 6);
  CHECK(enumerate_subgroups(make("cyclic:13")).size() == 2);
  CHECK(orders_of(enumerate_subgroups(make("sym:3"))) == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  CHECK(enumerate_subgroups(make("sym:4")).size() == 30);
  CHECK(enumerate_subgroups(make("dihedral:8")).size() == 10);
  CHECK(enumerate_subgroups(make("dicyclic:8")).size() == 6);
  CHECK(enumerate_subgroups(make("alt:4")).size() == 10);
  CHECK(enumerate_subgroups(make("elem_abelian:2^3")).size() == 16);
  CHECK(enumerate_subgroups(make("alt:5")).size() == 59);
}

TEST_CASE("lattice ordering and indexing") {
  const auto l = enumerate_subgroups(make("sym:4"));
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto& a = l.at(i);
    const auto& b = l.at(i + 1);
    CHECK((a.size() < b.size() || (a.size() == b.size() && ElementSet::lex_less(a, b))));
  }
  CHECK(l.at(1).size() == 1);
  CHECK(l.at(l.size()).size() == 24);
  for (std::size_t i = 1; i <= l.size(); ++i) CHECK(l.index_of(l.at(i)) == i);
  CHECK_THROWS_AS(l.at(0), Error);
  CHECK_THROWS_AS(l.at(l.size() + 1), Error);

  const auto again = enumerate_subgroups(make("sym:4"));
  REQUIRE(again.size() == l.size());
  for (std::size_t i = 1; i <= l.size(); ++i) CHECK(again.at(i) == l.at(i));
}

TEST_CASE("lattice matches brute-force subset scan up to order 24") {
  auto specs = tppb::testing::builtin_catalog();
  for (const auto& s : tppb::testing::fixture_specs()) specs.push_back(s);
  for (const auto& spec : specs) {
    const Group g = make(spec);
    if (g.order() > 24) continue;
    CAPTURE(spec);
    auto expected = tppb::testing::brute_force_subgroups(g);
    std::vector<std::uint32_t> got;
    const auto lattice = enumerate_subgroups(g);
    for (const auto& s : lattice.items()) got.push_back(mask_of(s));
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("lattice is closed under intersection") {
  for (const char* spec : {"sym:4", "dihedral:12", "product(cyclic:2,dicyclic:8)", "alt:4"}) {
    CAPTURE(spec);
    const auto l = enumerate_subgroups(make(spec));
    for (const auto& a : l.items())
      for (const auto& b : l.items()) CHECK(l.index_of(a & b).has_value());
  }
}

TEST_CASE("normality and cores") {
  const Group s3 = make("sym:3");
  const auto l3 = enumerate_subgroups(s3);
  const auto c2 = subgroup_of_order(l3, 2);
  CHECK_FALSE(is_normal(s3, c2));
  CHECK(normal_core(s3, c2).size() == 1);
  CHECK(is_normal(s3, subgroup_of_order(l3, 3)));
  CHECK(normal_core(s3, subgroup_of_order(l3, 3)).size() == 3);

  const Group s4 = make("sym:4");
  const auto l4 = enumerate_subgroups(s4);
  const auto cores = core_orders(s4, l4);
  REQUIRE(cores.size() == l4.size());
  int d8 = 0;
  for (std::size_t i = 0; i < l4.size(); ++i) {
    const auto& s = l4.items()[i];
    // Oracle: intersect all conjugates directly.
    ElementSet core = s;
    for (Element g = 0; g < s4.order(); ++g) {
      ElementSet conj(s4.order());
      s.for_each([&](Element x) { conj.insert(s4.conj(g, x)); });
      core &= conj;
    }
    CHECK(cores[i] == core.size());
    CHECK(core.is_subset_of(s));
    CHECK(is_normal(s4, normal_core(s4, s)));
    if (s.size() == 8) {
      ++d8;
      CHECK(cores[i] == 4);
    }
  }
  CHECK(d8 == 3);

  for (const char* spec : {"dicyclic:8", "cyclic:12", "product(dicyclic:8,cyclic:2)", "product(dicyclic:8,cyclic:3)"}) {
    const Group g = make(spec);
    const auto lattice = enumerate_subgroups(g);
    for (const auto& s : lattice.items()) CHECK(is_normal(g, s));
  }
}

TEST_CASE("subgroup predicates and errors") {
  const Group s3 = make("sym:3");
  CHECK(is_subgroup(s3, ElementSet::of(6, {0})));
  CHECK(is_subgroup(s3, ElementSet::full(6)));
  CHECK_FALSE(is_subgroup(s3, ElementSet::of(6, {1})));
  CHECK_FALSE(is_subgroup(s3, ElementSet(6)));
  Element t1 = 0, t2 = 0;
  for (Element x = 1; x < 6; ++x)
    if (element_order(s3, x) == 2) (t1 == 0 ? t1 : t2) = x;
  CHECK_FALSE(is_subgroup(s3, ElementSet::of(6, {0, t1, t2})));
  try {
    normal_core(s3, ElementSet::of(6, {0, t1, t2}));
    FAIL("expected NotASubgroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASubgroup);
  }
  try {
    enumerate_subgroups(make("sym:4"), LatticeOptions{10});
    FAIL("expected LatticeLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LatticeLimitExceeded);
  }
}
