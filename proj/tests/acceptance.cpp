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

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1 for ctest).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "tppb/bounds.hpp"
#include "tppb/catalog.hpp"
#include "tppb/characters.hpp"
#include "tppb/lattice.hpp"
#include "tppb/tpp.hpp"

#ifndef TPPB_CLI_PATH
#define TPPB_CLI_PATH "tppb"
#endif

using namespace tppb;
using tppb::testing::make;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;  // keep the first problem
    ok = false;
  }
};

struct Analysed {
  Group g;
  SubgroupLattice lattice;
  std::vector<std::size_t> cores;
};

Analysed analyse(const std::string& spec) {
  Analysed a{make(spec), {}, {}};
  a.lattice = enumerate_subgroups(a.g);
  a.cores = core_orders(a.g, a.lattice);
  return a;
}

std::vector<std::string> catalog_upto(std::uint64_t max_order, bool with_fixtures) {
  auto specs = tppb::testing::builtin_catalog();
  if (with_fixtures)
    for (const auto& s : tppb::testing::fixture_specs()) specs.push_back(s);
  std::vector<std::string> out;
  for (const auto& s : specs) {
    const auto o = static_order(parse_group_spec(s));
    if ((o ? *o : make(s).order()) <= max_order) out.push_back(s);
  }
  return out;
}

// Tolerances: runtime budgets in seconds, pinned here.
constexpr double kChainSeconds = 120.0;
constexpr double kOrder24Seconds = 60.0;
constexpr double kOrder50Seconds = 10.0;
constexpr double kCharacterSeconds = 60.0;

void check_time(Outcome& o, Clock::time_point start, double budget) {
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream msg;
  msg.precision(3);
  msg << std::fixed << s << "s";
  if (s > budget) o.fail("took " + msg.str() + ", budget " + std::to_string(static_cast<int>(budget)) + "s");
  if (o.ok) o.detail = msg.str();
}

Outcome chain_property() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t groups = 0;
  for (const auto& spec : catalog_upto(48, false)) {
    const auto a = analyse(spec);
    const auto n = a.g.order();
    const auto beta = search_beta_g(a.g, a.lattice, a.cores);
    const auto h = compute_h(n, a.lattice, a.cores).h;
    const auto t = compute_t(n, a.lattice);
    ++groups;
    if (!beta.exact || !(beta.value <= h && h <= t))
      o.fail(spec + ": beta=" + std::to_string(beta.value) + " h=" + std::to_string(h) + " t=" + std::to_string(t));
  }
  check_time(o, start, kChainSeconds);
  if (o.ok) o.detail = std::to_string(groups) + " groups, " + o.detail;
  return o;
}

Outcome s3_end_to_end() {
  Outcome o;
  AnalyzeOptions opts;
  opts.exact_beta = true;
  const Group g = make("sym:3");
  const auto r = compute_bounds_report(g, "sym:3", opts);
  if (r.t != 8) o.fail("t=" + std::to_string(r.t));
  if (r.b != std::optional<std::uint64_t>(8)) o.fail("b mismatch");
  if (r.h != 8) o.fail("h=" + std::to_string(r.h));
  if (r.d3 != 10) o.fail("D3=" + std::to_string(r.d3));
  if (!r.beta_g || r.beta_g->value != 8) {
    o.fail("beta_g mismatch");
  } else {
    const auto l = enumerate_subgroups(g);
    const auto [i, j, k] = r.beta_g->witness;
    if (i == j || j == k || i == k) o.fail("witness subgroups not distinct");
    for (auto x : {i, j, k})
      if (l.order_at(x) != 2) o.fail("witness subgroup of order " + std::to_string(l.order_at(x)));
  }
  if (!r.flags.t_le_d3 || !r.flags.h_le_d3) o.fail("exclusion flags not both true");
  if (o.ok) o.detail = "t=8 b=8 h=8 beta_g=8 D3=10";
  return o;
}

Outcome table_row(const std::string& file, std::size_t groups, std::size_t t, std::size_t h, double budget) {
  Outcome o;
  const auto start = Clock::now();
  BatchOptions opts;
  const auto r = run_batch(load_manifest(tppb::testing::catalog_path(file)), opts);
  const auto& s = r.summary;
  if (s.failures) o.fail(std::to_string(s.failures) + " entries failed");
  if (s.groups != groups || s.t_le_d3 != t || s.h_le_d3 != h) o.fail(s.line());
  check_time(o, start, budget);
  if (o.ok) o.detail = s.line() + ", " + o.detail;
  return o;
}

Outcome abelian_triviality() {
  Outcome o;
  std::size_t groups = 0;
  for (const auto& spec : catalog_upto(64, false)) {
    const auto a = analyse(spec);
    if (!group_stats(a.g).is_abelian) continue;
    ++groups;
    const auto n = a.g.order();
    const auto h = compute_h(n, a.lattice, a.cores).h;
    const auto beta = search_beta_g(a.g, a.lattice, a.cores).value;
    const auto d3 = character_degrees(a.g).d_sum_int(3);
    if (h != n || beta != n || d3 != n)
      o.fail(spec + ": h=" + std::to_string(h) + " beta=" + std::to_string(beta) + " D3=" + std::to_string(d3));
  }
  if (o.ok) o.detail = std::to_string(groups) + " abelian groups";
  return o;
}

Outcome character_invariants() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t groups = 0;
  for (const auto& spec : catalog_upto(100, true)) {
    const Group g = make(spec);
    const auto deg = character_degrees(g);
    ++groups;
    std::uint64_t sq = 0;
    bool divides = true;
    for (auto d : deg.degrees()) {
      sq += d * d;
      divides &= g.order() % d == 0;
    }
    if (sq != g.order()) o.fail(spec + ": sum of squares " + std::to_string(sq));
    if (!divides) o.fail(spec + ": degree does not divide order");
    if (deg.count() != conjugacy_classes(g).classes.size()) o.fail(spec + ": degree count != class count");
    if (deg.linear_count() != g.order() / derived_subgroup(g).size()) o.fail(spec + ": linear count mismatch");
  }
  // Inner-product oracle for Sym(4): characters from fixed points, sign, and
  // the action on unordered pairs, each of norm 1.
  const Group s4 = make("sym:4");
  std::vector<std::uint64_t> oracle;
  {
    const std::size_t n = s4.order();
    std::vector<std::vector<long>> ch(5, std::vector<long>(n));
    for (Element e = 0; e < n; ++e) {
      std::istringstream in(s4.label(e).substr(1, s4.label(e).size() - 2));
      std::vector<int> p;
      for (int x; in >> x;) p.push_back(x - 1);
      int fix = 0, pairs = 0, inversions = 0;
      for (int i = 0; i < 4; ++i) {
        fix += p[i] == i;
        for (int j = i + 1; j < 4; ++j) {
          pairs += (p[i] == i && p[j] == j) || (p[i] == j && p[j] == i);
          inversions += p[i] > p[j];
        }
      }
      const long sg = inversions % 2 ? -1 : 1;
      ch[0][e] = 1;
      ch[1][e] = sg;
      ch[2][e] = fix - 1;
      ch[3][e] = (fix - 1) * sg;
      ch[4][e] = pairs - fix;
    }
    for (std::size_t i = 0; i < ch.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        long s = 0;
        for (Element e = 0; e < n; ++e) s += ch[i][e] * ch[j][s4.inv(e)];
        if (s != (i == j ? static_cast<long>(n) : 0)) o.fail("sym:4 oracle characters not orthonormal");
      }
      oracle.push_back(static_cast<std::uint64_t>(ch[i][0]));
    }
    std::sort(oracle.begin(), oracle.end());
  }
  const std::vector<std::uint64_t> expected{1, 1, 2, 3, 3};
  if (oracle != expected) o.fail("sym:4 oracle disagrees with {1,1,2,3,3}");
  if (character_degrees(s4).degrees() != expected) o.fail("sym:4 degrees differ from {1,1,2,3,3}");
  check_time(o, start, kCharacterSeconds);
  if (o.ok) o.detail = std::to_string(groups) + " groups, " + o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t beta_groups = 0, lattice_groups = 0;
  for (const auto& spec : catalog_upto(24, true)) {
    const auto a = analyse(spec);
    if (a.g.order() <= 16) {
      ++beta_groups;
      std::vector<std::vector<Element>> members;
      for (const auto& s : a.lattice.items()) members.push_back(s.elements());
      const auto want = tppb::testing::naive_beta(a.g, members);
      const auto got = search_beta_g(a.g, a.lattice, a.cores);
      if (got.value != want.value) o.fail(spec + ": pruned " + std::to_string(got.value) + " vs naive " +
                                          std::to_string(want.value));
    }
    ++lattice_groups;
    auto expected = tppb::testing::brute_force_subgroups(a.g);
    std::vector<std::uint32_t> got;
    for (const auto& s : a.lattice.items()) {
      std::uint32_t m = 0;
      s.for_each([&](Element e) { m |= 1u << e; });
      got.push_back(m);
    }
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (got != expected) o.fail(spec + ": lattice differs from subset scan");
  }
  if (o.ok)
    o.detail = std::to_string(beta_groups) + " capacity checks, " + std::to_string(lattice_groups) + " lattice checks";
  return o;
}

Outcome tpp_properties() {
  Outcome o;
  tppb::testing::Gen gen(20261015);
  std::vector<Group> groups;
  for (const auto& spec : catalog_upto(12, false)) groups.push_back(make(spec));
  std::size_t violations = 0, held = 0;
  for (int k = 0; k < 1000; ++k) {
    const Group& g = groups[gen.below(groups.size())];
    std::array<ElementSet, 3> x{gen.subset(g.order()), gen.subset(g.order()), gen.subset(g.order())};
    const bool base = satisfies_tpp(g, x[0], x[1], x[2]).holds;
    std::array<int, 3> p{0, 1, 2};
    do {
      violations += satisfies_tpp(g, x[p[0]], x[p[1]], x[p[2]]).holds != base;
    } while (std::next_permutation(p.begin(), p.end()));
    if (!base) continue;
    ++held;
    const auto slot = gen.below(3);
    auto y = x;
    y[slot] = gen.subset_of(x[slot]);
    violations += !satisfies_tpp(g, y[0], y[1], y[2]).holds;
    std::array<std::uint64_t, 3> sz{x[0].size(), x[1].size(), x[2].size()};
    std::sort(sz.begin(), sz.end(), std::greater<>());
    violations += !neumann_admissible(g.order(), sz[0], sz[1], sz[2]);
  }
  if (violations) o.fail(std::to_string(violations) + " violations");
  if (o.ok) o.detail = "1000 triples, " + std::to_string(held) + " holding, 0 violations";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("tppb_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string manifest = tppb::testing::catalog_path("order24.tsv");
  std::vector<std::string> outputs;
  int run = 0;
  for (int jobs : {1, 1, 8, 8}) {
    const auto out = dir / ("run" + std::to_string(run++) + ".csv");
    const std::string cmd = std::string("\"") + TPPB_CLI_PATH + "\" batch \"" + manifest + "\" --out \"" +
                            out.string() + "\" --jobs " + std::to_string(jobs) + " > /dev/null";
    if (std::system(cmd.c_str()) != 0) o.fail("tppb batch exited non-zero (jobs " + std::to_string(jobs) + ")");
    outputs.push_back(slurp(out));
  }
  for (std::size_t i = 1; i < outputs.size(); ++i)
    if (outputs[i] != outputs[0]) o.fail("run " + std::to_string(i) + " differs from run 0");
  if (outputs[0].empty()) o.fail("empty CSV");
  std::filesystem::remove_all(dir);
  if (o.ok) o.detail = "4 runs (jobs 1,1,8,8), " + std::to_string(outputs[0].size()) + " bytes each";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"chain beta_g <= h <= t, builtin catalog up to order 48", chain_property},
      {"S3 end-to-end values", s3_end_to_end},
      {"order 24 catalog counts",
       [] { return table_row("order24.tsv", 12, 4, 6, kOrder24Seconds); }},
      {"order 50 catalog counts",
       [] { return table_row("order50.tsv", 3, 1, 2, kOrder50Seconds); }},
      {"abelian groups up to order 64 are trivial", abelian_triviality},
      {"character degree invariants up to order 100", character_invariants},
      {"oracle equivalence (capacity <= 16, lattice <= 24)", oracle_equivalence},
      {"TPP property suite", tpp_properties},
      {"batch CSV is byte-identical across runs and job counts", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << o.detail << ")"
              << std::endl;
  }
  return failed ? 1 : 0;
}
