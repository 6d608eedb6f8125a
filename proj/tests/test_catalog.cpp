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

#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "oracles.hpp"
#include "tppb/catalog.hpp"
#include "tppb/error.hpp"
#include "tppb/lattice.hpp"

using namespace tppb;
using tppb::testing::make;

namespace {

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected tppb::Error");
  return ErrorKind::IoError;
}

std::vector<std::string> split_csv_simple(const std::string& line) {
  std::vector<std::string> out(1);
  for (char c : line) {
    if (c == ',') out.emplace_back();
    else out.back() += c;
  }
  return out;
}

}  // namespace

TEST_CASE("group spec grammar") {
  const auto s = parse_group_spec("product(sym:3,cyclic:4)");
  CHECK(static_order(s) == std::optional<std::uint64_t>(24));
  CHECK(render_group_spec(s) == "product(sym:3,cyclic:4)");
  CHECK(static_order(parse_group_spec("elem_abelian:2^3")) == std::optional<std::uint64_t>(8));
  CHECK_FALSE(static_order(parse_group_spec("perm:x.pgens")));
  for (const auto& spec : tppb::testing::builtin_catalog()) {
    CAPTURE(spec);
    const auto parsed = parse_group_spec(spec);
    CHECK(parse_group_spec(render_group_spec(parsed)) == parsed);
    CHECK(static_order(parsed) == std::optional<std::uint64_t>(make(spec).order()));
  }
  CHECK(render_group_spec(parse_group_spec("perm:perm/sl2_3.pgens")) == "perm:perm/sl2_3.pgens");

  CHECK(error_kind([] { realize(parse_group_spec("dihedral:7")); }) == ErrorKind::BadParameter);
  CHECK(error_kind([] { parse_group_spec("klein:4"); }) == ErrorKind::UnknownFamily);
  for (const char* bad : {"", "sym", "sym:", "sym:x", "product(sym:3)", "product(sym:3,cyclic:2", "sym:3 trailing",
                          "product(sym:3,cyclic:2))"}) {
    CAPTURE(bad);
    CHECK(error_kind([&] { parse_group_spec(bad); }) == ErrorKind::ParseError);
  }
  try {
    parse_group_spec("product(sym:3;cyclic:2)");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }

  RealizeOptions small;
  small.order_limit = 100;
  CHECK(error_kind([&] { realize(parse_group_spec("sym:5"), small); }) == ErrorKind::OrderLimitExceeded);
}

TEST_CASE("manifests") {
  std::istringstream good("# comment\norder=6\nS3\tsym:3\n\nD6\tdihedral:6\n");
  const auto m = parse_manifest(good);
  REQUIRE(m.entries.size() == 2);
  CHECK(m.declared_order == std::optional<std::uint64_t>(6));
  CHECK(m.entries[1].name == "D6");

  std::istringstream dup("A\tsym:3\nA\tcyclic:6\n");
  CHECK(error_kind([&] { parse_manifest(dup); }) == ErrorKind::ParseError);
  std::istringstream notab("A sym:3\n");
  CHECK(error_kind([&] { parse_manifest(notab); }) == ErrorKind::ParseError);
  std::istringstream wrong("order=8\nA\tsym:3\n");
  CHECK(error_kind([&] { parse_manifest(wrong); }) == ErrorKind::InvariantViolation);
  std::istringstream badspec("A\tsym:\n");
  CHECK(error_kind([&] { parse_manifest(badspec); }) == ErrorKind::ParseError);
  std::istringstream badparam("A\tdihedral:9\n");
  CHECK(error_kind([&] { parse_manifest(badparam); }) == ErrorKind::BadParameter);
  CHECK(error_kind([] { load_manifest("/nonexistent/m.tsv"); }) == ErrorKind::IoError);

  std::istringstream empty("# nothing here\n");
  const auto e = parse_manifest(empty);
  const auto r = run_batch(e);
  CHECK(render_csv(r.rows) == std::string(kCsvSchemaLine) + "\n" + csv_header() + "\n");
  CHECK(r.summary.groups == 0);
  CHECK(r.summary.line() == "order=none groups=0 t_le_d3=0 h_le_d3=0");
}

TEST_CASE("csv rendering") {
  ReportRow row;
  row.name = "a,\"b\"";
  row.error = "boom";
  const auto line = render_csv_row(row);
  CHECK(line == "\"a,\"\"b\"\"\",,,,,,,,,,,,,boom");

  AnalyzeOptions opts;
  opts.exact_beta = true;
  const auto rep = compute_bounds_report(make("sym:3"), "S3", opts);
  CHECK(render_csv_row(to_report_row(rep)) == "S3,6,false,6,3,10,8,8,8,true,true,8,,");
  CHECK(split_csv_simple(csv_header()).size() == 14);
}

TEST_CASE("batch summary matches the rows") {
  const auto m = load_manifest(tppb::testing::catalog_path("order24.tsv"));
  BatchOptions opts;
  opts.jobs = 4;
  const auto r = run_batch(m, opts);
  REQUIRE(r.rows.size() == m.entries.size());
  std::size_t t = 0, h = 0;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(r.rows[i].name == m.entries[i].name);
    CHECK(r.rows[i].error.empty());
    CHECK(r.rows[i].order == 24);
    CHECK_FALSE(r.rows[i].is_abelian);
    CHECK_FALSE(r.rows[i].runtime_ms);
    t += r.rows[i].t_le_d3;
    h += r.rows[i].h_le_d3;
  }
  CHECK(r.summary.t_le_d3 == t);
  CHECK(r.summary.h_le_d3 == h);
  CHECK(r.summary.groups == 12);
  CHECK(r.summary.order == "24");

  std::istringstream mixed("A\tsym:3\nB\tcyclic:4\nC\tperm:/nonexistent/x.pgens\n");
  const auto rm = run_batch(parse_manifest(mixed));
  CHECK(rm.summary.failures == 1);
  CHECK(rm.summary.groups == 2);
  CHECK(rm.summary.order == "mixed");
  CHECK_FALSE(rm.rows[2].error.empty());
}

TEST_CASE("fixture groups are pairwise distinct") {
  using Fingerprint = std::tuple<std::uint64_t, std::map<std::uint64_t, std::size_t>, std::size_t, std::size_t,
                                 std::size_t, std::size_t>;
  std::set<Fingerprint> seen;
  const auto specs = tppb::testing::fixture_specs();
  for (const auto& spec : specs) {
    CAPTURE(spec);
    const Group g = make(spec);
    std::map<std::uint64_t, std::size_t> orders;
    for (Element e = 0; e < g.order(); ++e) ++orders[element_order(g, e)];
    const Fingerprint fp{g.order(), orders, enumerate_subgroups(g).size(), conjugacy_classes(g).classes.size(),
                         center(g).size(), derived_subgroup(g).size()};
    CHECK(seen.insert(fp).second);
    CHECK_FALSE(group_stats(g).is_abelian);
  }
  CHECK(specs.size() == 15);
}

TEST_CASE("element lists") {
  const Group s3 = make("sym:3");
  CHECK(parse_element_list(s3, "0") == ElementSet::of(6, {0}));
  CHECK(parse_element_list(s3, "0, 1,2") == ElementSet::of(6, {0, 1, 2}));
  CHECK(parse_element_list(s3, "[1 2 3],[2 1 3]").size() == 2);
  CHECK(parse_element_list(s3, "[1 2 3],[2 1 3]").contains(0));
  CHECK(error_kind([&] { parse_element_list(s3, "9"); }) == ErrorKind::UnknownElement);
  CHECK(error_kind([&] { parse_element_list(s3, "[3 3 3]"); }) == ErrorKind::UnknownElement);
  CHECK(error_kind([&] { parse_element_list(s3, ""); }) == ErrorKind::EmptySet);

  const Group p = make("product(cyclic:2,cyclic:3)");
  CHECK(p.label(5).front() == '(');
  CHECK(parse_element_list(p, p.label(0) + "," + p.label(5)) == ElementSet::of(6, {0, 5}));
}
