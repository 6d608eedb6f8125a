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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tppb/bounds.hpp"
#include "tppb/catalog.hpp"
#include "tppb/characters.hpp"
#include "tppb/error.hpp"
#include "tppb/tpp.hpp"

namespace {

using namespace tppb;

Group load_group(const std::string& text, std::size_t limit) {
  RealizeOptions ro;
  ro.order_limit = limit;
  return realize(parse_group_spec(text), ro);
}

int cmd_analyze(const std::string& spec, bool exact_beta, bool verbose, std::uint64_t budget) {
  const std::size_t limit = order_limit_from_env();
  const Group g = load_group(spec, limit);
  AnalyzeOptions opts;
  opts.exact_beta = exact_beta;
  if (budget) opts.beta.budget = budget;
  const BoundsReport report = compute_bounds_report(g, spec, opts);
  std::cout << render_analysis(report, verbose);
  std::cout << csv_header() << "\n" << render_csv_row(to_report_row(report)) << "\n";
  return 0;
}

int cmd_batch(const std::string& manifest_path, const std::string& out_path, std::size_t jobs, bool exact_beta,
              bool timing) {
  const CatalogManifest manifest = load_manifest(manifest_path);
  BatchOptions opts;
  opts.jobs = jobs;
  opts.exact_beta = exact_beta;
  opts.timing = timing;
  opts.order_limit = order_limit_from_env();
  const BatchResult result = run_batch(manifest, opts);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + out_path);
  out << render_csv(result.rows);
  out.close();

  for (const auto& row : result.rows)
    if (!row.error.empty()) std::cerr << "error: " << row.name << ": " << row.error << "\n";
  std::cout << result.summary.line() << "\n";
  return result.summary.failures == 0 ? 0 : 1;
}

int cmd_verify(const std::string& spec, const std::string& s, const std::string& t, const std::string& u) {
  const Group g = load_group(spec, order_limit_from_env());
  const auto report = verify_triple_report(g, parse_element_list(g, s), parse_element_list(g, t),
                                           parse_element_list(g, u));
  std::cout << report.text << "\n";
  return report.verdict.holds ? 0 : 1;
}

int cmd_degrees(const std::string& spec) {
  const Group g = load_group(spec, order_limit_from_env());
  const auto deg = character_degrees(g);
  std::cout << g.order() << ":";
  for (auto d : deg.degrees()) std::cout << ' ' << d;
  std::cout << "\n";
  std::cout << "# classes=" << deg.count() << " D3=" << deg.d_sum_int(3) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple product property subgroup capacity bounds for finite groups"};
  app.require_subcommand(1);

  std::string spec, manifest, out_path, s_list, t_list, u_list;
  bool exact_beta = false, verbose = false, timing = false;
  std::size_t jobs = 1;
  std::uint64_t budget = 0;

  auto* analyze = app.add_subcommand("analyze", "Bounds, degrees and exclusion flags for one group");
  analyze->add_option("spec", spec, "Group spec, e.g. sym:4 or product(sym:3,cyclic:4)")->required();
  analyze->add_flag("--exact-beta", exact_beta, "Also run the exact subgroup-capacity search");
  analyze->add_flag("--verbose", verbose, "Print per-candidate rows of b(G)");
  analyze->add_option("--budget", budget, "Cap on TPP checks in the exact search (0 = none)");

  auto* batch = app.add_subcommand("batch", "Evaluate a catalog manifest into a CSV report");
  batch->add_option("manifest", manifest, "Manifest file (name<TAB>spec lines)")->required();
  batch->add_option("--out", out_path, "Output CSV path")->required();
  batch->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  batch->add_flag("--exact-beta", exact_beta, "Run the exact search for every entry");
  batch->add_flag("--timing", timing, "Fill the runtime_ms column (output is then not reproducible)");

  auto* verify = app.add_subcommand("verify-tpp", "Check the triple product property for three subsets");
  verify->add_option("spec", spec, "Group spec")->required();
  verify->add_option("--s", s_list, "Elements of S (indices or labels, comma-separated)")->required();
  verify->add_option("--t", t_list, "Elements of T")->required();
  verify->add_option("--u", u_list, "Elements of U")->required();

  auto* degrees = app.add_subcommand("degrees", "Irreducible character degrees");
  degrees->add_option("spec", spec, "Group spec")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(spec, exact_beta, verbose, budget);
    if (*batch) return cmd_batch(manifest, out_path, jobs, exact_beta, timing);
    if (*verify) return cmd_verify(spec, s_list, t_list, u_list);
    if (*degrees) return cmd_degrees(spec);
  } catch (const std::exception& e) {
    std::cerr << "tppb: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
