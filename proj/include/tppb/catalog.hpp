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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tppb/bounds.hpp"
#include "tppb/group.hpp"

namespace tppb {

struct GroupSpec;

struct PermFileSource {
  std::string path;
  friend bool operator==(const PermFileSource&, const PermFileSource&) = default;
};

struct TableFileSource {
  std::string path;
  friend bool operator==(const TableFileSource&, const TableFileSource&) = default;
};

struct ProductSource {
  std::shared_ptr<const GroupSpec> left, right;
  friend bool operator==(const ProductSource& a, const ProductSource& b);
};

/// Grammar:
///   spec := family ':' param | 'perm:' path | 'table:' path | 'product(' spec ',' spec ')'
///   param := integer | prime '^' integer   (the latter for elem_abelian only)
/// Paths run to the next ',' or ')' and may not contain either.
struct GroupSpec {
  std::variant<BuiltinSpec, PermFileSource, TableFileSource, ProductSource> source;
  std::string name;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.source == b.source; }
};

GroupSpec parse_group_spec(std::string_view text);
std::string render_group_spec(const GroupSpec& spec);

/// Order known without touching the filesystem (builtins and their products).
std::optional<std::uint64_t> static_order(const GroupSpec& spec);

struct RealizeOptions {
  std::filesystem::path base_dir;  // resolves relative perm:/table: paths
  std::size_t order_limit = kDefaultOrderLimit;
  TableOptions table;
};

Group realize(const GroupSpec& spec, const RealizeOptions& options = {});

/// TPPB_ORDER_LIMIT if set, else the default. Throws BadParameter on junk.
std::size_t order_limit_from_env();

// ---- manifests ----------------------------------------------------------

struct ManifestEntry {
  std::string name;
  GroupSpec spec;
};

struct CatalogManifest {
  std::vector<ManifestEntry> entries;
  std::optional<std::uint64_t> declared_order;
  std::filesystem::path base_dir;
};

/// Lines `name<TAB>spec`; `#` comments; optional first line `order=<n>`.
CatalogManifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir = {});
CatalogManifest load_manifest(const std::filesystem::path& path);

// ---- reports ------------------------------------------------------------

inline constexpr std::string_view kCsvSchemaLine = "# tppb report schema v1";

struct ReportRow {
  std::string name;
  std::uint64_t order = 0;
  bool is_abelian = false;
  std::size_t subgroup_count = 0;
  std::size_t class_count = 0;
  std::uint64_t d3 = 0;
  std::uint64_t t = 0;
  std::optional<std::uint64_t> b;
  std::uint64_t h = 0;
  bool t_le_d3 = false;
  bool h_le_d3 = false;
  std::optional<std::uint64_t> beta_g;
  std::optional<std::uint64_t> runtime_ms;
  std::string error;  // non-empty: the other columns are blank
};

ReportRow to_report_row(const BoundsReport& report);

std::string csv_header();
std::string render_csv_row(const ReportRow& row);
std::string render_csv(const std::vector<ReportRow>& rows);

struct BatchOptions {
  std::size_t jobs = 1;
  bool exact_beta = false;
  bool timing = false;  // off keeps runtime_ms blank so output is reproducible
  std::size_t order_limit = kDefaultOrderLimit;
  BetaSearchOptions beta;
};

struct BatchSummary {
  std::string order;  // declared order, common order, "mixed", or "none"
  std::size_t groups = 0;
  std::size_t t_le_d3 = 0;
  std::size_t h_le_d3 = 0;
  std::size_t failures = 0;

  std::string line() const;
};

struct BatchResult {
  std::vector<ReportRow> rows;  // manifest order
  BatchSummary summary;
};

ReportRow evaluate_entry(const ManifestEntry& entry, const CatalogManifest& manifest,
                         const BatchOptions& options);
BatchResult run_batch(const CatalogManifest& manifest, const BatchOptions& options = {});

/// Human-readable analysis; `verbose` adds the per-candidate rows.
std::string render_analysis(const BoundsReport& report, bool verbose);

/// Resolves a comma-separated list of 0-based indices or element labels.
/// Labels may contain commas inside [...] or (...).
ElementSet parse_element_list(const Group& g, std::string_view text);

}  // namespace tppb
