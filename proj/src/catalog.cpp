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

#include "tppb/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <thread>

#include "tppb/error.hpp"

namespace tppb {

bool operator==(const ProductSource& a, const ProductSource& b) {
  return *a.left == *b.left && *a.right == *b.right;
}

// ---- spec grammar -------------------------------------------------------

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    spec.name = std::string(text_);
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "at position " + std::to_string(pos_) + " in '" +
                                           std::string(text_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(std::string_view(&c, 1))) fail(std::string("expected '") + c + "'");
  }

  std::uint32_t integer() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  GroupSpec parse_spec() {
    skip_ws();
    if (consume("product(")) {
      GroupSpec left = parse_spec();
      expect(',');
      GroupSpec right = parse_spec();
      expect(')');
      return GroupSpec{ProductSource{std::make_shared<const GroupSpec>(std::move(left)),
                                     std::make_shared<const GroupSpec>(std::move(right))},
                       {}};
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) fail("expected a group family, 'perm', 'table' or 'product('");
    if (pos_ >= text_.size() || text_[pos_] != ':') fail("expected ':' after '" + std::string(word) + "'");
    ++pos_;

    if (word == "perm" || word == "table") {
      const std::size_t p0 = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      std::string path(text_.substr(p0, pos_ - p0));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      if (path.empty()) fail("empty path");
      if (word == "perm") return GroupSpec{PermFileSource{std::move(path)}, {}};
      return GroupSpec{TableFileSource{std::move(path)}, {}};
    }

    BuiltinSpec b;
    b.family = parse_family(word);
    b.parameter = integer();
    if (b.family == Family::ElementaryAbelian) {
      if (!consume("^")) fail("elem_abelian expects p^k");
      b.power = integer();
    }
    validate_builtin(b);
    return GroupSpec{b, {}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty group spec");
  return SpecParser(text).parse();
}

std::string render_group_spec(const GroupSpec& spec) {
  struct Visitor {
    std::string operator()(const BuiltinSpec& b) const {
      std::string s = std::string(family_name(b.family)) + ":" + std::to_string(b.parameter);
      if (b.family == Family::ElementaryAbelian) s += "^" + std::to_string(b.power);
      return s;
    }
    std::string operator()(const PermFileSource& p) const { return "perm:" + p.path; }
    std::string operator()(const TableFileSource& t) const { return "table:" + t.path; }
    std::string operator()(const ProductSource& p) const {
      return "product(" + render_group_spec(*p.left) + "," + render_group_spec(*p.right) + ")";
    }
  };
  return std::visit(Visitor{}, spec.source);
}

std::optional<std::uint64_t> static_order(const GroupSpec& spec) {
  if (const auto* b = std::get_if<BuiltinSpec>(&spec.source)) return builtin_order(*b);
  if (const auto* p = std::get_if<ProductSource>(&spec.source)) {
    const auto l = static_order(*p->left), r = static_order(*p->right);
    if (l && r) return *l * *r;
  }
  return std::nullopt;
}

Group realize(const GroupSpec& spec, const RealizeOptions& options) {
  const auto resolve = [&](const std::string& path) {
    std::filesystem::path p(path);
    return p.is_relative() && !options.base_dir.empty() ? options.base_dir / p : p;
  };
  if (const auto* b = std::get_if<BuiltinSpec>(&spec.source)) return builtin(*b, options.order_limit);
  if (const auto* p = std::get_if<PermFileSource>(&spec.source))
    return load_pgens(resolve(p->path), options.order_limit);
  if (const auto* t = std::get_if<TableFileSource>(&spec.source)) {
    TableOptions topt = options.table;
    topt.max_order = std::min(topt.max_order, options.order_limit);
    return load_ctab(resolve(t->path), topt);
  }
  const auto& prod = std::get<ProductSource>(spec.source);
  return direct_product(realize(*prod.left, options), realize(*prod.right, options), options.order_limit);
}

std::size_t order_limit_from_env() {
  const char* raw = std::getenv("TPPB_ORDER_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultOrderLimit;
  std::size_t v = 0;
  const std::string_view s(raw);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
    throw Error(ErrorKind::BadParameter, "TPPB_ORDER_LIMIT must be a positive integer, got '" + std::string(s) + "'");
  return v;
}

// ---- manifests ----------------------------------------------------------

CatalogManifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  CatalogManifest m;
  m.base_dir = base_dir;
  std::set<std::string> names;
  std::string line;
  std::size_t lineno = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto nonblank = line.find_first_not_of(" \t");
    if (nonblank == std::string::npos || line[nonblank] == '#') continue;
    const std::string where = "manifest line " + std::to_string(lineno) + ": ";

    if (first_content && line.rfind("order=", 0) == 0) {
      first_content = false;
      std::uint64_t v = 0;
      const std::string_view s = std::string_view(line).substr(6);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
        throw Error(ErrorKind::ParseError, where + "bad order header");
      m.declared_order = v;
      continue;
    }
    first_content = false;

    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error(ErrorKind::ParseError, where + "expected name<TAB>spec");
    std::string name = line.substr(0, tab);
    std::string text = line.substr(tab + 1);
    if (name.empty()) throw Error(ErrorKind::ParseError, where + "empty name");
    if (!names.insert(name).second) throw Error(ErrorKind::ParseError, where + "duplicate name '" + name + "'");

    GroupSpec spec = parse_group_spec(text);
    spec.name = name;
    if (m.declared_order) {
      if (const auto o = static_order(spec); o && *o != *m.declared_order)
        throw Error(ErrorKind::InvariantViolation, where + "'" + name + "' has order " + std::to_string(*o) +
                                                       ", manifest declares " + std::to_string(*m.declared_order));
    }
    m.entries.push_back({std::move(name), std::move(spec)});
  }
  return m;
}

CatalogManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return parse_manifest(in, path.parent_path());
}

// ---- reports ------------------------------------------------------------

ReportRow to_report_row(const BoundsReport& r) {
  ReportRow row;
  row.name = r.group_name;
  row.order = r.order;
  row.is_abelian = r.is_abelian;
  row.subgroup_count = r.subgroup_count;
  row.class_count = r.class_count;
  row.d3 = r.d3;
  row.t = r.t;
  row.b = r.b;
  row.h = r.h;
  row.t_le_d3 = r.flags.t_le_d3;
  row.h_le_d3 = r.flags.h_le_d3;
  if (r.beta_g && r.beta_g->exact) row.beta_g = r.beta_g->value;
  return row;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); }
std::string flag(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string csv_header() {
  return "name,order,is_abelian,subgroup_count,class_count,d3,t,b,h,t_le_d3,h_le_d3,beta_g,runtime_ms,error";
}

std::string render_csv_row(const ReportRow& r) {
  std::string out = csv_field(r.name) + ",";
  if (!r.error.empty()) return out + std::string(12, ',') + csv_field(r.error);
  out += std::to_string(r.order) + "," + flag(r.is_abelian) + "," + std::to_string(r.subgroup_count) + "," +
         std::to_string(r.class_count) + "," + std::to_string(r.d3) + "," + std::to_string(r.t) + "," + opt(r.b) +
         "," + std::to_string(r.h) + "," + flag(r.t_le_d3) + "," + flag(r.h_le_d3) + "," + opt(r.beta_g) + "," +
         opt(r.runtime_ms) + ",";
  return out;
}

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::string out = std::string(kCsvSchemaLine) + "\n" + csv_header() + "\n";
  for (const auto& r : rows) out += render_csv_row(r) + "\n";
  return out;
}

std::string BatchSummary::line() const {
  return "order=" + order + " groups=" + std::to_string(groups) + " t_le_d3=" + std::to_string(t_le_d3) +
         " h_le_d3=" + std::to_string(h_le_d3);
}

ReportRow evaluate_entry(const ManifestEntry& entry, const CatalogManifest& manifest, const BatchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  try {
    RealizeOptions ro;
    ro.base_dir = manifest.base_dir;
    ro.order_limit = options.order_limit;
    const Group g = realize(entry.spec, ro);
    if (manifest.declared_order && g.order() != *manifest.declared_order)
      throw Error(ErrorKind::InvariantViolation, "group has order " + std::to_string(g.order()) +
                                                     ", manifest declares " + std::to_string(*manifest.declared_order));
    AnalyzeOptions ao;
    ao.exact_beta = options.exact_beta;
    ao.beta = options.beta;
    ReportRow row = to_report_row(compute_bounds_report(g, entry.name, ao));
    if (options.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      row.runtime_ms = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
    }
    return row;
  } catch (const std::exception& e) {
    ReportRow row;
    row.name = entry.name;
    row.error = e.what();
    return row;
  }
}

BatchResult run_batch(const CatalogManifest& manifest, const BatchOptions& options) {
  BatchResult result;
  const std::size_t count = manifest.entries.size();
  result.rows.resize(count);

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, count));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++)
      result.rows[i] = evaluate_entry(manifest.entries[i], manifest, options);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker);
  }

  auto& s = result.summary;
  std::set<std::uint64_t> orders;
  for (const auto& row : result.rows) {
    if (!row.error.empty()) {
      ++s.failures;
      continue;
    }
    ++s.groups;
    s.t_le_d3 += row.t_le_d3;
    s.h_le_d3 += row.h_le_d3;
    orders.insert(row.order);
  }
  if (manifest.declared_order) s.order = std::to_string(*manifest.declared_order);
  else if (orders.size() == 1) s.order = std::to_string(*orders.begin());
  else s.order = orders.empty() ? "none" : "mixed";
  return result;
}

std::string render_analysis(const BoundsReport& r, bool verbose) {
  std::ostringstream out;
  out << "group: " << r.group_name << "\n";
  out << "order: " << r.order << "  abelian: " << (r.is_abelian ? "yes" : "no")
      << "  subgroups: " << r.subgroup_count << "  classes: " << r.class_count << "\n";
  out << "degrees:";
  for (auto d : r.degrees.degrees()) out << ' ' << d;
  out << "\n";
  out << "D3: " << r.d3 << "\n";
  out << "t: " << r.t << "\n";
  out << "N: " << r.n_index << "\n";
  out << "b: " << (r.b ? std::to_string(*r.b) : "(none)") << "\n";
  out << "h: " << r.h << "\n";
  if (r.beta_g) {
    const auto& w = r.beta_g->witness;
    out << "beta_g: " << r.beta_g->value << (r.beta_g->exact ? "" : " (lower bound, budget exhausted)")
        << "  witness: S_" << w[0] << ", S_" << w[1] << ", S_" << w[2] << "  checks: " << r.beta_g->checks << "\n";
  }
  out << "t<=D3: " << flag(r.flags.t_le_d3) << "  h<=D3: " << flag(r.flags.h_le_d3);
  if (r.flags.beta_le_d3) out << "  beta_g<=D3: " << flag(*r.flags.beta_le_d3);
  out << "\n";
  if (r.beta_g && r.beta_g->exact) {
    out << "omega bound (heuristic): ";
    try {
      const auto w = solve_omega_bound(r.beta_g->value, r.degrees);
      if (w) {
        std::ostringstream num;
        num.imbue(std::locale::classic());
        num.precision(9);
        num << std::fixed << *w;
        out << num.str() << "\n";
      } else {
        out << "none (beta_g <= D3)\n";
      }
    } catch (const Error& e) {
      out << e.what() << "\n";
    }
  }
  if (verbose) {
    out << "candidates (i in [4, N]):\n";
    if (r.rows.empty()) out << "  (empty range)\n";
    for (const auto& c : r.rows) {
      out << "  i=" << c.i << " |S_i|=" << c.order << " core=" << c.core_order
          << " delta=" << (c.delta ? std::to_string(*c.delta) : "-") << " left=" << c.left
          << " right=" << (c.right ? std::to_string(*c.right) : "-")
          << " min=" << (c.minimum ? std::to_string(*c.minimum) : "-") << "\n";
    }
  }
  return out.str();
}

ElementSet parse_element_list(const Group& g, std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  tokens.push_back(cur);

  ElementSet out(g.order());
  for (auto tok : tokens) {
    const auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
    const bool numeric = std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (numeric) {
      std::size_t v = 0;
      std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (v >= g.order()) throw Error(ErrorKind::UnknownElement, "element index " + tok + " out of range");
      out.insert(static_cast<Element>(v));
      continue;
    }
    const auto labels = g.labels();
    const auto it = std::find(labels.begin(), labels.end(), tok);
    if (it == labels.end()) throw Error(ErrorKind::UnknownElement, "no element labelled '" + tok + "'");
    out.insert(static_cast<Element>(it - labels.begin()));
  }
  if (out.empty()) throw Error(ErrorKind::EmptySet, "element list is empty");
  return out;
}

}  // namespace tppb
