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

#include "tppb/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "tppb/error.hpp"

namespace tppb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::LatticeLimitExceeded: return "LatticeLimitExceeded";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::UnsortedSizes: return "UnsortedSizes";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EigenspaceSplitFailure: return "EigenspaceSplitFailure";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NoRootInRange: return "NoRootInRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Group make_group_unchecked(std::size_t n, std::vector<Element> table,
                           std::vector<std::string> labels) {
  Group g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto row = g.row(static_cast<Element>(a));
    const auto it = std::find(row.begin(), row.end(), Element{0});
    g.inv_[a] = static_cast<Element>(it - row.begin());
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  g.labels_ = std::move(labels);
  return g;
}

Group from_cayley_table(std::size_t n, const std::vector<std::vector<Element>>& table,
                        const TableOptions& options) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "table order must be positive");
  if (n > options.max_order) {
    throw Error(ErrorKind::OrderLimitExceeded,
                "table of order " + std::to_string(n) + " exceeds validation limit " +
                    std::to_string(options.max_order));
  }
  if (table.size() != n) throw Error(ErrorKind::NotLatinSquare, "expected " + std::to_string(n) + " rows");

  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n)
        throw Error(ErrorKind::NotLatinSquare, "entry out of range in row " + std::to_string(a));
      flat[a * n + b] = table[a][b];
    }
  }

  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[flat[a * n + b]]++)
        throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(a) + " repeats an entry");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[flat[b * n + a]]++)
        throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(a) + " repeats an entry");
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    if (flat[a] != a || flat[a * n] != a)
      throw Error(ErrorKind::NoIdentityAtZero, "row/column 0 is not the identity map");
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = flat[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
          Error err(ErrorKind::NotAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) +
                                                   ")*" + std::to_string(c) + " != " +
                                                   std::to_string(a) + "*(" + std::to_string(b) +
                                                   "*" + std::to_string(c) + ")");
          err.witness = {static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c)};
          throw err;
        }
      }
    }
  }
  return make_group_unchecked(n, std::move(flat));
}

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint32_t>& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::string one_line_label(const std::vector<std::uint32_t>& zero_based) {
  std::string s = "[";
  for (std::size_t i = 0; i < zero_based.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(zero_based[i] + 1);
  }
  s += ']';
  return s;
}

}  // namespace

Group from_permutation_generators(std::size_t degree, std::span<const Permutation> gens,
                                  std::size_t order_limit) {
  if (degree == 0) throw Error(ErrorKind::BadParameter, "degree must be positive");

  std::vector<std::vector<std::uint32_t>> zgens;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& p = gens[gi];
    if (p.size() != degree)
      throw Error(ErrorKind::NotAPermutation,
                  "generator " + std::to_string(gi + 1) + " has " + std::to_string(p.size()) +
                      " images, expected " + std::to_string(degree));
    std::vector<char> hit(degree, 0);
    std::vector<std::uint32_t> z(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      if (p[i] < 1 || p[i] > degree || hit[p[i] - 1]++)
        throw Error(ErrorKind::NotAPermutation,
                    "generator " + std::to_string(gi + 1) + " is not a permutation of 1.." +
                        std::to_string(degree));
      z[i] = p[i] - 1;
    }
    zgens.push_back(std::move(z));
  }

  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);

  // BFS over the right Cayley graph; parent/gen record a spanning tree so the
  // full table can be filled with one lookup per entry.
  std::vector<std::vector<std::uint32_t>> elems{id};
  std::unordered_map<std::vector<std::uint32_t>, Element, PermHash> index{{id, 0}};
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<Element> right;  // right[x * ngens + k] = x * gen_k
  const std::size_t ngens = zgens.size();

  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t k = 0; k < ngens; ++k) {
      std::vector<std::uint32_t> y(degree);
      for (std::size_t i = 0; i < degree; ++i) y[i] = elems[x][zgens[k][i]];
      auto [it, inserted] = index.try_emplace(y, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() + 1 > order_limit)
          throw Error(ErrorKind::OrderLimitExceeded,
                      "closure exceeded order limit " + std::to_string(order_limit) + " after " +
                          std::to_string(elems.size() + 1) + " elements");
        elems.push_back(std::move(y));
        parent.push_back(static_cast<Element>(x));
        via.push_back(static_cast<std::uint32_t>(k));
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Element* row = table.data() + a * n;
    row[0] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right[std::size_t{row[parent[b]]} * ngens + via[b]];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(one_line_label(e));
  return make_group_unchecked(n, std::move(table), std::move(labels));
}

Group direct_product(const Group& a, const Group& b, std::size_t order_limit) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  if (na * nb > order_limit)
    throw Error(ErrorKind::OrderLimitExceeded, "direct product of order " + std::to_string(na * nb) +
                                                   " exceeds limit " + std::to_string(order_limit));
  const std::size_t n = na * nb;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
      table[x * n + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    labels.push_back("(" + a.label(static_cast<Element>(x / nb)) + "," +
                     b.label(static_cast<Element>(x % nb)) + ")");
  return make_group_unchecked(n, std::move(table), std::move(labels));
}

// ---- builtin families ---------------------------------------------------

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Dicyclic: return "dicyclic";
    case Family::Symmetric: return "sym";
    case Family::Alternating: return "alt";
    case Family::ElementaryAbelian: return "elem_abelian";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Cyclic, Family::Dihedral, Family::Dicyclic, Family::Symmetric,
                   Family::Alternating, Family::ElementaryAbelian}) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorKind::UnknownFamily, "unknown group family '" + std::string(name) + "'");
}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

Permutation cycle_perm(std::size_t degree, std::span<const std::uint32_t> cycle) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 1u);
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  return p;
}

// Left-regular representation of a group given by a multiplication rule on 0..n-1.
template <class Mul>
Permutation left_regular(std::size_t n, std::uint32_t g, Mul&& mul) {
  Permutation p(n);
  for (std::uint32_t e = 0; e < n; ++e) p[e] = mul(g, e) + 1;
  return p;
}

}  // namespace

void validate_builtin(const BuiltinSpec& s) {
  const auto bad = [&](const std::string& why) {
    throw Error(ErrorKind::BadParameter,
                std::string(family_name(s.family)) + ":" + std::to_string(s.parameter) + ": " + why);
  };
  if (s.family != Family::ElementaryAbelian && s.power != 1) bad("only elem_abelian takes an exponent");
  switch (s.family) {
    case Family::Cyclic:
    case Family::Symmetric:
    case Family::Alternating:
      if (s.parameter < 1) bad("parameter must be >= 1");
      break;
    case Family::Dihedral:
      if (s.parameter < 4 || s.parameter % 2 != 0) bad("order must be even and >= 4");
      break;
    case Family::Dicyclic:
      if (s.parameter < 4 || s.parameter % 4 != 0) bad("order must be a multiple of 4");
      break;
    case Family::ElementaryAbelian:
      if (!is_prime(s.parameter)) bad("base must be prime");
      if (s.power < 1) bad("exponent must be >= 1");
      break;
  }
}

std::uint64_t builtin_order(const BuiltinSpec& s) {
  switch (s.family) {
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::Dicyclic:
      return s.parameter;
    case Family::Symmetric:
    case Family::Alternating: {
      std::uint64_t f = 1;
      for (std::uint64_t k = 2; k <= s.parameter; ++k) f = saturating_mul(f, k);
      if (s.family == Family::Alternating && s.parameter >= 2) f /= 2;
      return f;
    }
    case Family::ElementaryAbelian: {
      std::uint64_t f = 1;
      for (std::uint32_t k = 0; k < s.power; ++k) f = saturating_mul(f, s.parameter);
      return f;
    }
  }
  return 0;
}

Group builtin(const BuiltinSpec& s, std::size_t order_limit) {
  validate_builtin(s);
  const std::uint64_t order = builtin_order(s);
  if (order > order_limit)
    throw Error(ErrorKind::OrderLimitExceeded, std::string(family_name(s.family)) + " group of order " +
                                                   std::to_string(order) + " exceeds limit " +
                                                   std::to_string(order_limit));
  std::vector<Permutation> gens;
  std::size_t degree = 1;
  const std::uint32_t m = s.parameter;

  switch (s.family) {
    case Family::Cyclic: {
      degree = m;
      std::vector<std::uint32_t> c(m);
      std::iota(c.begin(), c.end(), 1u);
      gens.push_back(cycle_perm(degree, c));
      break;
    }
    case Family::Dihedral: {
      const std::uint32_t k = m / 2;
      if (k == 2) {
        degree = 4;
        gens = {{2, 1, 4, 3}, {3, 4, 1, 2}};
        break;
      }
      degree = k;
      Permutation rot(k), refl(k);
      for (std::uint32_t i = 0; i < k; ++i) {
        rot[i] = (i + 1) % k + 1;
        refl[i] = (k - i) % k + 1;
      }
      gens = {rot, refl};
      break;
    }
    case Family::Dicyclic: {
      // a^i x^j -> i + h*j with a of order h = m/2, x^2 = a^(h/2), x a x^-1 = a^-1.
      const std::uint32_t h = m / 2;
      const auto mul = [h](std::uint32_t g, std::uint32_t e) -> std::uint32_t {
        const std::uint32_t i = g % h, j = g / h, k = e % h, l = e / h;
        std::uint32_t exp = j == 0 ? (i + k) % h : (i + h - k) % h;
        std::uint32_t x = j + l;
        if (x == 2) {
          exp = (exp + h / 2) % h;
          x = 0;
        }
        return exp + h * x;
      };
      degree = m;
      gens = {left_regular(m, 1, mul), left_regular(m, h, mul)};
      break;
    }
    case Family::Symmetric: {
      degree = m;
      if (m >= 2) {
        const std::uint32_t t[] = {1, 2};
        gens.push_back(cycle_perm(degree, t));
      }
      if (m >= 3) {
        std::vector<std::uint32_t> c(m);
        std::iota(c.begin(), c.end(), 1u);
        gens.push_back(cycle_perm(degree, c));
      }
      break;
    }
    case Family::Alternating: {
      degree = m;
      for (std::uint32_t i = 3; i <= m; ++i) {
        const std::uint32_t c[] = {1, 2, i};
        gens.push_back(cycle_perm(degree, c));
      }
      break;
    }
    case Family::ElementaryAbelian: {
      const std::uint32_t p = m;
      degree = std::size_t{p} * s.power;
      for (std::uint32_t b = 0; b < s.power; ++b) {
        std::vector<std::uint32_t> c(p);
        std::iota(c.begin(), c.end(), b * p + 1);
        gens.push_back(cycle_perm(degree, c));
      }
      break;
    }
  }
  return from_permutation_generators(degree, gens, order_limit);
}

// ---- structure ----------------------------------------------------------

ConjugacyPartition conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  ConjugacyPartition part;
  part.class_of.assign(n, kUnset);
  for (std::size_t x = 0; x < n; ++x) {
    if (part.class_of[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(part.classes.size());
    ElementSet cls(n);
    for (std::size_t h = 0; h < n; ++h) {
      const Element y = g.conj(static_cast<Element>(h), static_cast<Element>(x));
      cls.insert(y);
      part.class_of[y] = id;
    }
    part.classes.push_back(std::move(cls));
  }
  return part;
}

ElementSet closure(const Group& g, const ElementSet& seed) {
  const std::size_t n = g.order();
  std::vector<Element> gens = seed.elements();
  std::erase(gens, Group::kIdentity);
  ElementSet out(n);
  out.insert(Group::kIdentity);
  std::vector<Element> queue{Group::kIdentity};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (Element s : gens) {
      const Element y = g.mul(queue[q], s);
      if (!out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  out.set_subgroup_flag(true);
  return out;
}

std::uint64_t element_order(const Group& g, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != Group::kIdentity; y = g.mul(y, x)) ++k;
  return k;
}

ElementSet center(const Group& g) {
  const std::size_t n = g.order();
  ElementSet z(n);
  for (std::size_t a = 0; a < n; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n && central; ++b)
      central = g.mul(static_cast<Element>(a), static_cast<Element>(b)) ==
                g.mul(static_cast<Element>(b), static_cast<Element>(a));
    if (central) z.insert(static_cast<Element>(a));
  }
  z.set_subgroup_flag(true);
  return z;
}

ElementSet derived_subgroup(const Group& g) {
  const std::size_t n = g.order();
  ElementSet comms(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = static_cast<Element>(a), y = static_cast<Element>(b);
      comms.insert(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    }
  return closure(g, comms);
}

GroupStats group_stats(const Group& g) {
  GroupStats st;
  st.order = g.order();
  for (std::size_t x = 0; x < g.order(); ++x)
    st.exponent = std::lcm(st.exponent, element_order(g, static_cast<Element>(x)));
  st.center_size = center(g).size();
  st.is_abelian = st.center_size == st.order;
  return st;
}

// ---- file formats -------------------------------------------------------

namespace {

bool content_line(std::string& line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r") != std::string::npos;
}

}  // namespace

PermGenerators parse_pgens(std::istream& in) {
  PermGenerators out;
  std::string line;
  std::size_t lineno = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content_line(line)) continue;
    std::istringstream ls(line);
    if (!have_degree) {
      std::string kw;
      long long d = 0;
      if (!(ls >> kw >> d) || kw != "degree" || d < 1)
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'degree <d>'");
      out.degree = static_cast<std::size_t>(d);
      have_degree = true;
      continue;
    }
    Permutation p;
    long long v = 0;
    while (ls >> v) {
      if (v < 0) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": negative image");
      p.push_back(static_cast<std::uint32_t>(v));
    }
    if (!ls.eof()) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad integer");
    out.gens.push_back(std::move(p));
  }
  if (!have_degree) throw Error(ErrorKind::ParseError, "missing 'degree' line");
  return out;
}

std::vector<std::vector<Element>> parse_ctab(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1;
  std::vector<std::vector<Element>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content_line(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 1)
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected table order");
      continue;
    }
    std::vector<Element> row;
    long long v = 0;
    while (ls >> v) {
      if (v < 0) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": negative entry");
      row.push_back(static_cast<Element>(v));
    }
    if (!ls.eof()) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad integer");
    rows.push_back(std::move(row));
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "missing table order");
  if (rows.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  return rows;
}

Group load_pgens(const std::filesystem::path& path, std::size_t order_limit) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  const auto pg = parse_pgens(in);
  return from_permutation_generators(pg.degree, pg.gens, order_limit);
}

Group load_ctab(const std::filesystem::path& path, const TableOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  const auto rows = parse_ctab(in);
  return from_cayley_table(rows.size(), rows, options);
}

}  // namespace tppb
