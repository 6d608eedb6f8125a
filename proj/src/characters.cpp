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

#include "tppb/characters.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>

#include "tppb/error.hpp"

namespace tppb {

// ---- CharacterDegrees ---------------------------------------------------

CharacterDegrees CharacterDegrees::validated(std::uint64_t group_order,
                                             std::vector<std::uint64_t> degrees) {
  const auto fail = [](const std::string& why) { throw Error(ErrorKind::InvariantViolation, why); };
  if (group_order == 0) fail("group order must be positive");
  if (degrees.empty()) fail("degree list is empty");
  std::sort(degrees.begin(), degrees.end());
  std::uint64_t squares = 0;
  for (std::uint64_t d : degrees) {
    if (d == 0) fail("degree 0 is not a character degree");
    if (group_order % d != 0)
      fail("degree " + std::to_string(d) + " does not divide " + std::to_string(group_order));
    squares += d * d;
  }
  if (squares != group_order)
    fail("sum of squared degrees is " + std::to_string(squares) + ", expected " +
         std::to_string(group_order));
  if (degrees.front() != 1) fail("no degree-1 (trivial) character");
  CharacterDegrees out;
  out.degrees_ = std::move(degrees);
  out.order_ = group_order;
  return out;
}

std::size_t CharacterDegrees::linear_count() const {
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), std::uint64_t{1}));
}

std::uint64_t CharacterDegrees::d_sum_int(unsigned w) const {
  std::uint64_t sum = 0;
  for (std::uint64_t d : degrees_) {
    std::uint64_t p = 1;
    for (unsigned k = 0; k < w; ++k) p *= d;
    sum += p;
  }
  return sum;
}

double CharacterDegrees::d_sum_real(double x) const {
  if (!(x >= 2.0 && x <= 3.0))
    throw Error(ErrorKind::DomainError, "exponent " + std::to_string(x) + " outside [2, 3]");
  double sum = 0.0;
  for (std::uint64_t d : degrees_) sum += std::pow(static_cast<double>(d), x);
  return sum;
}

// ---- prime selection ----------------------------------------------------

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// p > 2 sqrt(n)  <=>  p^2 > 4n
bool admissible(std::uint64_t n, std::uint64_t e, std::uint64_t p) {
  return p % e == 1 % e && p * p > 4 * n && is_prime(p);
}

constexpr std::uint64_t kPrimeSearchCap = 100'000'000;

}  // namespace

std::uint64_t next_dixon_prime(std::uint64_t n, std::uint64_t e, std::uint64_t p) {
  if (e == 0) e = 1;
  // Walk the residue class 1 mod e upwards from p + 1.
  std::uint64_t c = p + 1;
  if (const std::uint64_t r = c % e; r != 1 % e) c += (e + 1 - r) % e;
  for (; c < kPrimeSearchCap; c += e)
    if (admissible(n, e, c)) return c;
  throw Error(ErrorKind::EigenspaceSplitFailure, "no admissible prime below search cap");
}

std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent) {
  return next_dixon_prime(group_order, exponent, 1);
}

std::uint64_t dixon_prime(const Group& g) { return dixon_prime(g.order(), group_stats(g).exponent); }

// ---- linear algebra over GF(p) ------------------------------------------

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;  // row-major

struct Field {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const {
    std::uint64_t r = 1;
    a %= p;
    for (; k; k >>= 1, a = mul(a, a))
      if (k & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Mat& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const std::uint64_t s = f.inv(a[row][col]);
    for (auto& v : a[row]) v = f.mul(v, s);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::uint64_t factor = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of { x : a x = 0 } for a square matrix.
std::vector<Vec> nullspace(const Field& f, Mat a) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  const auto pivots = rref(f, a, n);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Characteristic polynomial via Hessenberg reduction; coefficients low to high.
Vec charpoly(const Field& f, Mat h) {
  const std::size_t n = h.size();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h[piv][k] == 0) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (auto& row : h) std::swap(row[piv], row[k + 1]);
    }
    const std::uint64_t inv_piv = f.inv(h[k + 1][k]);
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h[i][k] == 0) continue;
      const std::uint64_t u = f.mul(h[i][k], inv_piv);
      for (std::size_t c = 0; c < n; ++c) h[i][c] = f.sub(h[i][c], f.mul(u, h[k + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][k + 1] = f.add(h[r][k + 1], f.mul(u, h[r][i]));
    }
  }
  // p_m = (X - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}
  std::vector<Vec> polys{Vec{1}};
  for (std::size_t m = 0; m < n; ++m) {
    const Vec& prev = polys[m];
    Vec cur(m + 2, 0);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = f.add(cur[d + 1], prev[d]);
      cur[d] = f.sub(cur[d], f.mul(h[m][m], prev[d]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i <= m; ++i) {
      t = f.mul(t, h[m - i + 1][m - i]);
      const std::uint64_t coef = f.mul(t, h[m - i][m]);
      const Vec& q = polys[m - i];
      for (std::size_t d = 0; d < q.size(); ++d) cur[d] = f.sub(cur[d], f.mul(coef, q[d]));
    }
    polys.push_back(std::move(cur));
  }
  return polys[n];
}

std::uint64_t eval(const Field& f, const Vec& poly, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t d = poly.size(); d-- > 0;) acc = f.add(f.mul(acc, x), poly[d]);
  return acc;
}

[[noreturn]] void split_failure(const std::string& why) {
  throw Error(ErrorKind::EigenspaceSplitFailure, why);
}

// Splits the space spanned by `basis` (column vectors of length r) into
// eigenspaces of `m`. The space must be m-invariant.
std::vector<std::vector<Vec>> split_space(const Field& f, const Mat& m, const std::vector<Vec>& basis) {
  const std::size_t r = m.size();
  const std::size_t k = basis.size();

  // Solve basis * A = m * basis for the k x k restriction A.
  Mat aug(r, Vec(2 * k, 0));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      aug[i][c] = basis[c][i];
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc = f.add(acc, f.mul(m[i][j], basis[c][j]));
      aug[i][k + c] = acc;
    }
  }
  const auto pivots = rref(f, aug, k);
  if (pivots.size() != k) split_failure("basis lost rank");
  Mat a(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) a[i][c] = aug[i][k + c];
  for (std::size_t i = k; i < r; ++i)
    for (std::size_t c = k; c < 2 * k; ++c)
      if (aug[i][c] != 0) split_failure("subspace is not invariant under a class matrix");

  const Vec poly = charpoly(f, a);
  std::vector<std::vector<Vec>> parts;
  std::size_t total = 0;
  for (std::uint64_t lambda = 0; lambda < f.p; ++lambda) {
    if (eval(f, poly, lambda) != 0) continue;
    Mat shifted = a;
    for (std::size_t i = 0; i < k; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
    std::vector<Vec> part;
    for (const Vec& x : nullspace(f, shifted)) {
      Vec v(r, 0);
      for (std::size_t c = 0; c < k; ++c)
        if (x[c])
          for (std::size_t i = 0; i < r; ++i) v[i] = f.add(v[i], f.mul(x[c], basis[c][i]));
      part.push_back(std::move(v));
    }
    total += part.size();
    parts.push_back(std::move(part));
    if (total == k) break;
  }
  if (total != k) split_failure("class matrix is not diagonalizable over GF(" + std::to_string(f.p) + ")");
  return parts;
}

}  // namespace

CharacterDegrees character_degrees_mod(const Group& g, std::uint64_t p) {
  const Field f{p};
  const std::size_t n = g.order();
  const auto part = conjugacy_classes(g);
  const std::size_t r = part.classes.size();

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t j = 0; j < r; ++j) {
    const Element rep = part.classes[j].elements().front();
    inverse_class[j] = part.class_of[g.inv(rep)];
  }

  // mats[j][k][l] = #{ x in C_j : x^-1 z_l in C_k } for a fixed z_l in C_l,
  // the structure constants of K_j K_k = sum_l c_jkl K_l.
  std::vector<Mat> mats(r, Mat(r, Vec(r, 0)));
  for (std::size_t l = 0; l < r; ++l) {
    const Element z = part.classes[l].elements().front();
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t j = part.class_of[x];
      const std::size_t k = part.class_of[g.mul(g.inv(static_cast<Element>(x)), z)];
      auto& c = mats[j][k][l];
      c = (c + 1) % p;
    }
  }

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return part.classes[a].size() < part.classes[b].size();
  });

  std::vector<std::vector<Vec>> spaces(1);
  for (std::size_t i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    spaces[0].push_back(std::move(e));
  }
  for (std::size_t j : order) {
    if (j == 0) continue;  // K_1 acts as the identity
    std::vector<std::vector<Vec>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      for (auto& piece : split_space(f, mats[j], space)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
    if (spaces.size() == r) break;
  }
  if (spaces.size() != r) split_failure("common eigenspaces did not separate over GF(" + std::to_string(p) + ")");

  const auto max_degree = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)) + 1.0);
  std::vector<std::uint64_t> degrees;
  for (const auto& space : spaces) {
    const Vec& v = space.front();
    if (v[0] == 0) split_failure("eigenvector vanishes on the identity class");
    const std::uint64_t s = f.inv(v[0]);
    // omega(K_1) = 1, so scale the vector to the central character.
    Vec omega(r);
    for (std::size_t j = 0; j < r; ++j) omega[j] = f.mul(v[j], s);
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < r; ++j)
      sum = f.add(sum, f.mul(f.mul(omega[j], omega[inverse_class[j]]), f.inv(part.classes[j].size() % p)));
    if (sum == 0) split_failure("degenerate orthogonality sum");
    const std::uint64_t d2 = f.mul(n % p, f.inv(sum));
    std::uint64_t found = 0;
    for (std::uint64_t d = 1; d <= max_degree && d * d <= n; ++d)
      if ((d * d) % p == d2) {
        found = d;
        break;
      }
    if (found == 0) split_failure("degree does not lift to an integer <= sqrt(|G|)");
    degrees.push_back(found);
  }
  try {
    return CharacterDegrees::validated(n, std::move(degrees));
  } catch (const Error& e) {
    split_failure(std::string("recovered degrees inconsistent: ") + e.what());
  }
}

CharacterDegrees character_degrees(const Group& g) {
  const std::uint64_t e = group_stats(g).exponent;
  std::uint64_t p = dixon_prime(g.order(), e);
  constexpr int kAttempts = 8;
  for (int attempt = 1;; ++attempt) {
    try {
      return character_degrees_mod(g, p);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::EigenspaceSplitFailure || attempt == kAttempts) throw;
    }
    p = next_dixon_prime(g.order(), e, p);
  }
}

// ---- ingestion ----------------------------------------------------------

std::vector<CharacterDegrees> parse_degree_records(std::istream& in) {
  std::vector<CharacterDegrees> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected '<order>: degrees'");
    std::istringstream head(line.substr(0, colon));
    long long order = 0;
    std::string rest;
    if (!(head >> order) || (head >> rest) || order <= 0)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad group order");
    std::istringstream body(line.substr(colon + 1));
    std::vector<std::uint64_t> degrees;
    long long d = 0;
    while (body >> d) {
      if (d <= 0) throw Error(ErrorKind::InvariantViolation, "line " + std::to_string(lineno) + ": degree must be positive");
      degrees.push_back(static_cast<std::uint64_t>(d));
    }
    if (!body.eof()) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad integer");
    out.push_back(CharacterDegrees::validated(static_cast<std::uint64_t>(order), std::move(degrees)));
  }
  return out;
}

CharacterDegrees ingest_degrees(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  auto records = parse_degree_records(in);
  if (records.size() != 1)
    throw Error(ErrorKind::ParseError, path.string() + ": expected exactly one degree record, found " +
                                           std::to_string(records.size()));
  return std::move(records.front());
}

}  // namespace tppb
