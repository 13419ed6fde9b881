#include "qk/linalg.hpp"

#include <numeric>

#include "qk/errors.hpp"

namespace qk {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail("invalid-argument", "zero denominator in rational literal: " + s);
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      neg = digits[0] == '-';
      digits = digits.substr(1);
    }
    if (digits.empty()) fail("invalid-argument", "bad rational literal: " + s);
    Int num(digits);
    Int den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational r(num, den);
    return neg ? -r : r;
  }
  return Rational(Int(s));
}

IntVec primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) return v;
  IntVec out = v;
  for (auto& x : out) x /= g;
  for (auto x : out) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : out) y = -y;
      break;
    }
  }
  return out;
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) fail("invalid-argument", "length mismatch in pairing");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

RatMat rat_matrix(const std::vector<IntVec>& rows) {
  RatMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    RatVec row;
    row.reserve(r.size());
    for (auto x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Rational inv = m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

Rational determinant(RatMat m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::optional<RatVec> solve(RatMat m, RatVec b) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<int> pivots = echelon(m);
  // Inconsistent if a pivot landed in the augmented column.
  for (int p : pivots)
    if (p == static_cast<int>(cols)) return std::nullopt;
  RatVec x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
  return x;
}

std::vector<RatVec> nullspace(RatMat m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMat> inverse(const RatMat& m) {
  std::size_t n = m.size();
  RatMat aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
  }
  std::vector<int> pivots = echelon(aug);
  if (pivots.size() != n) return std::nullopt;
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

IntVec primitive_integer(const RatVec& v) {
  Int lcm = 1;
  for (const auto& x : v)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rational scaled = x * lcm;
    out.push_back(boost::multiprecision::numerator(scaled).convert_to<std::int64_t>());
  }
  return primitive(out);
}

}  // namespace qk
