/**
 * Exact rational scalars and dense linear algebra over them.
 *
 * Every geometric decision in the library (extremality, tightness of a
 * frame, equality of invariants) is taken on values from this header, so
 * nothing here ever touches floating point except the explicit
 * `to_double` conversion used for reporting.
 */
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hadwiger {

/// Precondition violated by the caller (wrong dimension, degenerate input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed external input (bad rational string, bad JSON shape).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; only string construction needs an explicit
// canonicalize(), which parse_rational does.
using Rational = mpq_class;
using Integer = mpz_class;
using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

/// Parses "p" or "p/q" with an optional leading sign. Decimal points and
/// exponents are rejected.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  // Accept the typographic minus sign U+2212 as well as '-'.
  if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
  auto fail = [&] { throw ParseError("not an exact rational: \"" + std::string(text) + "\""); };
  if (s.empty()) fail();
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  const std::size_t slash = s.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k) {
      if (s[k] < '0' || s[k] > '9') return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(i, s.size())) fail();
  } else {
    if (!digits(i, slash) || !digits(slash + 1, s.size())) fail();
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) fail();
  if (r.get_den() == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

// ---------------------------------------------------------------------------
// Vector helpers

inline RVector zero_vector(std::size_t n) { return RVector(n, Rational(0)); }

inline bool is_zero(const RVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline Rational dot(const RVector& a, const RVector& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RVector operator+(const RVector& a, const RVector& b) {
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RVector operator-(const RVector& a, const RVector& b) {
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RVector operator-(const RVector& a) {
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline RVector operator*(const Rational& s, const RVector& a) {
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

/// Positive multiple of v with coprime integer entries. Zero maps to zero.
inline RVector primitive_integer(const RVector& v) {
  Integer l(1);
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g(0);
  for (const auto& x : v) {
    Integer k = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    ints.push_back(std::move(k));
  }
  RVector r(v.size());
  if (g == 0) return zero_vector(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(Integer(ints[i] / g));
  return r;
}

// ---------------------------------------------------------------------------
// Matrices

struct RrefResult {
  RMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination. Zero rows are
/// kept (at the bottom) so the shape of the input is preserved.
inline RrefResult rref(RMatrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RMatrix& m) { return rref(m).pivots.size(); }

/// Kernel basis read off the RREF: one vector per free column j (in index
/// order) with x_j = 1, the other free variables 0, and the pivot variables
/// solved for.
inline std::vector<RVector> kernel_basis(const RMatrix& m, std::size_t cols) {
  const auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    RVector v = zero_vector(cols);
    v[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<RVector> kernel_basis(const RMatrix& m) {
  if (m.empty()) throw DomainError("kernel_basis: column count of an empty matrix is ambiguous");
  return kernel_basis(m, m[0].size());
}

/// Determinant of a square matrix by Gaussian elimination.
inline Rational determinant(RMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

inline Rational gram_determinant(const std::vector<RVector>& vs) {
  RMatrix g(vs.size(), RVector(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      g[i][j] = dot(vs[i], vs[j]);
      g[j][i] = g[i][j];
    }
  }
  return determinant(std::move(g));
}

/// Solves the square system a x = b; throws if a is singular.
inline RVector solve(RMatrix a, RVector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto [red, pivots] = rref(std::move(a));
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) throw DomainError("solve: singular system");
  RVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = red[i][n];
  return x;
}

}  // namespace hadwiger
