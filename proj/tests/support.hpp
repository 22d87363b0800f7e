// Shared helpers for the test suites: literals, random bodies, and oracles
// that recompute quantities along routes independent of the library's.
#pragma once

#include "hadwiger/exactnum.hpp"
#include "hadwiger/frames.hpp"
#include "hadwiger/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hadwiger::testing {

inline Rational Q(const char* s) { return parse_rational(s); }

inline RVector V(std::initializer_list<long> xs) {
  RVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Frame F(std::initializer_list<RVector> dirs) { return Frame{std::vector<RVector>(dirs)}; }

inline Polytope unit_square() { return hull({V({0, 0}), V({1, 0}), V({1, 1}), V({0, 1})}); }
inline Polytope unit_triangle() { return hull({V({0, 0}), V({1, 0}), V({0, 1})}); }

inline Polytope unit_cube() {
  std::vector<RVector> pts;
  for (long x : {0, 1})
    for (long y : {0, 1})
      for (long z : {0, 1}) pts.push_back(V({x, y, z}));
  return hull(pts);
}

inline Polytope box(const RVector& lo, const RVector& hi) {
  const std::size_t n = lo.size();
  std::vector<RVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? hi[i] : lo[i];
    pts.push_back(p);
  }
  return hull(pts);
}

using Rng = std::mt19937_64;

/// k / den with k uniform in [lo*den, hi*den].
inline Rational random_rational(Rng& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> dist(lo * den, hi * den);
  return Rational(Rational(dist(rng)) / den);
}

inline RVector random_point(Rng& rng, std::size_t n, long lo = -3, long hi = 3, long den = 4) {
  RVector p(n);
  for (auto& x : p) x = random_rational(rng, lo, hi, den);
  return p;
}

/// Hull of random rational points, resampled until full-dimensional.
inline Polytope random_polytope(Rng& rng, std::size_t n, std::size_t min_points = 0, std::size_t max_points = 0) {
  if (min_points == 0) min_points = n + 1;
  if (max_points == 0) max_points = n + 6;
  std::uniform_int_distribution<std::size_t> count(min_points, max_points);
  while (true) {
    std::vector<RVector> pts;
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) pts.push_back(random_point(rng, n));
    Polytope p = hull(pts);
    if (p.full_dimensional()) return p;
  }
}

/// Random hyperplane <a, x> = b through the interior of a full-dimensional P,
/// so both closed sides are full-dimensional.
inline std::pair<RVector, Rational> random_cut(Rng& rng, const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  while (true) {
    RVector a = random_point(rng, n, -3, 3, 1);
    if (is_zero(a)) continue;
    RVector c = zero_vector(n);
    for (const auto& v : p.vertices()) c = c + v;
    c = Rational(1, static_cast<unsigned long>(p.vertices().size())) * c;
    // Shift the level a little away from the centroid, keeping it interior.
    Rational lo = dot(a, p.vertices()[0]), hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, dot(a, v));
      hi = std::max(hi, dot(a, v));
    }
    if (lo == hi) continue;
    std::uniform_int_distribution<int> t(1, 7);
    const Rational level = lo + (hi - lo) * Rational(Rational(t(rng)) / 8);
    auto [plus, minus] = split(p, a, level);
    if (plus && minus && plus->full_dimensional() && minus->full_dimensional()) return {a, level};
  }
}

// ---------------------------------------------------------------------------
// Oracles

/// Facet normals of a convex polygon by brute force over vertex pairs: a pair
/// spans an edge iff every other vertex lies strictly on one side.
inline std::vector<RVector> brute_force_polygon_normals(const std::vector<RVector>& verts) {
  std::vector<RVector> out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const RVector d = verts[j] - verts[i];
      RVector nrm{d[1], Rational(-d[0])};
      int side = 0;
      bool edge = true;
      for (std::size_t k = 0; k < verts.size() && edge; ++k) {
        if (k == i || k == j) continue;
        const int s = sgn(dot(nrm, verts[k] - verts[i]));
        if (s == 0 || (side != 0 && s != side)) edge = false;
        side = s;
      }
      if (!edge) continue;
      if (side > 0) nrm = -nrm;
      out.push_back(primitive_integer(nrm));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Volume of a full-dimensional polytope as a sum of cones from its
/// lexicographically largest vertex: each facet F with normal a, level b and a
/// nonzero coordinate a_j contributes (b - a.w) vol(proj_j F) / (n |a_j|),
/// where proj_j drops coordinate j. Recurses on the projected facets.
inline Rational cone_volume_oracle(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  const auto& verts = p.vertices();
  if (n == 1) return verts.back()[0] - verts.front()[0];
  const RVector& apex = verts.back();
  Rational total(0);
  for (const auto& f : p.facets()) {
    const Rational height = f.offset - dot(f.normal, apex);
    if (sgn(height) == 0) continue;
    std::size_t j = 0;
    while (sgn(f.normal[j]) == 0) ++j;
    std::vector<RVector> projected;
    for (auto vi : f.vertices) {
      RVector q;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) q.push_back(verts[vi][c]);
      }
      projected.push_back(q);
    }
    total += height * cone_volume_oracle(hull(projected)) / abs(f.normal[j]);
  }
  return total / static_cast<unsigned long>(n);
}

struct MonteCarloEstimate {
  double volume;
  double standard_error;
};

/// Hit-or-miss estimate of vol(P) over P's bounding box.
inline MonteCarloEstimate monte_carlo_volume(const Polytope& p, std::size_t samples, Rng& rng) {
  const std::size_t n = p.ambient_dim();
  std::vector<double> lo(n, 1e300), hi(n, -1e300);
  for (const auto& v : p.vertices()) {
    for (std::size_t c = 0; c < n; ++c) {
      lo[c] = std::min(lo[c], to_double(v[c]));
      hi[c] = std::max(hi[c], to_double(v[c]));
    }
  }
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
  for (const auto& f : p.facets()) {
    std::vector<double> a;
    for (const auto& x : f.normal) a.push_back(to_double(x));
    normals.push_back(a);
    offsets.push_back(to_double(f.offset));
  }
  double box = 1.0;
  for (std::size_t c = 0; c < n; ++c) box *= hi[c] - lo[c];
  std::vector<std::uniform_real_distribution<double>> coord;
  for (std::size_t c = 0; c < n; ++c) coord.emplace_back(lo[c], hi[c]);
  std::size_t hits = 0;
  std::vector<double> x(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t c = 0; c < n; ++c) x[c] = coord[c](rng);
    bool inside = true;
    for (std::size_t f = 0; f < normals.size() && inside; ++f) {
      double t = 0.0;
      for (std::size_t c = 0; c < n; ++c) t += normals[f][c] * x[c];
      inside = t <= offsets[f];
    }
    hits += inside;
  }
  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

/// Euclidean norm of an exact vector, as a double.
inline double norm(const RVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += to_double(x) * to_double(x);
  return std::sqrt(s);
}

}  // namespace hadwiger::testing
