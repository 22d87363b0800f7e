/**
 * Exact V-representation polytopes.
 *
 * A Polytope is built from a point cloud by `hull`. The affine hull is
 * computed first; all combinatorial work then happens in the pivot
 * coordinates of the affine hull's RREF direction basis, where the polytope
 * is full-dimensional. That projection is an affine isomorphism onto R^d, so
 * extremality, facet incidences and edges carry over unchanged. Facet normals
 * are mapped back to vectors of R^n lying in the direction space.
 *
 * Polytopes are immutable and cheap to copy (shared state). Derived data
 * (ambient facet normals, edges, triangulation) is computed on first use
 * under a std::call_once guard.
 */
#pragma once

#include "hadwiger/exactnum.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hadwiger {

struct Facet {
  RVector normal;                     // outward, primitive integer, inside the direction space
  Rational offset;                    // normal . x == offset on the facet, < offset elsewhere
  std::vector<std::size_t> vertices;  // indices into Polytope::vertices(), ascending
};

/// Vertex indices of a dim(P)-simplex, base vertex first.
using Simplex = std::vector<std::size_t>;

namespace detail {

struct ProjectedFacet {
  RVector normal;
  Rational offset;
  std::vector<std::size_t> points;
};

struct ProjectedHull {
  std::vector<std::size_t> vertices;
  std::vector<ProjectedFacet> facets;
};

inline std::size_t affine_rank(const std::vector<RVector>& pts, const std::vector<std::size_t>& idx) {
  if (idx.size() < 2) return 0;
  RMatrix m;
  m.reserve(idx.size() - 1);
  for (std::size_t k = 1; k < idx.size(); ++k) m.push_back(pts[idx[k]] - pts[idx[0]]);
  return rank(m);
}

// Hyperplane through the given points (affine rank d-1), oriented so that
// `inside` is strictly on the negative side.
inline ProjectedFacet plane_through(const std::vector<RVector>& pts, const std::vector<std::size_t>& idx,
                                    const RVector& inside) {
  const std::size_t d = inside.size();
  RMatrix m;
  for (std::size_t k = 1; k < idx.size(); ++k) m.push_back(pts[idx[k]] - pts[idx[0]]);
  auto ker = kernel_basis(m, d);
  if (ker.size() != 1) throw std::logic_error("plane_through: points do not span a hyperplane");
  ProjectedFacet f;
  f.normal = primitive_integer(ker[0]);
  f.offset = dot(f.normal, pts[idx[0]]);
  if (dot(f.normal, inside) > f.offset) {
    f.normal = -f.normal;
    f.offset = -f.offset;
  }
  f.points = idx;
  std::sort(f.points.begin(), f.points.end());
  return f;
}

/// Beneath-beyond convex hull of points spanning R^d (d >= 2). Returns the
/// indices of the extreme points and every facet with its full incidence set.
inline ProjectedHull full_dimensional_hull(const std::vector<RVector>& pts) {
  const std::size_t d = pts.at(0).size();
  const std::size_t count = pts.size();

  std::vector<std::size_t> simplex{0};
  RMatrix span;
  for (std::size_t i = 1; i < count && simplex.size() < d + 1; ++i) {
    span.push_back(pts[i] - pts[0]);
    if (rank(span) == span.size()) {
      simplex.push_back(i);
    } else {
      span.pop_back();
    }
  }
  if (simplex.size() != d + 1) throw std::logic_error("full_dimensional_hull: points are not full-dimensional");

  RVector inside = zero_vector(d);
  for (auto i : simplex) inside = inside + pts[i];
  inside = Rational(1, static_cast<unsigned long>(d + 1)) * inside;

  std::vector<ProjectedFacet> facets;
  for (std::size_t skip = 0; skip <= d; ++skip) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k <= d; ++k) {
      if (k != skip) idx.push_back(simplex[k]);
    }
    facets.push_back(plane_through(pts, idx, inside));
  }

  std::vector<std::size_t> kept = simplex;
  std::vector<bool> in_simplex(count, false);
  for (auto i : simplex) in_simplex[i] = true;

  for (std::size_t i = 0; i < count; ++i) {
    if (in_simplex[i]) continue;
    const RVector& p = pts[i];
    std::vector<int> side(facets.size());
    bool any_visible = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      side[f] = sgn(dot(facets[f].normal, p) - facets[f].offset);
      any_visible = any_visible || side[f] > 0;
    }
    if (!any_visible) continue;  // inside or on the boundary: never extreme

    std::vector<ProjectedFacet> created;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (side[f] <= 0) continue;
      for (std::size_t g = 0; g < facets.size(); ++g) {
        if (side[g] != -1) continue;
        std::vector<std::size_t> ridge;
        std::set_intersection(facets[f].points.begin(), facets[f].points.end(), facets[g].points.begin(),
                              facets[g].points.end(), std::back_inserter(ridge));
        if (ridge.size() + 1 < d || affine_rank(pts, ridge) + 2 != d) continue;
        ridge.push_back(i);
        ProjectedFacet nf = plane_through(pts, ridge, inside);
        const bool duplicate = std::any_of(created.begin(), created.end(), [&](const ProjectedFacet& c) {
          return c.offset == nf.offset && c.normal == nf.normal;
        });
        if (!duplicate) created.push_back(std::move(nf));
      }
    }

    std::vector<ProjectedFacet> next;
    next.reserve(facets.size() + created.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (side[f] > 0) continue;
      if (side[f] == 0) {
        auto& pl = facets[f].points;
        pl.insert(std::upper_bound(pl.begin(), pl.end(), i), i);
      }
      next.push_back(std::move(facets[f]));
    }
    kept.push_back(i);
    for (auto& nf : created) {
      nf.points.clear();
      for (auto k : kept) {
        if (dot(nf.normal, pts[k]) == nf.offset) nf.points.push_back(k);
      }
      std::sort(nf.points.begin(), nf.points.end());
      next.push_back(std::move(nf));
    }
    facets = std::move(next);
  }

  // A kept point is a vertex iff the normals of its facets span R^d.
  std::sort(kept.begin(), kept.end());
  ProjectedHull out;
  for (auto k : kept) {
    RMatrix normals;
    for (const auto& f : facets) {
      if (std::binary_search(f.points.begin(), f.points.end(), k)) normals.push_back(f.normal);
    }
    if (rank(normals) == d) out.vertices.push_back(k);
  }
  for (auto& f : facets) {
    std::vector<std::size_t> filtered;
    std::set_intersection(f.points.begin(), f.points.end(), out.vertices.begin(), out.vertices.end(),
                          std::back_inserter(filtered));
    f.points = std::move(filtered);
  }
  out.facets = std::move(facets);
  return out;
}

}  // namespace detail

class Polytope;
Polytope hull(std::vector<RVector> points);

class Polytope {
 public:
  std::size_t ambient_dim() const { return impl_->ambient; }
  std::size_t dim() const { return impl_->directions.size(); }
  bool full_dimensional() const { return dim() == ambient_dim(); }

  /// Extreme points, lexicographically ascending.
  const std::vector<RVector>& vertices() const { return impl_->vertices; }

  /// Lexicographically smallest vertex; the affine hull is basepoint + span(direction_basis).
  const RVector& basepoint() const { return impl_->vertices.front(); }

  /// RREF basis of the direction space (canonical for the subspace).
  const std::vector<RVector>& direction_basis() const { return impl_->directions; }

  /// Coordinates of x restricted to the pivot columns of direction_basis().
  RVector project(const RVector& x) const {
    RVector y;
    y.reserve(dim());
    for (auto c : impl_->pivots) y.push_back(x[c]);
    return y;
  }

  const std::vector<Facet>& facets() const {
    std::call_once(impl_->facets_once, [this] { impl_->facets = compute_facets(); });
    return impl_->facets;
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    std::call_once(impl_->edges_once, [this] { impl_->edges = compute_edges(); });
    return impl_->edges;
  }

  const std::vector<Simplex>& triangulation() const {
    std::call_once(impl_->triangulation_once, [this] { impl_->triangulation = compute_triangulation(); });
    return impl_->triangulation;
  }

  /// Sub-polytope spanned by a subset of this polytope's vertices.
  Polytope face(const std::vector<std::size_t>& vertex_indices) const {
    std::vector<RVector> pts;
    pts.reserve(vertex_indices.size());
    for (auto i : vertex_indices) pts.push_back(vertices()[i]);
    return hull(std::move(pts));
  }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.impl_ == b.impl_ || (a.ambient_dim() == b.ambient_dim() && a.vertices() == b.vertices());
  }

 private:
  friend Polytope hull(std::vector<RVector> points);

  struct Impl {
    std::size_t ambient = 0;
    std::vector<RVector> vertices;
    std::vector<RVector> directions;
    std::vector<std::size_t> pivots;
    std::vector<detail::ProjectedFacet> projected_facets;  // point indices refer to vertices

    mutable std::once_flag facets_once;
    mutable std::vector<Facet> facets;
    mutable std::once_flag edges_once;
    mutable std::vector<std::pair<std::size_t, std::size_t>> edges;
    mutable std::once_flag triangulation_once;
    mutable std::vector<Simplex> triangulation;
  };

  explicit Polytope(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  // Outward normal inside the direction space: for the projected normal a,
  // w = R^T (R R^T)^{-1} a satisfies w . (x - v0) = a . (proj(x) - proj(v0))
  // for every x in the affine hull.
  std::vector<Facet> compute_facets() const {
    const std::size_t d = dim();
    const auto& rows = impl_->directions;
    RMatrix gram(d, RVector(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(rows[i], rows[j]);
    }
    std::vector<Facet> out;
    out.reserve(impl_->projected_facets.size());
    for (const auto& pf : impl_->projected_facets) {
      const RVector alpha = solve(gram, pf.normal);
      RVector w = zero_vector(ambient_dim());
      for (std::size_t i = 0; i < d; ++i) w = w + alpha[i] * rows[i];
      Facet f;
      f.normal = primitive_integer(w);
      f.vertices = pf.points;
      f.offset = dot(f.normal, vertices()[f.vertices.front()]);
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> compute_edges() const {
    const std::size_t d = dim();
    const std::size_t nv = vertices().size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (d == 0) return out;
    if (d == 1) return {{0, 1}};
    std::vector<std::vector<std::size_t>> incident(nv);
    const auto& pfs = impl_->projected_facets;
    for (std::size_t f = 0; f < pfs.size(); ++f) {
      for (auto v : pfs[f].points) incident[v].push_back(f);
    }
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = i + 1; j < nv; ++j) {
        std::vector<std::size_t> common;
        std::set_intersection(incident[i].begin(), incident[i].end(), incident[j].begin(), incident[j].end(),
                              std::back_inserter(common));
        if (common.size() + 1 < d) continue;
        RMatrix normals;
        for (auto f : common) normals.push_back(pfs[f].normal);
        if (rank(normals) + 1 == d) out.emplace_back(i, j);
      }
    }
    return out;
  }

  // Fan from vertex 0 (the lexicographically smallest) over the recursively
  // triangulated facets that do not contain it.
  std::vector<Simplex> compute_triangulation() const {
    const std::size_t d = dim();
    if (d == 0) return {{0}};
    if (d == 1) return {{0, 1}};
    std::vector<Simplex> out;
    for (const auto& f : impl_->projected_facets) {
      if (f.points.front() == 0) continue;  // points are ascending
      const Polytope sub = face(f.points);
      for (const auto& s : sub.triangulation()) {
        Simplex cell{0};
        for (auto local : s) {
          const auto it = std::lower_bound(vertices().begin(), vertices().end(), sub.vertices()[local]);
          cell.push_back(static_cast<std::size_t>(it - vertices().begin()));
        }
        out.push_back(std::move(cell));
      }
    }
    return out;
  }

  std::shared_ptr<Impl> impl_;
};

/// Convex hull of a nonempty point list of common dimension.
inline Polytope hull(std::vector<RVector> points) {
  if (points.empty()) throw DomainError("hull: empty point list");
  const std::size_t n = points.front().size();
  if (n == 0) throw DomainError("hull: ambient dimension must be at least 1");
  for (const auto& p : points) {
    if (p.size() != n) throw DomainError("hull: points of different dimensions");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  auto impl = std::make_shared<Polytope::Impl>();
  impl->ambient = n;

  RMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  auto [red, pivots] = rref(std::move(diffs));
  red.resize(pivots.size());
  impl->directions = std::move(red);
  impl->pivots = std::move(pivots);
  const std::size_t d = impl->pivots.size();

  std::vector<RVector> proj;
  proj.reserve(points.size());
  for (const auto& p : points) {
    RVector y;
    for (auto c : impl->pivots) y.push_back(p[c]);
    proj.push_back(std::move(y));
  }

  if (d == 0) {
    impl->vertices = {points.front()};
  } else if (d == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < proj.size(); ++i) {
      if (proj[i][0] < proj[lo][0]) lo = i;
      if (proj[i][0] > proj[hi][0]) hi = i;
    }
    // Along a line the lexicographic order of points agrees with the pivot coordinate.
    impl->vertices = {points[lo], points[hi]};
    impl->projected_facets.push_back({RVector{Rational(-1)}, -proj[lo][0], {0}});
    impl->projected_facets.push_back({RVector{Rational(1)}, proj[hi][0], {1}});
  } else {
    auto ph = detail::full_dimensional_hull(proj);
    std::vector<std::size_t> remap(points.size(), 0);
    for (std::size_t k = 0; k < ph.vertices.size(); ++k) {
      remap[ph.vertices[k]] = k;
      impl->vertices.push_back(points[ph.vertices[k]]);
    }
    for (auto& f : ph.facets) {
      for (auto& i : f.points) i = remap[i];
    }
    impl->projected_facets = std::move(ph.facets);
  }
  return Polytope(std::move(impl));
}

// ---------------------------------------------------------------------------
// Measurement

/// Lebesgue volume of P in the coordinates of `basis`, which must be a basis
/// of P's direction space. A point has volume 1.
inline Rational coordinate_volume(const Polytope& p, const std::vector<RVector>& basis) {
  const std::size_t d = p.dim();
  if (basis.size() != d) throw DomainError("coordinate_volume: basis size differs from the polytope dimension");
  for (const auto& b : basis) {
    if (b.size() != p.ambient_dim()) throw DomainError("coordinate_volume: basis vector of wrong dimension");
  }
  if (d == 0) return Rational(1);
  const auto [red, pivots] = rref(basis);
  if (pivots.size() != d) throw DomainError("coordinate_volume: basis vectors are dependent");
  RMatrix joint = basis;
  joint.insert(joint.end(), p.direction_basis().begin(), p.direction_basis().end());
  if (rank(joint) != d) throw DomainError("coordinate_volume: basis does not span the direction space");

  auto restrict = [&](const RVector& v) {
    RVector r;
    r.reserve(d);
    for (auto c : pivots) r.push_back(v[c]);
    return r;
  };
  RMatrix bp;
  for (const auto& b : basis) bp.push_back(restrict(b));
  const Rational basis_det = abs(determinant(std::move(bp)));

  Rational total(0);
  const auto& verts = p.vertices();
  for (const auto& s : p.triangulation()) {
    RMatrix e;
    e.reserve(d);
    for (std::size_t k = 1; k <= d; ++k) e.push_back(restrict(verts[s[k]] - verts[s[0]]));
    total += abs(determinant(std::move(e)));
  }
  Integer fact(1);
  for (std::size_t k = 2; k <= d; ++k) fact *= static_cast<unsigned long>(k);
  return total / (Rational(fact) * basis_det);
}

inline std::vector<RVector> standard_basis(std::size_t n) {
  std::vector<RVector> b(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  return b;
}

/// n-dimensional Lebesgue volume; zero for lower-dimensional polytopes.
inline Rational volume(const Polytope& p) {
  if (!p.full_dimensional()) return Rational(0);
  return coordinate_volume(p, standard_basis(p.ambient_dim()));
}

/// Outward primitive-integer facet normals, in the order of Polytope::facets().
inline std::vector<RVector> facet_normals(const Polytope& p) {
  std::vector<RVector> out;
  for (const auto& f : p.facets()) out.push_back(f.normal);
  return out;
}

/// Face of P on which <u, .> is maximal.
inline Polytope face_in_direction(const Polytope& p, const RVector& u) {
  if (u.size() != p.ambient_dim()) throw DomainError("face_in_direction: direction of wrong dimension");
  if (is_zero(u)) throw DomainError("face_in_direction: zero direction");
  const auto& verts = p.vertices();
  std::vector<Rational> values;
  values.reserve(verts.size());
  for (const auto& v : verts) values.push_back(dot(u, v));
  const Rational best = *std::max_element(values.begin(), values.end());
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (values[i] == best) idx.push_back(i);
  }
  if (idx.size() == verts.size()) return p;
  return p.face(idx);
}

// ---------------------------------------------------------------------------
// Constructions

inline Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("minkowski_sum: ambient dimensions differ");
  std::vector<RVector> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& x : a.vertices()) {
    for (const auto& y : b.vertices()) pts.push_back(x + y);
  }
  return hull(std::move(pts));
}

/// conv{0, a1, a1+a2, ..., a1+...+ak} for linearly independent a1..ak.
inline Polytope simplex_chain(const std::vector<RVector>& a) {
  if (a.empty()) throw DomainError("simplex_chain: no vectors given");
  const std::size_t n = a.front().size();
  for (const auto& v : a) {
    if (v.size() != n) throw DomainError("simplex_chain: vectors of different dimensions");
  }
  if (rank(a) != a.size()) throw DomainError("simplex_chain: vectors are linearly dependent");
  std::vector<RVector> pts{zero_vector(n)};
  for (const auto& v : a) pts.push_back(pts.back() + v);
  return hull(std::move(pts));
}

inline Polytope translate(const Polytope& p, const RVector& t) {
  if (t.size() != p.ambient_dim()) throw DomainError("translate: vector of wrong dimension");
  std::vector<RVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return hull(std::move(pts));
}

inline Polytope dilate(const Polytope& p, const Rational& lambda) {
  if (sgn(lambda) <= 0) throw DomainError("dilate: factor must be positive");
  std::vector<RVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(lambda * v);
  return hull(std::move(pts));
}

/// Point reflection in the origin.
inline Polytope reflect(const Polytope& p) {
  std::vector<RVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(-v);
  return hull(std::move(pts));
}

/// P intersected with the halfspace {x : <a, x> <= b}; nullopt if empty.
inline std::optional<Polytope> clip(const Polytope& p, const RVector& a, const Rational& b) {
  const auto& verts = p.vertices();
  std::vector<Rational> s;
  s.reserve(verts.size());
  bool any_in = false, any_out = false;
  for (const auto& v : verts) {
    s.push_back(dot(a, v) - b);
    any_in = any_in || sgn(s.back()) <= 0;
    any_out = any_out || sgn(s.back()) > 0;
  }
  if (!any_out) return p;
  if (!any_in) return std::nullopt;
  std::vector<RVector> pts;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (sgn(s[i]) <= 0) pts.push_back(verts[i]);
  }
  for (const auto& [i, j] : p.edges()) {
    if ((sgn(s[i]) < 0 && sgn(s[j]) > 0) || (sgn(s[i]) > 0 && sgn(s[j]) < 0)) {
      const Rational t = s[i] / (s[i] - s[j]);
      pts.push_back(verts[i] + t * (verts[j] - verts[i]));
    }
  }
  return hull(std::move(pts));
}

/// The two closed pieces of P on either side of the hyperplane <a, x> = b.
inline std::pair<std::optional<Polytope>, std::optional<Polytope>> split(const Polytope& p, const RVector& a,
                                                                         const Rational& b) {
  return {clip(p, a, b), clip(p, -a, Rational(-b))};
}

/// Exact intersection. Q is turned into halfspaces (affine-hull equations and
/// facets) and P is clipped by each of them in turn.
inline std::optional<Polytope> intersect(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DomainError("intersect: ambient dimensions differ");
  std::optional<Polytope> cur = p;
  const RVector& base = q.basepoint();
  for (const auto& c : kernel_basis(q.direction_basis(), q.ambient_dim())) {
    const Rational level = dot(c, base);
    cur = clip(*cur, c, level);
    if (!cur) return cur;
    cur = clip(*cur, -c, Rational(-level));
    if (!cur) return cur;
  }
  for (const auto& f : q.facets()) {
    cur = clip(*cur, f.normal, f.offset);
    if (!cur) return cur;
  }
  return cur;
}

namespace detail {

inline bool boxes_separated(const Polytope& a, const Polytope& b) {
  for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
    auto [alo, ahi] = std::minmax_element(a.vertices().begin(), a.vertices().end(),
                                          [c](const RVector& x, const RVector& y) { return x[c] < y[c]; });
    auto [blo, bhi] = std::minmax_element(b.vertices().begin(), b.vertices().end(),
                                          [c](const RVector& x, const RVector& y) { return x[c] < y[c]; });
    if ((*ahi)[c] <= (*blo)[c] || (*bhi)[c] <= (*alo)[c]) return true;
  }
  return false;
}

}  // namespace detail

/// True iff vol(P ∩ Q) = 0 for two polytopes in the same R^n.
inline bool interiors_disjoint(const Polytope& a, const Polytope& b) {
  if (detail::boxes_separated(a, b)) return true;
  const auto inter = intersect(a, b);
  return !inter || !inter->full_dimensional();
}

/// Finite union of full-dimensional polytopes with pairwise disjoint interiors.
class UnionBody {
 public:
  explicit UnionBody(std::vector<Polytope> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw DomainError("UnionBody: no pieces");
    const std::size_t n = pieces_.front().ambient_dim();
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (pieces_[i].ambient_dim() != n) throw DomainError("UnionBody: pieces of different ambient dimensions");
      if (!pieces_[i].full_dimensional())
        throw DomainError("UnionBody: piece " + std::to_string(i + 1) + " is not full-dimensional");
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
        if (!interiors_disjoint(pieces_[i], pieces_[j]))
          throw DomainError("UnionBody: pieces " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                            " overlap");
      }
    }
  }

  explicit UnionBody(const Polytope& p) : UnionBody(std::vector<Polytope>{p}) {}

  const std::vector<Polytope>& pieces() const { return pieces_; }
  std::size_t ambient_dim() const { return pieces_.front().ambient_dim(); }

 private:
  std::vector<Polytope> pieces_;
};

inline Rational volume(const UnionBody& b) {
  Rational total(0);
  for (const auto& p : b.pieces()) total += volume(p);
  return total;
}

/// m translated copies of a full-dimensional P, spaced along e1 by the width
/// of P plus one.
inline UnionBody disjoint_copies(const Polytope& p, std::size_t m) {
  if (m == 0) throw DomainError("disjoint_copies: need at least one copy");
  if (!p.full_dimensional()) throw DomainError("disjoint_copies: polytope is not full-dimensional");
  auto [lo, hi] = std::minmax_element(p.vertices().begin(), p.vertices().end(),
                                      [](const RVector& x, const RVector& y) { return x[0] < y[0]; });
  const Rational step = (*hi)[0] - (*lo)[0] + 1;
  std::vector<Polytope> copies;
  copies.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    RVector t = zero_vector(p.ambient_dim());
    t[0] = step * static_cast<unsigned long>(k);
    copies.push_back(k == 0 ? p : translate(p, t));
  }
  return UnionBody(std::move(copies));
}

inline UnionBody dilate(const UnionBody& b, const Rational& lambda) {
  std::vector<Polytope> out;
  for (const auto& p : b.pieces()) out.push_back(dilate(p, lambda));
  return UnionBody(std::move(out));
}

inline UnionBody translate(const UnionBody& b, const RVector& t) {
  std::vector<Polytope> out;
  for (const auto& p : b.pieces()) out.push_back(translate(p, t));
  return UnionBody(std::move(out));
}

}  // namespace hadwiger
