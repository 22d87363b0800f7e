/**
 * Frames: ordered tuples of mutually orthogonal directions.
 *
 * A unit vector u is represented by the primitive integer vector pointing the
 * same way, so frames built from rational polytopes never need square roots.
 * Two frames that differ only by the signs of their entries share a canonical
 * form (each entry's first nonzero coordinate positive) and a measurement
 * basis for the orthogonal complement of their span.
 */
#pragma once

#include "hadwiger/exactnum.hpp"
#include "hadwiger/polytope.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hadwiger {

struct Frame {
  std::vector<RVector> dirs;

  std::size_t size() const { return dirs.size(); }
  bool empty() const { return dirs.empty(); }

  friend bool operator==(const Frame& a, const Frame& b) { return a.dirs == b.dirs; }

  // Shorter frames first, then lexicographic on the direction tuples.
  friend bool operator<(const Frame& a, const Frame& b) {
    if (a.dirs.size() != b.dirs.size()) return a.dirs.size() < b.dirs.size();
    return a.dirs < b.dirs;
  }
};

struct CanonicalDirection {
  RVector primitive;  // first nonzero coordinate positive
  int sign;           // +1 if the input is a positive multiple of `primitive`
};

inline CanonicalDirection canonicalize_direction(const RVector& v) {
  if (is_zero(v)) throw DomainError("canonicalize_direction: zero vector");
  RVector p = primitive_integer(v);
  const auto first = std::find_if(p.begin(), p.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (sgn(*first) > 0) return {std::move(p), 1};
  return {-p, -1};
}

struct CanonicalFrame {
  Frame frame;
  int sign;  // product of the entry signs; U = eta * frame with sgn(eta) == sign
};

inline CanonicalFrame canonicalize(const Frame& u) {
  CanonicalFrame out{{}, 1};
  for (const auto& d : u.dirs) {
    auto c = canonicalize_direction(d);
    out.frame.dirs.push_back(std::move(c.primitive));
    out.sign *= c.sign;
  }
  return out;
}

/// Map key for a frame class: canonical directions, coordinates comma
/// separated, entries separated by '|'. The empty frame has key "()".
inline std::string frame_key(const Frame& u) {
  if (u.empty()) return "()";
  std::string key;
  for (std::size_t i = 0; i < u.dirs.size(); ++i) {
    if (i > 0) key += '|';
    const auto& d = u.dirs[i];
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j > 0) key += ',';
      key += to_string(d[j]);
    }
  }
  return key;
}

inline Frame sign_flip(const Frame& u, const std::vector<int>& eta) {
  if (eta.size() != u.size()) throw DomainError("sign_flip: sign pattern length differs from frame length");
  Frame out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (eta[i] != 1 && eta[i] != -1) throw DomainError("sign_flip: signs must be +1 or -1");
    out.dirs.push_back(eta[i] == 1 ? u.dirs[i] : -u.dirs[i]);
  }
  return out;
}

inline int sign_of(const std::vector<int>& eta) {
  int s = 1;
  for (int e : eta) s *= e;
  return s;
}

/// Iterated face P_U: P_() = P, P_(u1..uk) = F(P_(u1..u{k-1}), uk).
inline Polytope face_of_frame(const Polytope& p, const Frame& u) {
  Polytope face = p;
  for (const auto& d : u.dirs) face = face_in_direction(face, d);
  return face;
}

/// True iff dim P_(u1..ur) = n - r for every prefix.
inline bool is_tight(const Polytope& p, const Frame& u) {
  const std::size_t n = p.ambient_dim();
  if (u.size() >= n || !p.full_dimensional()) return false;
  Polytope face = p;
  for (std::size_t r = 0; r < u.size(); ++r) {
    face = face_in_direction(face, u.dirs[r]);
    if (face.dim() != n - r - 1) return false;
  }
  return true;
}

namespace detail {

inline void extend_tight_frames(const Polytope& face, Frame& prefix, std::vector<Frame>& out) {
  out.push_back(prefix);
  if (face.dim() <= 1) return;  // frames stop at length n - 1
  for (const auto& f : face.facets()) {
    for (const auto& prev : prefix.dirs) {
      if (sgn(dot(prev, f.normal)) != 0) throw std::logic_error("tight_frames: facet normal not orthogonal to frame");
    }
    prefix.dirs.push_back(f.normal);
    extend_tight_frames(face.face(f.vertices), prefix, out);
    prefix.dirs.pop_back();
  }
}

}  // namespace detail

/// All P-tight frames of length 0..n-1 with their true outward directions,
/// depth-first in facet order. Empty when P is not full-dimensional.
inline std::vector<Frame> tight_frames(const Polytope& p) {
  std::vector<Frame> out;
  if (!p.full_dimensional()) return out;
  Frame prefix;
  detail::extend_tight_frames(p, prefix, out);
  return out;
}

struct MeasurementBasis {
  Frame frame;                 // canonical
  std::vector<RVector> basis;  // kernel basis of the direction matrix
  Rational gram;
};

/// Canonical rational basis of span(U)^perp in R^n. Depends only on the lines
/// spanned by the entries of U.
inline MeasurementBasis measurement_basis(const Frame& u, std::size_t n) {
  for (const auto& d : u.dirs) {
    if (d.size() != n) throw DomainError("measurement_basis: frame entry of wrong dimension");
  }
  MeasurementBasis mb;
  mb.frame = canonicalize(u).frame;
  mb.basis = kernel_basis(mb.frame.dirs, n);
  mb.gram = gram_determinant(mb.basis);
  return mb;
}

}  // namespace hadwiger
