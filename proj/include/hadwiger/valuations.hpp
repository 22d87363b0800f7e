/**
 * Hadwiger functionals and the valuations built from them.
 *
 * For a frame U of length r in R^n and k = n - r,
 *
 *     H_U(P) = sum over eta in {+1,-1}^r of sgn(eta) * V_k(P_{eta U}),
 *
 * where only sign patterns for which eta U is P-tight contribute. Volumes are
 * measured in the measurement basis of U (shared by the whole sign class of
 * U), so values of H_U for different bodies compare exactly; the Euclidean
 * value is the coordinate value times sqrt(gram).
 *
 * Two bodies are translative-equidecomposable iff all H_U agree. Since
 * H_{eta U} = sgn(eta) H_U, an InvariantTable stores one entry per sign class,
 * keyed by the canonical frame.
 */
#pragma once

#include "hadwiger/exactnum.hpp"
#include "hadwiger/frames.hpp"
#include "hadwiger/polytope.hpp"

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace hadwiger {

struct HadwigerValue {
  Frame frame;        // the frame H was evaluated for
  Frame frame_class;  // canonical representative; H_frame = class_sign * H_class
  int class_sign = 1;
  Rational coordinate_value;
  Rational gram;
  double euclidean_approx = 0.0;
};

namespace detail {

inline void check_frame(const Frame& u, std::size_t n) {
  if (u.size() >= n) throw DomainError("frame has " + std::to_string(u.size()) + " entries; at most n-1 allowed");
  for (const auto& d : u.dirs) {
    if (d.size() != n) throw DomainError("frame entry of wrong dimension");
    if (is_zero(d)) throw DomainError("frame entry is the zero vector");
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (sgn(dot(u.dirs[i], u.dirs[j])) != 0) throw DomainError("frame entries are not orthogonal");
    }
  }
}

// Sum of sgn(eta) * coordinate volume over the sign patterns eta for which
// eta U is tight, walking the binary tree of partial sign patterns and
// pruning as soon as a step fails to drop the dimension by exactly one.
inline void signed_tight_sum(const Polytope& face, const Frame& u, std::size_t step, int sign,
                             const std::vector<RVector>& basis, Rational& acc) {
  if (step == u.size()) {
    const Rational v = coordinate_volume(face, basis);
    if (sign > 0) {
      acc += v;
    } else {
      acc -= v;
    }
    return;
  }
  for (int s : {1, -1}) {
    const Polytope child = face_in_direction(face, s > 0 ? u.dirs[step] : RVector(-u.dirs[step]));
    if (child.dim() + 1 == face.dim()) signed_tight_sum(child, u, step + 1, sign * s, basis, acc);
  }
}

inline Rational hadwiger_coordinate(const Polytope& p, const Frame& u, const std::vector<RVector>& basis) {
  Rational acc(0);
  if (p.full_dimensional()) signed_tight_sum(p, u, 0, 1, basis, acc);
  return acc;
}

inline HadwigerValue make_value(const Frame& u, const MeasurementBasis& mb, Rational coord) {
  HadwigerValue h;
  h.frame = u;
  auto canon = canonicalize(u);
  h.frame_class = std::move(canon.frame);
  h.class_sign = canon.sign;
  h.coordinate_value = std::move(coord);
  h.gram = mb.gram;
  h.euclidean_approx = to_double(h.coordinate_value) * std::sqrt(to_double(h.gram));
  return h;
}

}  // namespace detail

/// H_U(P). Lower-dimensional P gives 0.
inline HadwigerValue hadwiger(const Polytope& p, const Frame& u) {
  detail::check_frame(u, p.ambient_dim());
  const auto mb = measurement_basis(u, p.ambient_dim());
  return detail::make_value(u, mb, detail::hadwiger_coordinate(p, u, mb.basis));
}

/// H_U on a union of interior-disjoint pieces: the sum over the pieces.
inline HadwigerValue hadwiger(const UnionBody& b, const Frame& u) {
  detail::check_frame(u, b.ambient_dim());
  const auto mb = measurement_basis(u, b.ambient_dim());
  Rational total(0);
  for (const auto& p : b.pieces()) total += detail::hadwiger_coordinate(p, u, mb.basis);
  return detail::make_value(u, mb, std::move(total));
}

struct InvariantTable {
  std::size_t n = 0;
  std::map<Frame, HadwigerValue> entries;  // canonical frame -> value; zeros omitted

  Rational value(const Frame& canonical) const {
    auto it = entries.find(canonical);
    return it == entries.end() ? Rational(0) : it->second.coordinate_value;
  }

  friend bool operator==(const InvariantTable& a, const InvariantTable& b) {
    if (a.n != b.n || a.entries.size() != b.entries.size()) return false;
    for (const auto& [key, h] : a.entries) {
      auto it = b.entries.find(key);
      if (it == b.entries.end() || it->second.coordinate_value != h.coordinate_value) return false;
    }
    return true;
  }
};

/// Canonical classes of all tight frames of all pieces.
inline std::set<Frame> tight_frame_classes(const UnionBody& b) {
  std::set<Frame> classes;
  for (const auto& p : b.pieces()) {
    for (const auto& u : tight_frames(p)) classes.insert(canonicalize(u).frame);
  }
  return classes;
}

inline InvariantTable invariant_table(const UnionBody& b) {
  InvariantTable t;
  t.n = b.ambient_dim();
  for (const auto& cls : tight_frame_classes(b)) {
    auto h = hadwiger(b, cls);
    if (sgn(h.coordinate_value) != 0) t.entries.emplace(cls, std::move(h));
  }
  return t;
}

inline InvariantTable invariant_table(const Polytope& p) {
  if (!p.full_dimensional()) throw DomainError("invariant_table: body is not full-dimensional");
  return invariant_table(UnionBody(p));
}

struct Decision {
  bool equal = false;
  std::vector<Frame> witnesses;  // canonical frames where the invariants differ
};

inline Decision compare_tables(const InvariantTable& a, const InvariantTable& b) {
  if (a.n != b.n) throw DomainError("equidecomposable: bodies live in different dimensions");
  std::set<Frame> keys;
  for (const auto& [k, v] : a.entries) keys.insert(k);
  for (const auto& [k, v] : b.entries) keys.insert(k);
  Decision d;
  for (const auto& k : keys) {
    if (a.value(k) != b.value(k)) d.witnesses.push_back(k);
  }
  d.equal = d.witnesses.empty();
  return d;
}

/// Translative equidecomposability of two full-dimensional bodies, decided by
/// comparing their invariant tables.
inline Decision equidecomposable(const UnionBody& a, const UnionBody& b) {
  return compare_tables(invariant_table(a), invariant_table(b));
}

inline Decision equidecomposable(const Polytope& a, const Polytope& b) {
  return compare_tables(invariant_table(a), invariant_table(b));
}

// ---------------------------------------------------------------------------
// Valuations from coefficient tables

/// Odd coefficient map U -> c_U, stored on canonical representatives.
class CoefficientTable {
 public:
  explicit CoefficientTable(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }

  /// Sets c_U; the canonical entry receives sgn * c so that c_{eta U} = sgn(eta) c_U.
  void set(const Frame& u, const Rational& c) {
    detail::check_frame(u, n_);
    auto canon = canonicalize(u);
    const Rational stored = canon.sign > 0 ? c : Rational(-c);
    if (sgn(stored) == 0) {
      entries_.erase(canon.frame);
    } else {
      entries_[canon.frame] = stored;
    }
  }

  Rational coefficient(const Frame& u) const {
    auto canon = canonicalize(u);
    auto it = entries_.find(canon.frame);
    if (it == entries_.end()) return Rational(0);
    return canon.sign > 0 ? it->second : Rational(-it->second);
  }

  const std::map<Frame, Rational>& entries() const { return entries_; }

  friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_;
  std::map<Frame, Rational> entries_;
};

struct Evaluation {
  std::vector<std::pair<Frame, Rational>> per_frame;  // c_U * H_U in basis units, nonzero only
  double euclidean_total = 0.0;
};

namespace detail {

inline void check_table_dim(const CoefficientTable& c, std::size_t n) {
  if (c.n() != n) throw DomainError("coefficient table dimension differs from the body dimension");
}

}  // namespace detail

/// phi(B) = sum over tight U of c_U V_k(B_U) = sum over classes of c_U H_U(B).
inline Evaluation evaluate_valuation(const UnionBody& b, const CoefficientTable& c) {
  detail::check_table_dim(c, b.ambient_dim());
  Evaluation ev;
  const auto classes = tight_frame_classes(b);
  for (const auto& [cls, coeff] : c.entries()) {
    if (!classes.count(cls)) continue;
    const auto h = hadwiger(b, cls);
    const Rational contribution = coeff * h.coordinate_value;
    if (sgn(contribution) == 0) continue;
    ev.euclidean_total += to_double(contribution) * std::sqrt(to_double(h.gram));
    ev.per_frame.emplace_back(cls, contribution);
  }
  return ev;
}

inline Evaluation evaluate_valuation(const Polytope& p, const CoefficientTable& c) {
  if (!p.full_dimensional()) throw DomainError("evaluate_valuation: body is not full-dimensional");
  return evaluate_valuation(UnionBody(p), c);
}

struct HomogeneousComponents {
  // components[cls][i] is the degree-(i+1) part of c_cls * H_cls, basis units.
  std::map<Frame, std::vector<Rational>> per_frame;
  std::map<Frame, Rational> gram;
  std::map<std::size_t, double> by_degree;  // degree -> Euclidean value, degrees 1..n
};

/// Splits phi into homogeneous parts by evaluating phi(mB) for m = 1..n and
/// solving sum_i m^i x_i = phi(mB) exactly, per frame class.
inline HomogeneousComponents homogeneous_components(const UnionBody& b, const CoefficientTable& c) {
  const std::size_t n = b.ambient_dim();
  detail::check_table_dim(c, n);
  RMatrix vandermonde(n, RVector(n));
  for (std::size_t m = 1; m <= n; ++m) {
    Rational power(1);
    for (std::size_t i = 1; i <= n; ++i) {
      power *= static_cast<unsigned long>(m);
      vandermonde[m - 1][i - 1] = power;
    }
  }
  std::vector<UnionBody> dilated;
  for (std::size_t m = 1; m <= n; ++m) dilated.push_back(m == 1 ? b : dilate(b, Rational(static_cast<unsigned long>(m))));

  HomogeneousComponents out;
  for (std::size_t i = 1; i <= n; ++i) out.by_degree[i] = 0.0;
  const auto classes = tight_frame_classes(b);
  for (const auto& [cls, coeff] : c.entries()) {
    if (!classes.count(cls)) continue;
    RVector samples(n);
    Rational gram;
    for (std::size_t m = 0; m < n; ++m) {
      const auto h = hadwiger(dilated[m], cls);
      samples[m] = coeff * h.coordinate_value;
      gram = h.gram;
    }
    RVector parts = solve(vandermonde, samples);
    for (std::size_t i = 0; i < n; ++i) out.by_degree[i + 1] += to_double(parts[i]) * std::sqrt(to_double(gram));
    out.per_frame.emplace(cls, std::move(parts));
    out.gram.emplace(cls, gram);
  }
  return out;
}

inline HomogeneousComponents homogeneous_components(const Polytope& p, const CoefficientTable& c) {
  if (!p.full_dimensional()) throw DomainError("homogeneous_components: body is not full-dimensional");
  return homogeneous_components(UnionBody(p), c);
}

// ---------------------------------------------------------------------------
// Surface area measure

struct SurfaceAtom {
  Frame normal;  // length-1 frame holding the outward facet normal
  Rational coordinate_volume;
  Rational gram;
  double euclidean = 0.0;
};

/// One atom per facet: the facet's (n-1)-volume placed at its outward normal.
inline std::vector<SurfaceAtom> surface_area_measure(const Polytope& p) {
  if (!p.full_dimensional()) throw DomainError("surface_area_measure: polytope is not full-dimensional");
  std::vector<SurfaceAtom> out;
  for (const auto& f : p.facets()) {
    SurfaceAtom a;
    a.normal.dirs.push_back(f.normal);
    const auto mb = measurement_basis(a.normal, p.ambient_dim());
    a.coordinate_volume = coordinate_volume(p.face(f.vertices), mb.basis);
    a.gram = mb.gram;
    a.euclidean = to_double(a.coordinate_volume) * std::sqrt(to_double(a.gram));
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(), [](const SurfaceAtom& x, const SurfaceAtom& y) { return x.normal < y.normal; });
  return out;
}

using DirectionFunction = std::function<double(const std::vector<double>&)>;

/// cvol * V_n(P) + sum over facets of f(u) * V_{n-1}(facet), u the unit outward normal.
inline double klain_schneider_eval(const Polytope& p, const Rational& cvol, const DirectionFunction& f) {
  if (!p.full_dimensional()) throw DomainError("klain_schneider_eval: polytope is not full-dimensional");
  double total = to_double(cvol * volume(p));
  for (const auto& atom : surface_area_measure(p)) {
    const auto& w = atom.normal.dirs.front();
    double norm = 0.0;
    std::vector<double> unit;
    for (const auto& x : w) {
      unit.push_back(to_double(x));
      norm += unit.back() * unit.back();
    }
    norm = std::sqrt(norm);
    for (auto& x : unit) x /= norm;
    total += f(unit) * atom.euclidean;
  }
  return total;
}

}  // namespace hadwiger
