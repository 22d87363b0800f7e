/**
 * Verification of translative decomposition certificates.
 *
 * A certificate lists pieces P_1..P_m of a body A and translations t_i such
 * that the pieces P_i + t_i reassemble a body B. Covering is checked
 * measure-theoretically: pieces are closed and full-dimensional, so a piece
 * lies in a closed body iff the part of the piece inside the body has the
 * piece's full volume, and pairwise interior-disjoint pieces inside A with
 * total volume vol(A) cover A.
 */
#pragma once

#include "hadwiger/exactnum.hpp"
#include "hadwiger/polytope.hpp"
#include "hadwiger/valuations.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadwiger {

struct Certificate {
  std::vector<Polytope> pieces;
  std::vector<RVector> translations;
};

struct Verdict {
  bool accepted = false;
  std::string reason;  // empty when accepted
};

namespace detail {

inline Rational volume_inside(const Polytope& piece, const UnionBody& body) {
  Rational total(0);
  for (const auto& q : body.pieces()) {
    if (boxes_separated(piece, q)) continue;
    if (auto inter = intersect(piece, q)) total += volume(*inter);
  }
  return total;
}

inline std::string check_cover(const std::vector<Polytope>& pieces, const UnionBody& body, const char* role) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (volume_inside(pieces[i], body) != volume(pieces[i]))
      return "piece " + std::to_string(i + 1) + " not contained in " + role;
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (!interiors_disjoint(pieces[i], pieces[j]))
        return "pieces " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap in " + role;
    }
  }
  Rational total(0);
  for (const auto& p : pieces) total += volume(p);
  if (total != volume(body)) return std::string("pieces do not cover ") + role;
  return {};
}

}  // namespace detail

inline Certificate inverse(const Certificate& c) {
  Certificate out;
  for (std::size_t i = 0; i < c.pieces.size(); ++i) {
    out.pieces.push_back(translate(c.pieces[i], c.translations[i]));
    out.translations.push_back(-c.translations[i]);
  }
  return out;
}

inline Verdict verify_certificate(const UnionBody& a, const UnionBody& b, const Certificate& cert) {
  const std::size_t n = a.ambient_dim();
  if (b.ambient_dim() != n) throw DomainError("verify_certificate: bodies live in different dimensions");
  if (cert.pieces.size() != cert.translations.size())
    throw DomainError("verify_certificate: piece and translation counts differ");
  if (cert.pieces.empty()) throw DomainError("verify_certificate: certificate has no pieces");
  for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
    if (cert.pieces[i].ambient_dim() != n || cert.translations[i].size() != n)
      throw DomainError("verify_certificate: piece " + std::to_string(i + 1) + " has the wrong dimension");
    if (!cert.pieces[i].full_dimensional())
      throw DomainError("verify_certificate: piece " + std::to_string(i + 1) + " is degenerate");
  }
  if (auto why = detail::check_cover(cert.pieces, a, "source"); !why.empty()) return {false, why};
  std::vector<Polytope> moved;
  for (std::size_t i = 0; i < cert.pieces.size(); ++i) moved.push_back(translate(cert.pieces[i], cert.translations[i]));
  if (auto why = detail::check_cover(moved, b, "target"); !why.empty()) return {false, why};
  return {true, {}};
}

inline Verdict verify_certificate(const Polytope& a, const Polytope& b, const Certificate& cert) {
  return verify_certificate(UnionBody(a), UnionBody(b), cert);
}

namespace detail {

inline bool tables_match(const UnionBody& a, const UnionBody& b) { return invariant_table(a) == invariant_table(b); }

}  // namespace detail

/// Recomputes both invariant tables for an accepted certificate. Always true
/// when the library is consistent.
inline bool invariance_cross_check(const UnionBody& a, const UnionBody& b, const Certificate& cert) {
  if (!verify_certificate(a, b, cert).accepted)
    throw DomainError("invariance_cross_check: certificate was rejected");
  return detail::tables_match(a, b);
}

inline bool invariance_cross_check(const Polytope& a, const Polytope& b, const Certificate& cert) {
  return invariance_cross_check(UnionBody(a), UnionBody(b), cert);
}

}  // namespace hadwiger
