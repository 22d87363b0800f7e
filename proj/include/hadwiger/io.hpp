/**
 * JSON formats.
 *
 *   Rational        "p/q" or "p"; JSON numbers are rejected in exact fields
 *   Polytope        {"dim": n, "vertices": [["0","1/2"], ...]}
 *   UnionBody       {"pieces": [<polytope>, ...]}
 *   Frame           {"dirs": [["1","1"], ...]}  (tables use the bare array)
 *   InvariantTable  {"n": 2, "entries": [{"frame": [...], "coord": "1", "gram": "2", "euclid": 1.41...}]}
 *   Coefficients    {"n": 2, "entries": [{"frame": [...], "coeff": "1"}]}
 *   Certificate     {"pieces": [<polytope>, ...], "translations": [["-1","1"], ...]}
 */
#pragma once

#include "hadwiger/certify.hpp"
#include "hadwiger/exactnum.hpp"
#include "hadwiger/frames.hpp"
#include "hadwiger/polytope.hpp"
#include "hadwiger/valuations.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

namespace hadwiger::io {

using json = nlohmann::json;

/// A body read from disk: a single polytope or a union of pieces.
using Body = std::variant<Polytope, UnionBody>;

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("expected an exact rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

inline json to_json(const RVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline RVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  RVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

inline json to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return {{"dim", p.ambient_dim()}, {"vertices", verts}};
}

inline Polytope polytope_from_json(const json& j) {
  const json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) throw ParseError("\"dim\" must be a positive integer");
  const auto n = dim.get<std::size_t>();
  const json& verts = field(j, "vertices");
  if (!verts.is_array() || verts.empty()) throw ParseError("\"vertices\" must be a nonempty array");
  std::vector<RVector> pts;
  for (const auto& v : verts) {
    pts.push_back(vector_from_json(v));
    if (pts.back().size() != n) throw ParseError("vertex of length " + std::to_string(pts.back().size()) +
                                                 " in a polytope of dim " + std::to_string(n));
  }
  return hull(std::move(pts));
}

inline json to_json(const UnionBody& b) {
  json pieces = json::array();
  for (const auto& p : b.pieces()) pieces.push_back(to_json(p));
  return {{"pieces", pieces}};
}

inline UnionBody union_from_json(const json& j) {
  const json& pieces = field(j, "pieces");
  if (!pieces.is_array() || pieces.empty()) throw ParseError("\"pieces\" must be a nonempty array");
  std::vector<Polytope> out;
  for (const auto& p : pieces) out.push_back(polytope_from_json(p));
  return UnionBody(std::move(out));
}

inline Body body_from_json(const json& j) {
  if (j.is_object() && j.contains("pieces")) return union_from_json(j);
  return polytope_from_json(j);
}

inline std::size_t ambient_dim(const Body& b) {
  return std::visit([](const auto& x) { return x.ambient_dim(); }, b);
}

/// The body as a union of full-dimensional pieces.
inline UnionBody as_union(const Body& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) {
    if (!p->full_dimensional()) throw DomainError("body is not full-dimensional");
    return UnionBody(*p);
  }
  return std::get<UnionBody>(b);
}

inline json dirs_to_json(const Frame& u) {
  json a = json::array();
  for (const auto& d : u.dirs) a.push_back(to_json(d));
  return a;
}

inline json to_json(const Frame& u) { return {{"dirs", dirs_to_json(u)}}; }

/// Accepts {"dirs": [...]} or the bare array of directions.
inline Frame frame_from_json(const json& j) {
  const json& dirs = j.is_object() ? field(j, "dirs") : j;
  if (!dirs.is_array()) throw ParseError("frame must be an array of directions");
  Frame u;
  for (const auto& d : dirs) u.dirs.push_back(vector_from_json(d));
  return u;
}

inline json to_json(const InvariantTable& t) {
  json entries = json::array();
  for (const auto& [cls, h] : t.entries) {
    entries.push_back({{"frame", dirs_to_json(cls)},
                       {"coord", to_json(h.coordinate_value)},
                       {"gram", to_json(h.gram)},
                       {"euclid", h.euclidean_approx}});
  }
  return {{"n", t.n}, {"entries", entries}};
}

inline std::size_t dimension_field(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1) throw ParseError("\"n\" must be a positive integer");
  return n.get<std::size_t>();
}

/// Reads a table back; gram and euclid are recomputed from the frame.
inline InvariantTable invariant_table_from_json(const json& j) {
  InvariantTable t;
  t.n = dimension_field(j);
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
  for (const auto& e : entries) {
    const Frame u = frame_from_json(field(e, "frame"));
    const Rational coord = rational_from_json(field(e, "coord"));
    detail::check_frame(u, t.n);
    const auto canon = canonicalize(u);
    const auto mb = measurement_basis(u, t.n);
    t.entries[canon.frame] =
        detail::make_value(canon.frame, mb, canon.sign > 0 ? coord : Rational(-coord));
  }
  return t;
}

inline json to_json(const CoefficientTable& c) {
  json entries = json::array();
  for (const auto& [cls, coeff] : c.entries()) entries.push_back({{"frame", dirs_to_json(cls)}, {"coeff", to_json(coeff)}});
  return {{"n", c.n()}, {"entries", entries}};
}

/// Frames may be given in any sign; the value is moved to the canonical
/// representative by oddness. Two entries for the same class are an error.
inline CoefficientTable coefficient_table_from_json(const json& j) {
  CoefficientTable c(dimension_field(j));
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
  std::vector<Frame> seen;
  for (const auto& e : entries) {
    const Frame u = frame_from_json(field(e, "frame"));
    const Rational coeff = rational_from_json(field(e, "coeff"));
    for (const auto& d : u.dirs) {
      if (d.size() != c.n()) throw ParseError("coefficient frame entry of wrong dimension");
    }
    const Frame cls = canonicalize(u).frame;
    if (std::find(seen.begin(), seen.end(), cls) != seen.end())
      throw DomainError("coefficient table lists frame class " + frame_key(cls) + " twice");
    seen.push_back(cls);
    c.set(u, coeff);
  }
  return c;
}

inline json to_json(const Certificate& c) {
  json pieces = json::array();
  for (const auto& p : c.pieces) pieces.push_back(to_json(p));
  json ts = json::array();
  for (const auto& t : c.translations) ts.push_back(to_json(t));
  return {{"pieces", pieces}, {"translations", ts}};
}

inline Certificate certificate_from_json(const json& j) {
  Certificate c;
  const json& pieces = field(j, "pieces");
  const json& ts = field(j, "translations");
  if (!pieces.is_array() || !ts.is_array()) throw ParseError("certificate pieces and translations must be arrays");
  for (const auto& p : pieces) c.pieces.push_back(polytope_from_json(p));
  for (const auto& t : ts) c.translations.push_back(vector_from_json(t));
  return c;
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline void write(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(k).dump();
        out += ':';
        write(v, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ',';
        write(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        break;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      std::string s(buf);
      if (s.find_first_of(".e") == std::string::npos) s += ".0";
      out += s;
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Compact JSON with object keys sorted and floats at 17 significant digits.
inline std::string dump(const json& j) {
  std::string out;
  detail::write(j, out);
  return out;
}

}  // namespace hadwiger::io
