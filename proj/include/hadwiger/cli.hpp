/**
 * Command-line front end. `run` is the whole program minus process setup so
 * tests can drive it in-process.
 *
 * Exit codes: 0 success, 1 domain error (a precondition of the requested
 * operation fails), 2 input error (unreadable file, malformed JSON, inexact
 * numbers, bad command line). Errors are reported as a one-line JSON object
 * on standard output.
 */
#pragma once

#include "hadwiger/certify.hpp"
#include "hadwiger/frames.hpp"
#include "hadwiger/io.hpp"
#include "hadwiger/polytope.hpp"
#include "hadwiger/valuations.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hadwiger::cli {

inline constexpr const char* kFormats = R"(Formats (all numbers in exact fields are strings "p" or "p/q"):
  polytope      {"dim": n, "vertices": [["0","1/2"], ...]}
  union body    {"pieces": [<polytope>, ...]}   (full-dimensional, interior-disjoint)
  coefficients  {"n": n, "entries": [{"frame": [["1","1"]], "coeff": "1"}, ...]}
                frame [] is the volume term; c is extended to all signs by oddness
  certificate   {"pieces": [<polytope>, ...], "translations": [["-1","1"], ...]}
Output is one line of JSON; fields named "euclid"/"approx" are floats, all
others are exact.)";

namespace detail {

inline io::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str());
}

inline io::json error_object(const std::string& kind, const std::string& message) {
  return {{"error", message}, {"kind", kind}};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact Hadwiger invariants and translative scissors congruence of rational polytopes", "hadwiger"};
  app.footer(kFormats);
  app.require_subcommand(1);
  std::size_t max_dim = 6;
  app.add_option("--max-dim", max_dim, "Largest accepted ambient dimension (at most 6)")->check(CLI::Range(1, 6));

  std::string body_a, body_b, extra;
  auto* tight = app.add_subcommand("tight-frames", "List all tight frames of a body");
  tight->add_option("body", body_a, "Polytope or union body JSON")->required();
  auto* inv = app.add_subcommand("invariants", "Invariant table (Hadwiger functionals per frame class)");
  inv->add_option("body", body_a, "Polytope or union body JSON")->required();
  auto* equal = app.add_subcommand("equal", "Decide translative equidecomposability of two bodies");
  equal->add_option("a", body_a, "First body")->required();
  equal->add_option("b", body_b, "Second body")->required();
  auto* eval = app.add_subcommand("evaluate", "Evaluate the valuation given by a coefficient table");
  eval->add_option("body", body_a, "Body JSON")->required();
  eval->add_option("coefficients", extra, "Coefficient table JSON")->required();
  auto* homog = app.add_subcommand("homogeneous", "Homogeneous components of a coefficient-table valuation");
  homog->add_option("body", body_a, "Body JSON")->required();
  homog->add_option("coefficients", extra, "Coefficient table JSON")->required();
  auto* surf = app.add_subcommand("surface-measure", "Facet normals with facet (n-1)-volumes");
  surf->add_option("polytope", body_a, "Full-dimensional polytope JSON")->required();
  auto* verify = app.add_subcommand("verify", "Verify a translative decomposition certificate from a to b");
  verify->add_option("a", body_a, "Source body")->required();
  verify->add_option("b", body_b, "Target body")->required();
  verify->add_option("certificate", extra, "Certificate JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream ignored;
    return app.exit(e, out, ignored);
  } catch (const CLI::ParseError& e) {
    out << io::dump(detail::error_object("usage", e.what())) << '\n';
    return 2;
  }

  auto load_body = [&](const std::string& path) {
    io::Body b = io::body_from_json(detail::read_json_file(path));
    if (io::ambient_dim(b) > max_dim)
      throw DomainError("ambient dimension " + std::to_string(io::ambient_dim(b)) + " exceeds --max-dim " +
                        std::to_string(max_dim));
    return b;
  };

  try {
    io::json result;
    if (tight->parsed()) {
      const io::Body b = load_body(body_a);
      std::set<Frame> frames;
      if (const auto* p = std::get_if<Polytope>(&b)) {
        for (auto& u : tight_frames(*p)) frames.insert(std::move(u));
      } else {
        for (const auto& p : std::get<UnionBody>(b).pieces()) {
          for (auto& u : tight_frames(p)) frames.insert(std::move(u));
        }
      }
      io::json list = io::json::array();
      for (const auto& u : frames) list.push_back(io::to_json(u));
      result = {{"frames", list}};
    } else if (inv->parsed()) {
      result = io::to_json(invariant_table(io::as_union(load_body(body_a))));
    } else if (equal->parsed()) {
      const auto a = io::as_union(load_body(body_a));
      const auto b = io::as_union(load_body(body_b));
      const Decision d = equidecomposable(a, b);
      io::json w = io::json::array();
      for (const auto& u : d.witnesses) w.push_back(io::dirs_to_json(u));
      result = {{"equal", d.equal}, {"witnesses", w}};
    } else if (eval->parsed()) {
      const auto b = io::as_union(load_body(body_a));
      const auto c = io::coefficient_table_from_json(detail::read_json_file(extra));
      const Evaluation ev = evaluate_valuation(b, c);
      io::json per = io::json::array();
      for (const auto& [cls, v] : ev.per_frame) per.push_back({{"frame", io::dirs_to_json(cls)}, {"value", io::to_json(v)}});
      result = {{"per_frame", per}, {"euclid_total", ev.euclidean_total}};
    } else if (homog->parsed()) {
      const auto b = io::as_union(load_body(body_a));
      const auto c = io::coefficient_table_from_json(detail::read_json_file(extra));
      const HomogeneousComponents hc = homogeneous_components(b, c);
      io::json comps = io::json::array();
      for (const auto& [deg, x] : hc.by_degree) comps.push_back({{"degree", deg}, {"approx", x}});
      io::json per = io::json::array();
      for (const auto& [cls, parts] : hc.per_frame) {
        io::json exact = io::json::array();
        for (const auto& x : parts) exact.push_back(io::to_json(x));
        per.push_back({{"frame", io::dirs_to_json(cls)}, {"gram", io::to_json(hc.gram.at(cls))}, {"parts", exact}});
      }
      result = {{"components", comps}, {"per_frame", per}};
    } else if (surf->parsed()) {
      const io::Body b = load_body(body_a);
      const auto* p = std::get_if<Polytope>(&b);
      if (!p) throw DomainError("surface-measure expects a single polytope");
      io::json entries = io::json::array();
      for (const auto& a : surface_area_measure(*p)) {
        entries.push_back({{"normal", io::to_json(a.normal.dirs.front())},
                           {"coord", io::to_json(a.coordinate_volume)},
                           {"gram", io::to_json(a.gram)},
                           {"euclid", a.euclidean}});
      }
      result = {{"entries", entries}};
    } else if (verify->parsed()) {
      const auto a = io::as_union(load_body(body_a));
      const auto b = io::as_union(load_body(body_b));
      const auto cert = io::certificate_from_json(detail::read_json_file(extra));
      const Verdict v = verify_certificate(a, b, cert);
      result = {{"accepted", v.accepted}};
      if (!v.accepted) result["reason"] = v.reason;
    }
    out << io::dump(result) << '\n';
    return 0;
  } catch (const ParseError& e) {
    out << io::dump(detail::error_object("parse", e.what())) << '\n';
    return 2;
  } catch (const DomainError& e) {
    out << io::dump(detail::error_object("domain", e.what())) << '\n';
    return 1;
  }
}

}  // namespace hadwiger::cli
