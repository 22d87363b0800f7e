#include "hadwiger/polytope.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

using namespace hadwiger;
using namespace hadwiger::testing;

namespace {

std::vector<RVector> sorted(std::vector<RVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Hull, DropsInteriorPoints) {
  const Polytope t = hull({V({0, 0}), V({1, 0}), V({0, 1}), {Q("1/2"), Q("1/4")}});
  EXPECT_EQ(t.vertices(), (std::vector<RVector>{V({0, 0}), V({0, 1}), V({1, 0})}));
  EXPECT_EQ(t.dim(), 2u);
}

TEST(Hull, SinglePointIsZeroDimensional) {
  const Polytope p = hull({V({0, 0})});
  EXPECT_EQ(p.dim(), 0u);
  EXPECT_EQ(p.vertices().size(), 1u);
  EXPECT_TRUE(p.facets().empty());
  EXPECT_EQ(coordinate_volume(p, {}), 1);
}

TEST(Hull, SquareFacetsMatchPairBruteForce) {
  const Polytope sq = unit_square();
  EXPECT_EQ(sq.vertices().size(), 4u);
  EXPECT_EQ(sorted(facet_normals(sq)), brute_force_polygon_normals(sq.vertices()));
  EXPECT_EQ(sorted(facet_normals(sq)), (std::vector<RVector>{V({-1, 0}), V({0, -1}), V({0, 1}), V({1, 0})}));
}

TEST(Hull, RandomPolygonsMatchPairBruteForce) {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const Polytope p = random_polytope(rng, 2, 3, 12);
    EXPECT_EQ(sorted(facet_normals(p)), brute_force_polygon_normals(p.vertices()));
    EXPECT_EQ(p.facets().size(), p.vertices().size());
  }
}

TEST(Hull, DegenerateCoplanarInput) {
  // Points on the faces and edges of a cube, plus its corners.
  std::vector<RVector> pts;
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 2; ++y)
      for (long z = 0; z <= 2; ++z) pts.push_back(V({x, y, z}));
  std::shuffle(pts.begin(), pts.end(), Rng(11));
  const Polytope c = hull(pts);
  EXPECT_EQ(c.vertices().size(), 8u);
  EXPECT_EQ(c.facets().size(), 6u);
  for (const auto& f : c.facets()) EXPECT_EQ(f.vertices.size(), 4u);
  EXPECT_EQ(c.edges().size(), 12u);
  EXPECT_EQ(volume(c), 8);
}

TEST(Hull, VertexSetIsAFixpoint) {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Polytope p = random_polytope(rng, 2 + trial % 3, 0, 14);
    EXPECT_EQ(hull(p.vertices()), p);
    auto shuffled = p.vertices();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(hull(shuffled).vertices(), p.vertices());
  }
}

TEST(Hull, ExtremePointsAreNotInHullOfOthers) {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Polytope p = random_polytope(rng, 3, 5, 14);
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      std::vector<RVector> others;
      for (std::size_t j = 0; j < p.vertices().size(); ++j) {
        if (j != i) others.push_back(p.vertices()[j]);
      }
      const Polytope q = hull(others);
      EXPECT_LT(volume(q), volume(p));
    }
  }
}

TEST(Hull, LowerDimensionalFacetNormalsLieInDirectionSpace) {
  // A triangle in the plane x + y + z = 1.
  const Polytope t = hull({V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})});
  EXPECT_EQ(t.dim(), 2u);
  ASSERT_EQ(t.facets().size(), 3u);
  for (const auto& f : t.facets()) {
    EXPECT_EQ(sgn(dot(f.normal, V({1, 1, 1}))), 0);
    for (const auto& v : t.vertices()) EXPECT_LE(dot(f.normal, v), f.offset);
  }
  EXPECT_EQ(sorted(facet_normals(t)), (std::vector<RVector>{V({-2, 1, 1}), V({1, -2, 1}), V({1, 1, -2})}));
}

TEST(Hull, RejectsBadInput) {
  EXPECT_THROW(hull({}), DomainError);
  EXPECT_THROW(hull({V({0, 0}), V({1, 0, 0})}), DomainError);
}

TEST(FaceInDirection, Examples) {
  const Polytope sq = unit_square();
  EXPECT_EQ(face_in_direction(sq, V({1, 0})).vertices(), (std::vector<RVector>{V({1, 0}), V({1, 1})}));
  EXPECT_EQ(face_in_direction(sq, V({1, 1})).vertices(), (std::vector<RVector>{V({1, 1})}));
  // Enumerate <u, v> over the vertices of T: (0,0) -> 0, (1,0) -> 1, (0,1) -> 1.
  EXPECT_EQ(face_in_direction(unit_triangle(), V({1, 1})).vertices(), (std::vector<RVector>{V({0, 1}), V({1, 0})}));
  EXPECT_THROW(face_in_direction(sq, V({0, 0})), DomainError);
  EXPECT_THROW(face_in_direction(sq, V({1, 0, 0})), DomainError);
}

TEST(FaceInDirection, DependsOnlyOnDirection) {
  Rng rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const Polytope p = random_polytope(rng, 2 + trial % 2);
    const RVector u = random_point(rng, p.ambient_dim(), -2, 2, 1);
    if (is_zero(u)) continue;
    const Rational lambda = random_rational(rng, 1, 5, 3);
    EXPECT_EQ(face_in_direction(p, u), face_in_direction(p, lambda * u));
  }
}

TEST(FacetNormals, Examples) {
  const Polytope seg = hull({V({0, 0}), V({1, 0})});
  EXPECT_EQ(sorted(facet_normals(seg)), (std::vector<RVector>{V({-1, 0}), V({1, 0})}));
  // Edges of T by brute force: x = 0 (outward -e1), y = 0 (outward -e2), x + y = 1 (outward (1,1)).
  EXPECT_EQ(sorted(facet_normals(unit_triangle())), (std::vector<RVector>{V({-1, 0}), V({0, -1}), V({1, 1})}));
}

TEST(CoordinateVolume, Examples) {
  EXPECT_EQ(coordinate_volume(unit_cube(), standard_basis(3)), 1);
  const Polytope simplex = hull({V({0, 0, 0}), V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})});
  EXPECT_EQ(coordinate_volume(simplex, standard_basis(3)), Q("1/6"));
  // e2 - e1 = -1 * (1,-1): one unit in that basis.
  const Polytope edge = hull({V({1, 0}), V({0, 1})});
  EXPECT_EQ(coordinate_volume(edge, {V({1, -1})}), 1);
  EXPECT_EQ(coordinate_volume(edge, {V({2, -2})}), Q("1/2"));
}

TEST(CoordinateVolume, RejectsBasisNotSpanningDirections) {
  const Polytope edge = hull({V({1, 0}), V({0, 1})});
  EXPECT_THROW(coordinate_volume(edge, {V({1, 0})}), DomainError);
  EXPECT_THROW(coordinate_volume(edge, {V({1, -1}), V({1, 1})}), DomainError);
  EXPECT_THROW(coordinate_volume(unit_square(), {V({1, 0}), V({2, 0})}), DomainError);
}

TEST(CoordinateVolume, AgreesWithConeOracle) {
  Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const Polytope p = random_polytope(rng, 2 + trial % 3, 0, 12);
    EXPECT_EQ(volume(p), cone_volume_oracle(p));
  }
}

TEST(CoordinateVolume, AdditiveUnderHyperplaneSplits) {
  Rng rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const Polytope p = random_polytope(rng, 2 + trial % 3);
    const auto [a, b] = random_cut(rng, p);
    const auto [plus, minus] = split(p, a, b);
    ASSERT_TRUE(plus && minus);
    EXPECT_EQ(volume(p), volume(*plus) + volume(*minus));
  }
}

TEST(CoordinateVolume, ScalesWithDilation) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Polytope p = random_polytope(rng, n);
    const Rational lambda = random_rational(rng, 1, 4, 3);
    Rational power(1);
    for (std::size_t i = 0; i < n; ++i) power *= lambda;
    EXPECT_EQ(volume(dilate(p, lambda)), power * volume(p));
  }
}

TEST(Triangulation, CellsAreFullSimplicesWithDisjointInteriors) {
  Rng rng(18);
  for (int trial = 0; trial < 20; ++trial) {
    const Polytope p = random_polytope(rng, 2 + trial % 2, 5, 10);
    const auto& cells = p.triangulation();
    std::vector<Polytope> simplices;
    Rational sum(0);
    for (const auto& s : cells) {
      std::vector<RVector> pts;
      for (auto i : s) pts.push_back(p.vertices()[i]);
      simplices.push_back(hull(pts));
      EXPECT_TRUE(simplices.back().full_dimensional());
      sum += volume(simplices.back());
    }
    EXPECT_EQ(sum, volume(p));
    for (std::size_t i = 0; i < simplices.size(); ++i) {
      for (std::size_t j = i + 1; j < simplices.size(); ++j) EXPECT_TRUE(interiors_disjoint(simplices[i], simplices[j]));
    }
  }
}

TEST(Polytope, ConcurrentReadersSeeOneCache) {
  const Polytope p = hull({V({0, 0, 0}), V({3, 0, 0}), V({0, 3, 0}), V({0, 0, 3}), V({1, 1, 1}), V({2, 2, 2})});
  std::vector<const std::vector<Simplex>*> seen(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { seen[i] = &p.triangulation(); });
  for (auto& t : threads) t.join();
  for (auto* s : seen) EXPECT_EQ(s, seen[0]);
}

TEST(MinkowskiSum, Examples) {
  const Polytope e1 = hull({V({0, 0}), V({1, 0})});
  const Polytope e2 = hull({V({0, 0}), V({0, 1})});
  EXPECT_EQ(minkowski_sum(e1, e2), unit_square());
  const Polytope t = unit_triangle();
  EXPECT_EQ(minkowski_sum(t, hull({V({5, 7})})), translate(t, V({5, 7})));
  // Nine vertex sums of T and -T; the origin is interior, the other six are the hexagon.
  const Polytope diff = minkowski_sum(t, reflect(t));
  EXPECT_EQ(diff.vertices(),
            (std::vector<RVector>{V({-1, 0}), V({-1, 1}), V({0, -1}), V({0, 1}), V({1, -1}), V({1, 0})}));
  EXPECT_EQ(volume(diff), 3);
  EXPECT_THROW(minkowski_sum(t, unit_cube()), DomainError);
}

TEST(SimplexChain, Examples) {
  EXPECT_EQ(simplex_chain({V({1, 0})}), hull({V({0, 0}), V({1, 0})}));
  EXPECT_EQ(simplex_chain({V({1, 0}), V({0, 1})}), hull({V({0, 0}), V({1, 0}), V({1, 1})}));
  const Polytope s3 = simplex_chain({V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})});
  EXPECT_EQ(s3.dim(), 3u);
  EXPECT_EQ(volume(s3), Q("1/6"));
  EXPECT_THROW(simplex_chain({V({1, 2}), V({2, 4})}), DomainError);
  EXPECT_THROW(simplex_chain({}), DomainError);
}

TEST(Intersect, Examples) {
  const Polytope sq = unit_square();
  const auto shared = intersect(sq, box(V({1, 0}), V({2, 1})));
  ASSERT_TRUE(shared);
  EXPECT_EQ(shared->vertices(), (std::vector<RVector>{V({1, 0}), V({1, 1})}));
  EXPECT_FALSE(intersect(sq, box(V({2, 2}), V({3, 3}))));
  const auto half = intersect(sq, box({Q("1/2"), Q("0")}, {Q("3/2"), Q("1")}));
  ASSERT_TRUE(half);
  EXPECT_EQ(*half, box({Q("1/2"), Q("0")}, {Q("1"), Q("1")}));
  EXPECT_EQ(volume(*half), Q("1/2"));
}

TEST(Intersect, WithLowerDimensionalOperand) {
  const Polytope diag = hull({V({0, 0}), V({2, 2})});
  const auto cut = intersect(unit_square(), diag);
  ASSERT_TRUE(cut);
  EXPECT_EQ(*cut, hull({V({0, 0}), V({1, 1})}));
  const auto point = intersect(unit_square(), hull({{Q("1/2"), Q("1/2")}}));
  ASSERT_TRUE(point);
  EXPECT_EQ(point->dim(), 0u);
  EXPECT_FALSE(intersect(unit_square(), hull({V({2, 0}), V({2, 1})})));
}

TEST(Intersect, IsSymmetricAndContained) {
  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const Polytope a = random_polytope(rng, 2 + trial % 2);
    const Polytope b = random_polytope(rng, 2 + trial % 2);
    const auto ab = intersect(a, b);
    const auto ba = intersect(b, a);
    ASSERT_EQ(ab.has_value(), ba.has_value());
    if (!ab) continue;
    EXPECT_EQ(*ab, *ba);
    EXPECT_EQ(*intersect(a, *ab), *ab);
  }
}

TEST(AffineMaps, Examples) {
  EXPECT_EQ(dilate(unit_square(), 2), box(V({0, 0}), V({2, 2})));
  EXPECT_EQ(translate(unit_triangle(), V({5, 7})).vertices(),
            (std::vector<RVector>{V({5, 7}), V({5, 8}), V({6, 7})}));
  EXPECT_EQ(reflect(unit_triangle()), hull({V({0, 0}), V({-1, 0}), V({0, -1})}));
  EXPECT_THROW(dilate(unit_square(), 0), DomainError);
  EXPECT_THROW(dilate(unit_square(), -1), DomainError);
  EXPECT_THROW(translate(unit_square(), V({1})), DomainError);
}

TEST(AffineMaps, PreserveCombinatorics) {
  Rng rng(20);
  for (int trial = 0; trial < 30; ++trial) {
    const Polytope p = random_polytope(rng, 3);
    for (const Polytope& q : {dilate(p, random_rational(rng, 1, 3, 2)), translate(p, random_point(rng, 3)), reflect(p)}) {
      EXPECT_EQ(q.vertices().size(), p.vertices().size());
      EXPECT_EQ(q.facets().size(), p.facets().size());
      EXPECT_EQ(q.edges().size(), p.edges().size());
    }
  }
}

TEST(DisjointCopies, Examples) {
  const UnionBody one = disjoint_copies(unit_square(), 1);
  ASSERT_EQ(one.pieces().size(), 1u);
  EXPECT_EQ(one.pieces()[0], unit_square());

  const UnionBody four = disjoint_copies(unit_square(), 4);
  ASSERT_EQ(four.pieces().size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(four.pieces()[k].vertices()[0], V({2 * static_cast<long>(k), 0}));
  EXPECT_EQ(volume(four), 4);

  const UnionBody two = disjoint_copies(unit_triangle(), 2);
  EXPECT_EQ(two.pieces().size(), 2u);
  EXPECT_EQ(volume(two), 1);
  EXPECT_TRUE(interiors_disjoint(two.pieces()[0], two.pieces()[1]));

  EXPECT_THROW(disjoint_copies(hull({V({0, 0}), V({1, 0})}), 2), DomainError);
  EXPECT_THROW(disjoint_copies(unit_square(), 0), DomainError);
}

TEST(UnionBody, ValidatesPieces) {
  EXPECT_NO_THROW(UnionBody({unit_square(), box(V({1, 0}), V({2, 1}))}));
  EXPECT_THROW(UnionBody({unit_square(), box({Q("1/2"), Q("0")}, {Q("3/2"), Q("1")})}), DomainError);
  EXPECT_THROW(UnionBody({unit_square(), hull({V({3, 0}), V({4, 0})})}), DomainError);
  EXPECT_THROW(UnionBody({unit_square(), unit_cube()}), DomainError);
  EXPECT_THROW(UnionBody(std::vector<Polytope>{}), DomainError);
}
