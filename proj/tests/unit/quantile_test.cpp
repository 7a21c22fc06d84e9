#include <gtest/gtest.h>

#include "cquant/oracle.hpp"
#include "cquant/quantile.hpp"
#include "generators.hpp"

namespace cquant {
namespace {

const DataCloud kSquare({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const DataCloud kTriangle({{0, 0}, {1, 0}, {0, 1}});
const DataCloud kDiagonal({{0, 0}, {1, 1}});

Polyhedron orthant_from(Vector apex) {
  return Polyhedron::from_vrep(2, VRep{{std::move(apex)}, {{1, 0}, {0, 1}}, {}});
}

TEST(QuantileRegion, DiagonalUpperLevel) {
  const QuantileRegion r = quantile_region(kDiagonal, QuantileLevel(Rational(3, 4), 2), Cone::orthant(2));
  EXPECT_TRUE(poly_equal(r.region, orthant_from({1, 1})));
  EXPECT_EQ(r.provenance, Provenance::ConeQuantile);
}

TEST(QuantileRegion, DiagonalLowerLevel) {
  const QuantileRegion r = quantile_region(kDiagonal, QuantileLevel(Rational(1, 4), 2), Cone::orthant(2));
  EXPECT_TRUE(poly_equal(r.region, orthant_from({0, 0})));
}

TEST(QuantileRegion, UnivariateHalfLine) {
  const DataCloud x({{1}, {2}, {3}, {4}, {5}});
  const QuantileRegion r = quantile_region(x, QuantileLevel(Rational(1, 2), 5), Cone::orthant(1));
  EXPECT_TRUE(poly_equal(r.region, Polyhedron::from_vrep(1, VRep{{{3}}, {{1}}, {}})));
}

TEST(QuantileRegion, RecessionContainsCone) {
  testing::InstanceRng rng(53);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = rng.index(1, 8);
    const DataCloud x = rng.cloud(n, 2, 5, 1);
    const Cone c = rng.cone(2);
    const QuantileRegion r = quantile_region(x, QuantileLevel(rng.level(n), n), c);
    if (r.empty()) continue;
    for (const auto& y : c.generators()) {
      for (const auto& h : r.halfspaces) EXPECT_GE(dot(h.normal, y), 0);
    }
  }
}

TEST(Lifting, Examples) {
  EXPECT_EQ(lift_dataset(DataCloud({{1, 2}})).points(), (std::vector<Vector>{{1, 2, -3}}));
  EXPECT_EQ(lift_dataset(DataCloud({{0, 0}})).points(), (std::vector<Vector>{{0, 0, 0}}));
  EXPECT_EQ(lift_dataset(DataCloud({{1}, {-1}})).points(), (std::vector<Vector>{{1, -1}, {-1, 1}}));
  EXPECT_EQ(unlift_normal({Rational(1, 5), Rational(3, 10), Rational(1, 2)}),
            (Vector{Rational(-3, 10), Rational(-1, 5)}));
  EXPECT_EQ(unlift_normal({1, 1, 1}), (Vector{0, 0}));
  EXPECT_EQ(unlift_normal({1, 0, 0}), (Vector{1, 0}));
}

TEST(Lifting, InnerProductIdentity) {
  testing::InstanceRng rng(59);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = rng.index(1, 4);
    const DataCloud x = rng.cloud(3, d, 10, 3);
    const DataCloud lx = lift_dataset(x);
    Vector w = rng.vector(d + 1, 5, 4);
    for (auto& c : w) c = c.abs();
    const Vector lam = unlift_normal(w);
    for (std::size_t k = 0; k < x.size(); ++k) EXPECT_EQ(dot(w, lx[k]), dot(lam, x[k]));
  }
}

TEST(TukeyRegion, SquareCorners) {
  const QuantileRegion r = tukey_region(kSquare, QuantileLevel(Rational(3, 10), 4));
  EXPECT_EQ(r.region.vrep().vertices, (std::vector<Vector>{{Rational(1, 2), Rational(1, 2)}}));
  EXPECT_TRUE(r.region.is_bounded());
  EXPECT_EQ(r.provenance, Provenance::TukeyLifted);
}

TEST(TukeyRegion, TriangleEmpty) {
  EXPECT_TRUE(tukey_region(kTriangle, QuantileLevel(Rational(2, 5), 3)).empty());
}

TEST(TukeyRegion, SinglePoint) {
  for (const auto& p : {Rational(1, 3), Rational(1, 2), Rational(9, 10)}) {
    const QuantileRegion r = tukey_region(DataCloud({{0, 0}}), QuantileLevel(p, 1));
    EXPECT_EQ(r.region.vrep().vertices, (std::vector<Vector>{{0, 0}}));
    EXPECT_TRUE(r.region.is_bounded());
  }
}

TEST(TukeyRegion, RemoveRedundantKeepsRegion) {
  RegionOptions opt;
  opt.remove_redundant = true;
  const QuantileRegion a = tukey_region(kSquare, QuantileLevel(Rational(3, 10), 4));
  const QuantileRegion b = tukey_region(kSquare, QuantileLevel(Rational(3, 10), 4), opt);
  EXPECT_TRUE(poly_equal(a.region, b.region));
  EXPECT_LE(b.halfspaces.size(), a.halfspaces.size());
}

TEST(Membership, Examples) {
  const QuantileLevel level(Rational(3, 10), 4);
  EXPECT_TRUE(region_membership(kSquare, level, ZeroCone{}, {Rational(1, 2), Rational(1, 2)}));
  EXPECT_FALSE(region_membership(kSquare, level, ZeroCone{}, {Rational(2, 5), Rational(1, 2)}));
  EXPECT_TRUE(region_membership(kDiagonal, QuantileLevel(Rational(3, 4), 2), Cone::orthant(2), {1, 1}));
}

TEST(TukeyDepth, SquareCorners) {
  EXPECT_EQ(tukey_depth(kSquare, {Rational(1, 2), Rational(1, 2)}), 2u);
  EXPECT_EQ(tukey_depth(kSquare, {0, 0}), 1u);
  EXPECT_EQ(tukey_depth(kSquare, {5, 5}), 0u);
}

TEST(RegionLaws, PlanarTukey) {
  testing::InstanceRng rng(61);
  for (int i = 0; i < 12; ++i) {
    const std::size_t n = rng.index(2, 8);
    const DataCloud x = rng.cloud(n, 2, 6, 2);
    Rational p1 = rng.level(n), p2 = rng.level(n);
    if (p2 < p1) std::swap(p1, p2);
    const QuantileRegion r1 = tukey_region(x, QuantileLevel(p1, n));
    const QuantileRegion r2 = tukey_region(x, QuantileLevel(p2, n));
    EXPECT_TRUE(poly_contains(r1.region, r2.region));

    const Vector b = rng.vector(2, 4, 3);
    EXPECT_TRUE(poly_equal(tukey_region(testing::translate(x, b), r1.level).region,
                           testing::translate(r1.region, b)));
    const Rational a(rng.integer(1, 7), rng.integer(1, 5));
    EXPECT_TRUE(poly_equal(tukey_region(testing::scale(x, a), r1.level).region, testing::scale(r1.region, a)));

    for (const auto& xi : x.points()) {
      if (r1.contains(xi)) EXPECT_GE(tukey_depth(x, xi), r1.level.ceil_np());
    }
  }
}

}  // namespace
}  // namespace cquant
