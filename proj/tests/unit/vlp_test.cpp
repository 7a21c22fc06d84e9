#include <gtest/gtest.h>

#include <algorithm>

#include "cquant/error.hpp"
#include "cquant/univariate.hpp"
#include "cquant/vlp.hpp"
#include "generators.hpp"

namespace cquant {
namespace {

Polyhedron hpoly(std::size_t d, std::vector<Halfspace> h) { return Polyhedron::from_hrep(d, HRep{std::move(h), {}}); }

TEST(EtaCoordinates, OrthantPlane) {
  const DualConeBasis b = make_dual_basis(Cone::orthant(2), Vector{1, 1});
  const Vector w{Rational(1, 3), Rational(2, 3)};
  EXPECT_EQ(eta_of(w, b), (Vector{Rational(1, 3)}));
  EXPECT_EQ(w_of(eta_of(w, b), b), w);
}

TEST(EtaCoordinates, NegativeLastInteriorCoordinate) {
  const DualConeBasis b = make_dual_basis(validate_cone({{1, 0}, {1, -2}}), Vector{1, -1});
  const Vector w{2, 1};
  EXPECT_EQ(eta_of(w, b), (Vector{-2}));
  EXPECT_EQ(w_of(Vector{-2}, b), w);
}

TEST(EtaCoordinates, OneDimensional) {
  const DualConeBasis b = make_dual_basis(Cone::orthant(1), Vector{2});
  EXPECT_TRUE(eta_of(Vector{Rational(1, 2)}, b).empty());
  EXPECT_EQ(w_of(Vector{}, b), (Vector{Rational(1, 2)}));
}

TEST(EtaCoordinates, RoundTripRandomCones) {
  testing::InstanceRng rng(43);
  for (int i = 0; i < 60; ++i) {
    const std::size_t d = rng.index(1, 4);
    const DualConeBasis b = make_dual_basis(rng.cone(d));
    const Vector eta = rng.vector(d - 1, 5, 3);
    const Vector w = w_of(eta, b);
    EXPECT_EQ(dot(b.interior_external(), w), 1);
    EXPECT_EQ(eta_of(w, b), eta);
  }
}

TEST(InitialOuter, OrthantPlane) {
  const Polyhedron p = initial_outer(make_dual_basis(Cone::orthant(2), Vector{1, 1}));
  EXPECT_TRUE(poly_equal(p, hpoly(2, {{{1, 0}, 0}, {{-1, 0}, -1}, {{0, 1}, 0}})));
}

TEST(InitialOuter, OneDimensional) {
  const Polyhedron p = initial_outer(make_dual_basis(Cone::orthant(1), Vector{1}));
  EXPECT_TRUE(poly_equal(p, hpoly(1, {{{1}, 0}})));
}

TEST(InitialOuter, LiftedPlanarOrthant) {
  const Polyhedron p = initial_outer(make_dual_basis(Cone::orthant(3), Vector{1, 1, 1}));
  EXPECT_TRUE(poly_equal(p, hpoly(3, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{-1, -1, 0}, -1}, {{0, 0, 1}, 0}})));
}

TEST(Benson, OneDimensionalLine) {
  const DataCloud x({{1}, {2}, {3}, {4}, {5}});
  const QuantileLevel level(Rational(1, 2), 5);
  const DualSolution s = benson_dual_solve(x, level, make_dual_basis(Cone::orthant(1)), {true, false});
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].w, (Vector{1}));
  EXPECT_EQ(s.entries[0].t, 3);
  EXPECT_EQ(s.entries[0].image.mu, phi_eval({1, 2, 3, 4, 5}, level, 3));
  const std::vector<Halfspace> h = halfspaces_of(s);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], (Halfspace{{1}, 3}));
}

TEST(Benson, TwoPointDiagonal) {
  const DataCloud x({{0, 0}, {1, 1}});
  const DualConeBasis b = make_dual_basis(Cone::orthant(2), Vector{1, 1});
  const DualSolution hi = benson_dual_solve(x, QuantileLevel(Rational(3, 4), 2), b, {true, false});
  const std::vector<Halfspace> h = halfspaces_of(hi);
  EXPECT_NE(std::find(h.begin(), h.end(), Halfspace{{1, 0}, 1}), h.end());
  EXPECT_NE(std::find(h.begin(), h.end(), Halfspace{{0, 1}, 1}), h.end());
  const DualSolution lo = benson_dual_solve(x, QuantileLevel(Rational(1, 4), 2), b, {true, false});
  for (const auto& e : lo.entries) EXPECT_EQ(e.t, 0);
}

TEST(Benson, EmptySolutionIsRejected) {
  DualSolution empty{{}, Polyhedron::from_hrep(1, HRep{}), {}, {}, {}};
  try {
    halfspaces_of(empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySolution);
  }
}

TEST(Benson, InvariantsOnRandomInstances) {
  testing::InstanceRng rng(47);
  for (int i = 0; i < 40; ++i) {
    const std::size_t d = rng.index(1, 3);
    const std::size_t n = rng.index(1, 8);
    const DataCloud x = rng.cloud(n, d, 6, 2);
    const QuantileLevel level(rng.level(n), n);
    const DualConeBasis b = make_dual_basis(rng.cone(d));
    const DualSolution s = benson_dual_solve(x, level, b, {true, true});

    for (const auto& v : s.image.vrep().vertices) {
      Vector eta(v.begin(), v.end() - 1);
      EXPECT_EQ(v.back(), minimize_phi(project_data(x, w_of(eta, b)), level).value);
    }
    for (const auto& e : s.entries) {
      const Vector a = project_data(x, e.w);
      EXPECT_EQ(e.t, quantile_direct(a, level));
      EXPECT_GE(phi_directional_derivative(a, level, e.t), 0);
      Rational below;
      bool any = false;
      for (const auto& y : a) {
        if (y < e.t && (!any || y > below)) {
          below = y;
          any = true;
        }
      }
      if (any) EXPECT_LT(phi_directional_derivative(a, level, below), 0);
    }
    for (std::size_t k = 1; k < s.history.size(); ++k) {
      EXPECT_TRUE(poly_contains(s.history[k - 1], s.history[k]));
    }
    // Cuts hold at D(w', g(w')) for sampled w' in the basis.
    for (int k = 0; k < 15; ++k) {
      Vector w(d);
      for (const auto& r : b.dual_rays()) {
        const Rational c(rng.integer(0, 5));
        for (std::size_t j = 0; j < d; ++j) w[j] += c * r[j];
      }
      const Rational cw = dot(b.interior_external(), w);
      if (cw.is_zero()) continue;
      for (auto& c : w) c /= cw;
      Vector point = eta_of(w, b);
      point.push_back(minimize_phi(project_data(x, w), level).value);
      for (const auto& cut : s.cuts) EXPECT_TRUE(cut.halfspace.contains(point));
    }
    std::vector<Vector> pts = x.points();
    std::shuffle(pts.begin(), pts.end(), rng.engine());
    const DualSolution s2 = benson_dual_solve(DataCloud(pts), level, b);
    EXPECT_EQ(s.entries, s2.entries);
  }
}

}  // namespace
}  // namespace cquant
